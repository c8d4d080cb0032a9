/*
   Copyright 2026 The bideriv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BIDERIV_WEIGHTS_HPP
#define BIDERIV_WEIGHTS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bideriv/polynomial.hpp"

namespace bideriv {

/// h = sum_i a_i x_i^2 / 4 in the Cartan subalgebra spanned by the
/// idempotents x_i^2 / 4.
class CartanElement {
public:
    explicit CartanElement(std::vector<Scalar> coeffs);

    /// The idempotent x_{i+1}^2 / 4.
    static CartanElement basis(std::size_t n, std::size_t i, Field field = {});
    /// The unit e (all coefficients 1).
    static CartanElement unit(std::size_t n, Field field = {});

    std::size_t size() const noexcept { return coeffs_.size(); }
    const Field& field() const noexcept { return coeffs_.front().field(); }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }

    Polynomial to_polynomial() const;

private:
    std::vector<Scalar> coeffs_;
};

/// Weight beta = (1/2) sum_i u_i beta_i, stored as the exponent vector u.
/// Ordered graded-lexicographically like monomials.
class Weight {
public:
    explicit Weight(std::vector<std::uint32_t> u) : u_(std::move(u)) {}

    const std::vector<std::uint32_t>& u() const noexcept { return u_; }
    std::size_t size() const noexcept { return u_.size(); }
    std::uint64_t degree() const;
    Monomial monomial() const { return Monomial(u_); }

    /// beta(h) = (1/2) sum_i u_i a_i.
    Scalar evaluate(const CartanElement& h) const;

    friend Weight operator+(const Weight& a, const Weight& b);
    friend bool operator==(const Weight&, const Weight&) = default;
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

    /// "(2,1)"
    std::string to_string() const;
    /// In terms of the dual basis, e.g. "beta1 + 1/2*beta2"; "0" for zero.
    std::string to_beta_string() const;

private:
    std::vector<std::uint32_t> u_;
};

/// Weight -> nonzero component; each component is a multiple of X^u.
class WeightDecomposition {
public:
    WeightDecomposition(std::size_t n, Field field) : n_(n), field_(field) {}

    const std::map<Weight, Polynomial>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    /// Adds `part` to the component of weight w.
    void add(const Weight& w, const Polynomial& part);
    Polynomial sum() const;

private:
    std::size_t n_;
    Field field_;
    std::map<Weight, Polynomial> parts_;
};

/// [x_1^2/4, ..., x_n^2/4].
std::vector<Polynomial> idempotents(std::size_t n, Field field = {});

/// pi(h)(f) = h o f.
Polynomial cartan_action(const CartanElement& h, const Polynomial& f);

Weight weight_of_monomial(const Monomial& u);

/// Splits f by exponent vector; the zero polynomial gives no parts.
WeightDecomposition decompose(const Polynomial& f);

/// All weights with sum u_i = k in descending graded-lex order.
std::vector<Weight> weights_of_degree(std::size_t n, std::uint64_t k);

/// Basis x_i x_j (i <= j) of A_2[n], keyed by the weight (beta_i + beta_j)/2.
WeightDecomposition peirce_decomposition(std::size_t n, Field field = {});

struct ProductRuleVerdict {
    /// weight(X^u X^v) == a1 + a2
    bool product_law = false;
    /// every term of X^u o X^v has weight a1 + a2 - beta_i for some i
    bool circ_containment = false;
    /// Empty when both hold.
    std::string witness;

    bool holds() const { return product_law && circ_containment; }
};

ProductRuleVerdict product_rule_check(const Weight& a1, const Weight& a2, Field field = {});

} // namespace bideriv

#endif // BIDERIV_WEIGHTS_HPP
