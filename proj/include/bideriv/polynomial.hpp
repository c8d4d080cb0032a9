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

#ifndef BIDERIV_POLYNOMIAL_HPP
#define BIDERIV_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

#include "bideriv/scalar.hpp"

namespace bideriv {

/// Exponent vector u of X^u = x_1^{u_1} ... x_n^{u_n}.
///
/// Ordered graded-lexicographically: total degree first, then the
/// exponent vectors lexicographically (x_1 heaviest).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

    static Monomial unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
    std::uint64_t degree() const;

    Monomial& operator*=(const Monomial& rhs);
    friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::uint32_t> exps_;
};

/// Element of A[n] = K[x_1, ..., x_n] in canonical sparse form: no stored
/// coefficient is zero, every monomial has length n.
///
/// Variables are addressed 0-based in this API (index i is x_{i+1}).
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar>;

    explicit Polynomial(std::size_t n, Field field = {}) : n_(n), field_(field) {}

    static Polynomial constant(std::size_t n, const Scalar& c);
    static Polynomial constant(std::size_t n, Field field, long long c);
    static Polynomial variable(std::size_t n, std::size_t i, Field field = {});
    static Polynomial term(const Monomial& u, const Scalar& c);
    static Polynomial term(const Monomial& u, Field field = {});

    std::size_t ambient() const noexcept { return n_; }
    const Field& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Total degree; nullopt is the -infinity marker of the zero polynomial.
    std::optional<std::uint64_t> degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;
    Scalar coefficient(const Monomial& u) const;
    /// Constant term, zero if absent.
    Scalar constant_term() const;
    /// Graded-lex greatest term; the polynomial must be nonzero.
    const TermMap::value_type& leading_term() const;

    /// Adds c*X^u, dropping the entry if the coefficient cancels.
    void add_term(const Monomial& u, const Scalar& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Scalar& c) { return lhs *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial rhs) { return rhs *= c; }
    Polynomial operator-() const;

    Polynomial pow(std::uint64_t e) const;
    /// Multiplies by an integer mapped into K.
    Polynomial scaled(long long c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Throws DimensionMismatch / FieldMismatch unless compatible.
    void require_compatible(const Polynomial& other) const;

private:
    std::size_t n_;
    Field field_;
    TermMap terms_;
};

/// Sum a_i d/dx_i, component i is the coefficient of d/dx_{i+1}.
class VectorField {
public:
    VectorField(std::size_t n, Field field = {});
    explicit VectorField(std::vector<Polynomial> components);

    std::size_t ambient() const noexcept { return components_.size(); }
    const Field& field() const noexcept { return field_; }
    const Polynomial& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Polynomial>& components() const noexcept { return components_; }
    bool is_zero() const;

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    Field field_;
    std::vector<Polynomial> components_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t i);

VectorField gradient(const Polynomial& f);

/// V(g) = sum_i V_i dg/dx_i.
Polynomial apply_field(const VectorField& v, const Polynomial& g);

/// The standard symmetric biderivation f o g = sum_i f_i g_i.
Polynomial circ(const Polynomial& f, const Polynomial& g);

/// x_k o (x_k o (... o f)) with `times` applications, i.e. the
/// `times`-th partial derivative in x_k. Only powers of a single variable
/// are given a meaning; o-powers of general elements are not defined.
Polynomial iterated_circ(std::size_t k, std::uint64_t times, const Polynomial& f);

/// Commutator [V, W], component k = sum_i (V_i dW_k/dx_i - W_i dV_k/dx_i).
VectorField lie_bracket(const VectorField& v, const VectorField& w);

/// [grad f, grad (f o f)] via the closed form 2 sum_{i,j,k} f_i f_j f_ijk d/dx_k.
VectorField bracket_with_square(const Polynomial& f);

/// Degree -> nonzero homogeneous component.
std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& f);

/// (f o g) o h - f o (g o h)
Polynomial associator(const Polynomial& f, const Polynomial& g, const Polynomial& h);

/// (f o g) o h + (g o h) o f + (h o f) o g
Polynomial jacobiator(const Polynomial& f, const Polynomial& g, const Polynomial& h);

} // namespace bideriv

#endif // BIDERIV_POLYNOMIAL_HPP
