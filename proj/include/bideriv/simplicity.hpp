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

#ifndef BIDERIV_SIMPLICITY_HPP
#define BIDERIV_SIMPLICITY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "bideriv/echelon.hpp"
#include "bideriv/polynomial.hpp"
#include "bideriv/weights.hpp"

namespace bideriv {

/// dim A_k[n] = C(n + k - 1, n - 1).
std::uint64_t homogeneous_dimension(std::size_t n, std::uint64_t k);

/// l1 distance sum_i |u_i - v_i| between exponent vectors.
std::uint64_t monomial_distance(const Monomial& u, const Monomial& v);

/// Subspace of A_k[n] over Q. basis() is the reduced echelon form with
/// monic leading terms, pivots in descending graded-lex order.
class Subspace {
public:
    /// The zero subspace. CharacteristicError over F_p.
    Subspace(std::size_t n, std::uint64_t k, Field field = {});

    std::size_t ambient() const noexcept { return n_; }
    std::uint64_t degree() const noexcept { return k_; }
    std::size_t dimension() const noexcept { return echelon_.rank(); }
    std::uint64_t ambient_dimension() const noexcept { return monomials_.size(); }
    bool is_full() const noexcept { return dimension() == ambient_dimension(); }

    /// Returns true iff f enlarged the span. DomainError unless f is in A_k[n].
    bool insert(const Polynomial& f);
    bool contains(const Polynomial& f) const;
    std::vector<Polynomial> basis() const;

private:
    std::vector<mpq_class> coordinates(const Polynomial& f) const;

    std::size_t n_;
    std::uint64_t k_;
    Field field_;
    std::vector<Monomial> monomials_; // column -> monomial, descending graded-lex
    std::map<Monomial, std::size_t> column_of_;
    IntegerEchelon echelon_;
};

/// Applies x_k^{o i_k} for k = 1..n to the graded-lex greatest term a X^u of
/// f, returning the constant u_1! ... u_n! a, which is nonzero in
/// characteristic 0. PreconditionError for f = 0, CharacteristicError
/// over F_p.
Scalar ideal_reduce(const Polynomial& f);

/// h0 with coefficients y_i = 2 (k+1)^{i-1}. Its eigenvalue on X^u is
/// sum_i u_i (k+1)^{i-1}, the base-(k+1) number with digits u, so distinct
/// exponent vectors of degree k get distinct eigenvalues.
CartanElement separating_cartan(std::size_t n, std::uint64_t k, std::span<const Monomial> support = {}, Field field = {});

/// Projects homogeneous f onto the eigenspaces of pi(h0) by Lagrange
/// interpolation in the operator. Components follow the descending
/// graded-lex order of f's support. SeparationError if two support
/// monomials share an eigenvalue.
std::vector<Polynomial> eigen_split(const Polynomial& f, const CartanElement& h0);

/// pi(x_i x_j) = x_i d/dx_j + x_j d/dx_i for i != j.
class TransferOperator {
public:
    /// PreconditionError if i == j.
    TransferOperator(std::size_t i, std::size_t j);

    std::size_t first() const noexcept { return i_; }
    std::size_t second() const noexcept { return j_; }
    Polynomial generator(std::size_t n, Field field = {}) const;
    Polynomial apply(const Polynomial& f) const;

private:
    std::size_t i_;
    std::size_t j_;
};

/// Smallest subspace of A_k[n] containing seed and stable under
/// pi(x_i^2/4) for all i and pi(x_i x_j) for all i < j.
Subspace bimodule_closure(const Polynomial& seed, std::uint64_t k);

struct SimplicityReport {
    struct Failure {
        Polynomial seed;
        std::size_t dimension;
    };

    std::size_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t expected_dimension = 0;
    std::size_t seeds_checked = 0;
    std::vector<Failure> failures;

    bool simple() const { return failures.empty(); }
};

/// Closes every monomial of degree k and `random_seeds` random elements of
/// A_k[n]; A_k[n] is reported simple when all closures are full.
SimplicityReport is_simple_bimodule(std::size_t n, std::uint64_t k, std::size_t random_seeds = 8,
                                    std::uint64_t rng_seed = 1, Field field = {});

} // namespace bideriv

#endif // BIDERIV_SIMPLICITY_HPP
