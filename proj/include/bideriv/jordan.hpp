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

#ifndef BIDERIV_JORDAN_HPP
#define BIDERIV_JORDAN_HPP

#include <cstddef>
#include <vector>

#include "bideriv/polynomial.hpp"

namespace bideriv {

/// n x n symmetric matrix over K, an element of H_n(K).
class SymMatrix {
public:
    SymMatrix(std::size_t n, Field field = {});
    /// Throws DomainError unless rows form a symmetric square matrix.
    explicit SymMatrix(const std::vector<std::vector<Scalar>>& rows);

    static SymMatrix identity(std::size_t n, Field field = {});
    /// e_ii for i == j, e_ij + e_ji otherwise (0-based).
    static SymMatrix unit(std::size_t n, std::size_t i, std::size_t j, Field field = {});

    std::size_t size() const noexcept { return n_; }
    const Field& field() const noexcept { return field_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    /// Sets both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, const Scalar& value);

    SymMatrix& operator+=(const SymMatrix& rhs);
    SymMatrix& operator*=(const Scalar& c);
    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator*(SymMatrix a, const Scalar& c) { return a *= c; }
    friend SymMatrix operator*(const Scalar& c, SymMatrix a) { return a *= c; }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

    void require_compatible(const SymMatrix& other) const;

private:
    std::size_t n_;
    Field field_;
    std::vector<Scalar> entries_;
};

/// q_A = X A X^T.
Polynomial quadratic_form(const SymMatrix& a);

/// xi : A_2[n] -> H_n(K), q_A -> 4A. DomainError unless q is homogeneous
/// of degree 2 (zero is accepted).
SymMatrix xi(const Polynomial& q);

/// Inverse of xi: M -> q_{M/4}.
Polynomial xi_inverse(const SymMatrix& m);

/// A o B = (AB + BA) / 2.
SymMatrix matrix_jordan(const SymMatrix& a, const SymMatrix& b);

/// q_A o q_B - 4 q_{A o B}; identically zero.
Polynomial check_xi_homomorphism(const SymMatrix& a, const SymMatrix& b);

/// x o (y o x^2) - (x o y) o x^2 with x^2 = x o x.
Polynomial jordan_defect_j2(const Polynomial& x, const Polynomial& y);

/// e = (x_1^2 + ... + x_n^2) / 4, the unit of A_2[n].
Polynomial unit(std::size_t n, Field field = {});

/// Residuals of the Jordan bimodule identities for x, y acting on m.
struct BimoduleDefects {
    /// x o m - m o x
    Polynomial r1;
    /// x o (x^2 o m) - x^2 o (x o m)
    Polynomial r2;
    /// (x^2 o y) o m + 2 x o (y o (x o m)) - x^2 o (y o m) - 2 (x o y) o (x o m)
    Polynomial r3;

    bool all_zero() const { return r1.is_zero() && r2.is_zero() && r3.is_zero(); }
};

BimoduleDefects bimodule_defects(const Polynomial& x, const Polynomial& y, const Polynomial& m);

/// Element (quad, lin) of A_2[n] (+) A_1[n].
class GradedPair {
public:
    /// DomainError unless quad is in A_2[n] and lin in A_1[n].
    GradedPair(Polynomial quad, Polynomial lin);

    const Polynomial& quad() const noexcept { return quad_; }
    const Polynomial& lin() const noexcept { return lin_; }

    GradedPair& operator+=(const GradedPair& rhs);
    friend GradedPair operator+(GradedPair a, const GradedPair& b) { return a += b; }
    GradedPair operator-() const { return GradedPair(-quad_, -lin_); }
    friend GradedPair operator-(GradedPair a, const GradedPair& b) { return a += -b; }

    friend bool operator==(const GradedPair&, const GradedPair&) = default;

private:
    Polynomial quad_;
    Polynomial lin_;
};

/// (a2, a1) . (b2, b1) = (a2 o b2, a1 o b2 + a2 o b1).
GradedPair semidirect_product(const GradedPair& p, const GradedPair& q);

/// J2 residual of the semidirect product.
GradedPair jordan_defect_j2(const GradedPair& x, const GradedPair& y);

/// (f o g) o h for f, g, h of degree <= 1; always zero.
/// PreconditionError if any argument has degree above 1.
Polynomial radical_nilpotency_check(const Polynomial& f, const Polynomial& g, const Polynomial& h);

} // namespace bideriv

#endif // BIDERIV_JORDAN_HPP
