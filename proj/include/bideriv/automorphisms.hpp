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

#ifndef BIDERIV_AUTOMORPHISMS_HPP
#define BIDERIV_AUTOMORPHISMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bideriv/polynomial.hpp"

namespace bideriv {

/// n x n matrix over K.
class SquareMatrix {
public:
    SquareMatrix(std::size_t n, Field field = {});
    /// DomainError unless rows form a non-empty square matrix.
    explicit SquareMatrix(const std::vector<std::vector<Scalar>>& rows);

    static SquareMatrix identity(std::size_t n, Field field = {});
    /// Row i has its single 1 in column perm[i].
    static SquareMatrix permutation(const std::vector<std::size_t>& perm, Field field = {});
    static SquareMatrix diagonal(const std::vector<Scalar>& diag);

    std::size_t size() const noexcept { return n_; }
    const Field& field() const noexcept { return field_; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    SquareMatrix transpose() const;
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_;
    Field field_;
    std::vector<Scalar> entries_;
};

/// Algebra endomorphism x_i -> h_i of (A[n], .), phi(f) = f(h_1, ..., h_n).
class Substitution {
public:
    explicit Substitution(std::vector<Polynomial> images);

    static Substitution identity(std::size_t n, Field field = {});

    std::size_t size() const noexcept { return images_.size(); }
    const Field& field() const noexcept { return images_.front().field(); }
    const Polynomial& operator[](std::size_t i) const { return images_[i]; }
    const std::vector<Polynomial>& images() const noexcept { return images_; }

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::vector<Polynomial> images_;
};

Polynomial substitute(const Polynomial& f, const Substitution& s);

/// outer after inner: x_i -> outer(inner(x_i)).
Substitution compose(const Substitution& outer, const Substitution& inner);

/// x_j -> sum_k a_kj x_k (column j of A gives the image of x_j).
Substitution induced_map(const SquareMatrix& a);

/// A^T A == I exactly.
bool is_orthogonal(const SquareMatrix& a);

struct AutomorphismVerdict {
    bool preserves_circ = false;
    /// First (i, j), 0-based, with h_i o h_j != delta_ij.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    /// h_i o h_j at the failing pair.
    std::optional<Polynomial> failing_value;
    /// Random (f, g) with phi(f o g) != phi(f) o phi(g), if any.
    std::optional<std::pair<Polynomial, Polynomial>> failing_sample;
    std::size_t samples_checked = 0;
};

/// Checks h_i o h_j = delta_ij for all i <= j, then spot-checks
/// phi(f o g) = phi(f) o phi(g) on `samples` random pairs of degree <= 4.
/// The verdict rests on the first test; the samples must agree with it.
AutomorphismVerdict check_substitution(const Substitution& s, std::size_t samples = 8, std::uint64_t seed = 1);

/// check_substitution(induced_map(a)); positive exactly for orthogonal a.
AutomorphismVerdict check_automorphism(const SquareMatrix& a, std::size_t samples = 8, std::uint64_t seed = 1);

struct ComposeVerdict {
    /// induced_map(B) after induced_map(A) equals induced_map(BA).
    bool group_law = false;
    bool inputs_orthogonal = false;
    std::string note;
};

ComposeVerdict compose_check(const SquareMatrix& a, const SquareMatrix& b);

/// ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)). DomainError if 1 + t^2 = 0.
std::pair<Scalar, Scalar> rotation_parameters(const Scalar& t);

/// Deterministic element of O(n, K): a signed permutation times a few
/// planar rotations with rational parameters.
SquareMatrix rational_orthogonal_sample(std::uint64_t seed, std::size_t n, Field field = {});

struct AffineMap {
    Scalar lambda;
    Scalar mu;
};

/// (l1, m1) . (l2, m2) = (l1 l2, l1 m2 + m1), the law of (K, +) x| {+-1}.
AffineMap affine_product(const AffineMap& a, const AffineMap& b);
/// x -> lambda x + mu on A[1].
Substitution affine_substitution(const AffineMap& a);

struct Aut1Verdict {
    bool is_automorphism = false;
    /// h o h for h = lambda x + mu; equals lambda^2.
    Scalar h_circ_h;
    /// Substitution composition agrees with affine_product.
    bool composition_law = false;
    /// (lambda, -lambda mu) inverts the map; only checked for automorphisms.
    bool inverse_ok = false;
};

Aut1Verdict aut_dim1(const Scalar& lambda, const Scalar& mu);

} // namespace bideriv

#endif // BIDERIV_AUTOMORPHISMS_HPP
