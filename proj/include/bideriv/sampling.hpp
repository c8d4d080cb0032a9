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

#ifndef BIDERIV_SAMPLING_HPP
#define BIDERIV_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "bideriv/jordan.hpp"
#include "bideriv/polynomial.hpp"

namespace bideriv {

/// Deterministic generator of random algebra elements. Draws reduce raw
/// 64-bit output with modulo rather than std distributions so that a given
/// seed produces the same stream on every standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Uniform-ish in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// In [lo, hi].
    long long between(long long lo, long long hi);

    /// Small nonzero-denominator rational (or residue) with numerator in
    /// [-range, range] and denominator in [1, range].
    Scalar scalar(Field field, long long range = 5);
    Scalar nonzero_scalar(Field field, long long range = 5);

    Monomial monomial(std::size_t n, std::uint64_t degree);
    /// Up to max_terms random terms of total degree <= max_degree.
    Polynomial polynomial(std::size_t n, std::uint64_t max_degree, Field field = {}, std::size_t max_terms = 6);
    /// Up to max_terms random terms of total degree exactly k.
    Polynomial homogeneous(std::size_t n, std::uint64_t k, Field field = {}, std::size_t max_terms = 6);
    Polynomial nonzero_polynomial(std::size_t n, std::uint64_t max_degree, Field field = {}, std::size_t max_terms = 6);
    Polynomial nonzero_homogeneous(std::size_t n, std::uint64_t k, Field field = {}, std::size_t max_terms = 6);

    SymMatrix sym_matrix(std::size_t n, Field field = {});

private:
    std::mt19937_64 rng_;
};

} // namespace bideriv

#endif // BIDERIV_SAMPLING_HPP
