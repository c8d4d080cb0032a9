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

#include "bideriv/sampling.hpp"

namespace bideriv {

std::uint64_t Sampler::below(std::uint64_t bound)
{
    return bound == 0 ? 0 : rng_() % bound;
}

long long Sampler::between(long long lo, long long hi)
{
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Scalar Sampler::scalar(Field field, long long range)
{
    const auto num = between(-range, range);
    const auto den = field.is_rational() ? between(1, range) : 1;
    return Scalar::from_fraction(field, num, den);
}

Scalar Sampler::nonzero_scalar(Field field, long long range)
{
    for (;;) {
        auto s = scalar(field, range);
        if (!s.is_zero()) return s;
    }
}

Monomial Sampler::monomial(std::size_t n, std::uint64_t degree)
{
    Monomial u(n);
    for (std::uint64_t d = 0; d < degree; ++d) ++u[below(n)];
    return u;
}

Polynomial Sampler::polynomial(std::size_t n, std::uint64_t max_degree, Field field, std::size_t max_terms)
{
    Polynomial f(n, field);
    const auto terms = below(max_terms + 1);
    for (std::uint64_t t = 0; t < terms; ++t) f.add_term(monomial(n, below(max_degree + 1)), nonzero_scalar(field));
    return f;
}

Polynomial Sampler::homogeneous(std::size_t n, std::uint64_t k, Field field, std::size_t max_terms)
{
    Polynomial f(n, field);
    const auto terms = below(max_terms + 1);
    for (std::uint64_t t = 0; t < terms; ++t) f.add_term(monomial(n, k), nonzero_scalar(field));
    return f;
}

Polynomial Sampler::nonzero_polynomial(std::size_t n, std::uint64_t max_degree, Field field, std::size_t max_terms)
{
    for (;;) {
        auto f = polynomial(n, max_degree, field, max_terms);
        if (!f.is_zero()) return f;
    }
}

Polynomial Sampler::nonzero_homogeneous(std::size_t n, std::uint64_t k, Field field, std::size_t max_terms)
{
    for (;;) {
        auto f = homogeneous(n, k, field, max_terms);
        if (!f.is_zero()) return f;
    }
}

SymMatrix Sampler::sym_matrix(std::size_t n, Field field)
{
    SymMatrix m(n, field);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) m.set(i, j, scalar(field));
    }
    return m;
}

} // namespace bideriv
