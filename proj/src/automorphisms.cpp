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

#include "bideriv/automorphisms.hpp"

#include <numeric>

#include "bideriv/errors.hpp"
#include "bideriv/sampling.hpp"

namespace bideriv {

SquareMatrix::SquareMatrix(std::size_t n, Field field) : n_(n), field_(field), entries_(n * n, Scalar(field)) {}

SquareMatrix::SquareMatrix(const std::vector<std::vector<Scalar>>& rows) : n_(rows.size())
{
    if (n_ == 0 || rows.front().size() != n_) throw PreconditionError("matrix is not square");
    field_ = rows.front().front().field();
    for (const auto& row : rows) {
        if (row.size() != n_) throw PreconditionError("matrix is not square");
        for (const auto& x : row) {
            if (!(x.field() == field_)) throw FieldMismatch("matrix entries over different fields");
            entries_.push_back(x);
        }
    }
}

SquareMatrix SquareMatrix::identity(std::size_t n, Field field)
{
    SquareMatrix m(n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

SquareMatrix SquareMatrix::permutation(const std::vector<std::size_t>& perm, Field field)
{
    SquareMatrix m(perm.size(), field);
    std::vector<bool> used(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= perm.size() || used[perm[i]]) throw PreconditionError("not a permutation");
        used[perm[i]] = true;
        m(i, perm[i]) = Scalar::one(field);
    }
    return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Scalar>& diag)
{
    if (diag.empty()) throw PreconditionError("empty diagonal");
    SquareMatrix m(diag.size(), diag.front().field());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

SquareMatrix SquareMatrix::transpose() const
{
    SquareMatrix t(n_, field_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b)
{
    if (a.n_ != b.n_) throw DimensionMismatch("matrix size mismatch");
    SquareMatrix c(a.n_, a.field_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t j = 0; j < a.n_; ++j) {
            Scalar sum(a.field_);
            for (std::size_t k = 0; k < a.n_; ++k) sum += a(i, k) * b(k, j);
            c(i, j) = sum;
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

Substitution::Substitution(std::vector<Polynomial> images) : images_(std::move(images))
{
    if (images_.empty()) throw PreconditionError("substitution needs n >= 1");
    for (const auto& h : images_) {
        if (h.ambient() != images_.size()) throw DimensionMismatch("substitution image outside A[n]");
        images_.front().require_compatible(h);
    }
}

Substitution Substitution::identity(std::size_t n, Field field)
{
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i, field));
    return Substitution(std::move(images));
}

Polynomial substitute(const Polynomial& f, const Substitution& s)
{
    if (f.ambient() != s.size()) throw DimensionMismatch("substitution on A[" + std::to_string(s.size()) + "] applied to A[" +
                                                         std::to_string(f.ambient()) + "]");
    if (!(f.field() == s.field())) throw FieldMismatch("substitution over a different field");
    const std::size_t n = f.ambient();
    std::vector<std::vector<Polynomial>> powers(n);
    for (std::size_t i = 0; i < n; ++i) powers[i].push_back(Polynomial::constant(n, f.field(), 1));
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * s[i]);
        return powers[i][e];
    };

    Polynomial result(n, f.field());
    for (const auto& [u, c] : f.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] > 0) term *= power(i, u[i]);
        }
        result += term;
    }
    return result;
}

Substitution compose(const Substitution& outer, const Substitution& inner)
{
    std::vector<Polynomial> images;
    for (const auto& h : inner.images()) images.push_back(substitute(h, outer));
    return Substitution(std::move(images));
}

Substitution induced_map(const SquareMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial h(n, a.field());
        for (std::size_t k = 0; k < n; ++k) h.add_term(Monomial::unit(n, k), a(k, j));
        images.push_back(std::move(h));
    }
    return Substitution(std::move(images));
}

bool is_orthogonal(const SquareMatrix& a)
{
    return a.transpose() * a == SquareMatrix::identity(a.size(), a.field());
}

AutomorphismVerdict check_substitution(const Substitution& s, std::size_t samples, std::uint64_t seed)
{
    const std::size_t n = s.size();
    const Field field = s.field();
    AutomorphismVerdict verdict;
    for (std::size_t i = 0; i < n && !verdict.failing_pair; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto value = circ(s[i], s[j]);
            if (!(value == Polynomial::constant(n, field, i == j ? 1 : 0))) {
                verdict.failing_pair = {i, j};
                verdict.failing_value = std::move(value);
                break;
            }
        }
    }
    if (verdict.failing_pair) return verdict;

    Sampler sampler(seed);
    for (std::size_t t = 0; t < samples; ++t) {
        const auto f = sampler.polynomial(n, 4, field, 4);
        const auto g = sampler.polynomial(n, 4, field, 4);
        ++verdict.samples_checked;
        if (!(substitute(circ(f, g), s) == circ(substitute(f, s), substitute(g, s)))) {
            verdict.failing_sample = {f, g};
            return verdict;
        }
    }
    verdict.preserves_circ = true;
    return verdict;
}

AutomorphismVerdict check_automorphism(const SquareMatrix& a, std::size_t samples, std::uint64_t seed)
{
    return check_substitution(induced_map(a), samples, seed);
}

ComposeVerdict compose_check(const SquareMatrix& a, const SquareMatrix& b)
{
    ComposeVerdict verdict;
    verdict.inputs_orthogonal = is_orthogonal(a) && is_orthogonal(b);
    verdict.group_law = compose(induced_map(b), induced_map(a)) == induced_map(b * a);
    if (!verdict.inputs_orthogonal) {
        verdict.note = "inputs are not both orthogonal; the law was checked for linear substitutions only";
    }
    return verdict;
}

std::pair<Scalar, Scalar> rotation_parameters(const Scalar& t)
{
    const auto one = Scalar::one(t.field());
    const auto denom = one + t * t;
    if (denom.is_zero()) throw DomainError("1 + t^2 vanishes");
    const auto inv = denom.inverse();
    return {(one - t * t) * inv, Scalar::from_integer(t.field(), 2) * t * inv};
}

SquareMatrix rational_orthogonal_sample(std::uint64_t seed, std::size_t n, Field field)
{
    Sampler sampler(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[sampler.below(i)]);
    SquareMatrix m = SquareMatrix::permutation(perm, field);
    for (std::size_t i = 0; i < n; ++i) {
        if (sampler.below(2) == 1) {
            for (std::size_t j = 0; j < n; ++j) m(i, j) = -m(i, j);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sampler.below(3) == 0) continue;
            const auto t = sampler.scalar(field, 4);
            if ((Scalar::one(field) + t * t).is_zero()) continue;
            const auto [c, s] = rotation_parameters(t);
            auto g = SquareMatrix::identity(n, field);
            g(i, i) = c;
            g(i, j) = -s;
            g(j, i) = s;
            g(j, j) = c;
            m = m * g;
        }
    }
    return m;
}

AffineMap affine_product(const AffineMap& a, const AffineMap& b)
{
    return {a.lambda * b.lambda, a.lambda * b.mu + a.mu};
}

Substitution affine_substitution(const AffineMap& a)
{
    Polynomial h = Polynomial::variable(1, 0, a.lambda.field()) * a.lambda + Polynomial::constant(1, a.mu);
    return Substitution({std::move(h)});
}

Aut1Verdict aut_dim1(const Scalar& lambda, const Scalar& mu)
{
    if (!(lambda.field() == mu.field())) throw FieldMismatch("lambda and mu over different fields");
    const Field field = lambda.field();
    const AffineMap map{lambda, mu};
    const auto phi = affine_substitution(map);

    Aut1Verdict verdict;
    const auto hh = circ(phi[0], phi[0]);
    verdict.h_circ_h = hh.constant_term();
    verdict.is_automorphism = hh == Polynomial::constant(1, field, 1) && check_substitution(phi).preserves_circ;

    // affine_product(a, b) is x -> a(b(x)), i.e. substituting b into a's image.
    const AffineMap reference{Scalar::from_integer(field, -1), Scalar::one(field)};
    auto law_holds = [](const AffineMap& a, const AffineMap& b) {
        return compose(affine_substitution(b), affine_substitution(a)) == affine_substitution(affine_product(a, b));
    };
    verdict.composition_law = law_holds(map, map) && law_holds(map, reference) && law_holds(reference, map);

    if (verdict.is_automorphism) {
        const AffineMap inverse{lambda, -(lambda * mu)};
        const auto identity = Substitution::identity(1, field);
        verdict.inverse_ok = compose(affine_substitution(inverse), phi) == identity &&
                             compose(phi, affine_substitution(inverse)) == identity;
    }
    return verdict;
}

} // namespace bideriv
