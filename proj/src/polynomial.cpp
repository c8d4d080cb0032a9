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

#include "bideriv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bideriv/errors.hpp"

namespace bideriv {

Monomial Monomial::unit(std::size_t n, std::size_t i)
{
    Monomial u(n);
    u.exps_.at(i) = 1;
    return u;
}

std::uint64_t Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial& Monomial::operator*=(const Monomial& rhs)
{
    if (size() != rhs.size()) throw DimensionMismatch("monomial length mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += rhs.exps_[i];
    return *this;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.exps_ <=> b.exps_;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t n, const Scalar& c)
{
    Polynomial p(n, c.field());
    p.add_term(Monomial(n), c);
    return p;
}

Polynomial Polynomial::constant(std::size_t n, Field field, long long c)
{
    return constant(n, Scalar::from_integer(field, c));
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i, Field field)
{
    if (i >= n) throw PreconditionError("variable index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(n));
    return term(Monomial::unit(n, i), field);
}

Polynomial Polynomial::term(const Monomial& u, const Scalar& c)
{
    Polynomial p(u.size(), c.field());
    p.add_term(u, c);
    return p;
}

Polynomial Polynomial::term(const Monomial& u, Field field)
{
    return term(u, Scalar::one(field));
}

std::optional<std::uint64_t> Polynomial::degree() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Scalar Polynomial::coefficient(const Monomial& u) const
{
    auto it = terms_.find(u);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar Polynomial::constant_term() const
{
    return coefficient(Monomial(n_));
}

const Polynomial::TermMap::value_type& Polynomial::leading_term() const
{
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& u, const Scalar& c)
{
    if (u.size() != n_) throw DimensionMismatch("monomial of length " + std::to_string(u.size()) + " in A[" + std::to_string(n_) + "]");
    if (!(c.field() == field_)) throw FieldMismatch("coefficient in " + c.field().name() + " added to polynomial over " + field_.name());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(u, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_compatible(const Polynomial& other) const
{
    if (n_ != other.n_) {
        throw DimensionMismatch("ambient dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
    if (!(field_ == other.field_)) throw FieldMismatch("field mismatch: " + field_.name() + " vs " + other.field_.name());
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    require_compatible(rhs);
    for (const auto& [u, c] : rhs.terms_) add_term(u, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    require_compatible(rhs);
    for (const auto& [u, c] : rhs.terms_) add_term(u, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs)
{
    require_compatible(rhs);
    Polynomial product(n_, field_);
    for (const auto& [u, a] : terms_) {
        for (const auto& [v, b] : rhs.terms_) product.add_term(u * v, a * b);
    }
    terms_ = std::move(product.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c)
{
    if (!(c.field() == field_)) throw FieldMismatch("scalar in " + c.field().name() + " times polynomial over " + field_.name());
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [u, a] : terms_) a *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p(*this);
    for (auto& [u, a] : p.terms_) a = -a;
    return p;
}

Polynomial Polynomial::pow(std::uint64_t e) const
{
    Polynomial result = constant(n_, field_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::scaled(long long c) const
{
    return *this * Scalar::from_integer(field_, c);
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.n_ == b.n_ && a.field_ == b.field_ && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------

VectorField::VectorField(std::size_t n, Field field) : field_(field), components_(n, Polynomial(n, field)) {}

VectorField::VectorField(std::vector<Polynomial> components) : components_(std::move(components))
{
    if (components_.empty()) throw PreconditionError("vector field needs at least one component");
    field_ = components_.front().field();
    for (const auto& c : components_) {
        if (c.ambient() != components_.size()) {
            throw DimensionMismatch("vector field component in A[" + std::to_string(c.ambient()) + "] but field has " +
                                    std::to_string(components_.size()) + " components");
        }
        if (!(c.field() == field_)) throw FieldMismatch("vector field components over different fields");
    }
}

bool VectorField::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

// ---------------------------------------------------------------------------

Polynomial partial_derivative(const Polynomial& f, std::size_t i)
{
    if (i >= f.ambient()) {
        throw PreconditionError("variable index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(f.ambient()));
    }
    Polynomial d(f.ambient(), f.field());
    for (const auto& [u, c] : f.terms()) {
        if (u[i] == 0) continue;
        Monomial v = u;
        --v[i];
        d.add_term(v, c * Scalar::from_integer(f.field(), static_cast<long long>(u[i])));
    }
    return d;
}

VectorField gradient(const Polynomial& f)
{
    std::vector<Polynomial> parts;
    parts.reserve(f.ambient());
    for (std::size_t i = 0; i < f.ambient(); ++i) parts.push_back(partial_derivative(f, i));
    return VectorField(std::move(parts));
}

Polynomial apply_field(const VectorField& v, const Polynomial& g)
{
    if (v.ambient() != g.ambient()) {
        throw DimensionMismatch("vector field on A[" + std::to_string(v.ambient()) + "] applied to A[" +
                                std::to_string(g.ambient()) + "]");
    }
    Polynomial result(g.ambient(), g.field());
    for (std::size_t i = 0; i < v.ambient(); ++i) {
        if (v[i].is_zero()) continue;
        result += v[i] * partial_derivative(g, i);
    }
    return result;
}

Polynomial circ(const Polynomial& f, const Polynomial& g)
{
    f.require_compatible(g);
    Polynomial result(f.ambient(), f.field());
    for (std::size_t i = 0; i < f.ambient(); ++i) {
        auto fi = partial_derivative(f, i);
        if (fi.is_zero()) continue;
        result += fi * partial_derivative(g, i);
    }
    return result;
}

Polynomial iterated_circ(std::size_t k, std::uint64_t times, const Polynomial& f)
{
    const auto xk = Polynomial::variable(f.ambient(), k, f.field());
    Polynomial result = f;
    for (std::uint64_t step = 0; step < times && !result.is_zero(); ++step) result = circ(xk, result);
    return result;
}

VectorField lie_bracket(const VectorField& v, const VectorField& w)
{
    if (v.ambient() != w.ambient()) throw DimensionMismatch("lie bracket of vector fields on different spaces");
    std::vector<Polynomial> parts;
    parts.reserve(v.ambient());
    for (std::size_t k = 0; k < v.ambient(); ++k) parts.push_back(apply_field(v, w[k]) - apply_field(w, v[k]));
    return VectorField(std::move(parts));
}

VectorField bracket_with_square(const Polynomial& f)
{
    const std::size_t n = f.ambient();
    std::vector<Polynomial> first;
    for (std::size_t i = 0; i < n; ++i) first.push_back(partial_derivative(f, i));

    std::vector<Polynomial> parts(n, Polynomial(n, f.field()));
    for (std::size_t i = 0; i < n; ++i) {
        if (first[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (first[j].is_zero()) continue;
            const auto fij = partial_derivative(first[i], j);
            if (fij.is_zero()) continue;
            const auto weight = first[i] * first[j];
            for (std::size_t k = 0; k < n; ++k) {
                const auto fijk = partial_derivative(fij, k);
                if (!fijk.is_zero()) parts[k] += weight * fijk;
            }
        }
    }
    for (auto& p : parts) p = p.scaled(2);
    return VectorField(std::move(parts));
}

std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& f)
{
    std::map<std::uint64_t, Polynomial> parts;
    for (const auto& [u, c] : f.terms()) {
        auto [it, inserted] = parts.try_emplace(u.degree(), f.ambient(), f.field());
        it->second.add_term(u, c);
    }
    return parts;
}

Polynomial associator(const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    return circ(circ(f, g), h) - circ(f, circ(g, h));
}

Polynomial jacobiator(const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    return circ(circ(f, g), h) + circ(circ(g, h), f) + circ(circ(h, f), g);
}

} // namespace bideriv
