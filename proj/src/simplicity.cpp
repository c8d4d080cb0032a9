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

#include "bideriv/simplicity.hpp"

#include <deque>
#include <string>

#include "bideriv/errors.hpp"
#include "bideriv/format.hpp"
#include "bideriv/sampling.hpp"

namespace bideriv {

namespace {

void require_char_zero(const Field& field, const char* what)
{
    if (!field.is_rational()) {
        throw CharacteristicError(std::string(what) + " requires characteristic 0; got " + field.name());
    }
}

} // namespace

std::uint64_t homogeneous_dimension(std::size_t n, std::uint64_t k)
{
    if (n == 0) return 0;
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n + k - 1, n - 1);
    return c.get_ui();
}

std::uint64_t monomial_distance(const Monomial& u, const Monomial& v)
{
    if (u.size() != v.size()) throw DimensionMismatch("monomials of different length");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] > v[i] ? u[i] - v[i] : v[i] - u[i];
    return d;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t n, std::uint64_t k, Field field)
    : n_(n), k_(k), field_(field), echelon_(homogeneous_dimension(n, k))
{
    require_char_zero(field, "subspace echelon arithmetic");
    for (const auto& w : weights_of_degree(n, k)) {
        column_of_.emplace(w.monomial(), monomials_.size());
        monomials_.push_back(w.monomial());
    }
}

std::vector<mpq_class> Subspace::coordinates(const Polynomial& f) const
{
    if (f.ambient() != n_ || !(f.field() == field_)) throw DimensionMismatch("polynomial outside the subspace's ambient space");
    std::vector<mpq_class> row(monomials_.size());
    for (const auto& [u, c] : f.terms()) {
        auto it = column_of_.find(u);
        if (it == column_of_.end()) {
            throw PreconditionError("term " + format_monomial(u) + " is not of degree " + std::to_string(k_));
        }
        row[it->second] = c.rational();
    }
    return row;
}

bool Subspace::insert(const Polynomial& f)
{
    return echelon_.insert(coordinates(f));
}

bool Subspace::contains(const Polynomial& f) const
{
    return echelon_.contains(coordinates(f));
}

std::vector<Polynomial> Subspace::basis() const
{
    std::vector<Polynomial> out;
    for (const auto& row : echelon_.reduced()) {
        Polynomial p(n_, field_);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] != 0) {
                p.add_term(monomials_[c], Scalar::from_fraction(field_, row[c].get_num(), row[c].get_den()));
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------

Scalar ideal_reduce(const Polynomial& f)
{
    require_char_zero(f.field(), "ideal reduction");
    if (f.is_zero()) throw PreconditionError("ideal reduction of the zero polynomial");
    const Monomial top = f.leading_term().first;
    Polynomial current = f;
    for (std::size_t k = 0; k < f.ambient(); ++k) current = iterated_circ(k, top[k], current);
    if (!current.is_constant()) throw InternalLogicError("ideal reduction did not reach a constant");
    return current.constant_term();
}

CartanElement separating_cartan(std::size_t n, std::uint64_t k, std::span<const Monomial> support, Field field)
{
    require_char_zero(field, "separating Cartan element");
    if (n == 0) throw PreconditionError("separating Cartan element needs n >= 1");
    for (const auto& u : support) {
        if (u.size() != n) throw DimensionMismatch("support monomial of wrong length");
        if (u.degree() != k) throw PreconditionError("support monomial " + format_monomial(u) + " is not of degree " + std::to_string(k));
    }
    std::vector<Scalar> y;
    mpz_class power = 1;
    for (std::size_t i = 0; i < n; ++i) {
        y.push_back(Scalar::from_integer(field, 2 * power));
        power *= static_cast<unsigned long>(k + 1);
    }
    return CartanElement(std::move(y));
}

std::vector<Polynomial> eigen_split(const Polynomial& f, const CartanElement& h0)
{
    if (h0.size() != f.ambient()) throw DimensionMismatch("Cartan element and polynomial of different dimension");
    if (!f.is_homogeneous()) throw DomainError("eigen_split needs a homogeneous polynomial");

    std::vector<Monomial> support;
    std::vector<Scalar> eigenvalues;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        support.push_back(it->first);
        eigenvalues.push_back(weight_of_monomial(it->first).evaluate(h0));
    }
    for (std::size_t a = 0; a < support.size(); ++a) {
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            if (eigenvalues[a] == eigenvalues[b]) {
                throw SeparationError("Cartan element does not separate " + format_monomial(support[a]) + " and " +
                                      format_monomial(support[b]) + " (both eigenvalue " + eigenvalues[a].to_string() + ")");
            }
        }
    }

    std::vector<Polynomial> components;
    for (std::size_t a = 0; a < support.size(); ++a) {
        Polynomial part = f;
        for (std::size_t b = 0; b < support.size(); ++b) {
            if (b == a) continue;
            part = (cartan_action(h0, part) - part * eigenvalues[b]) * (eigenvalues[a] - eigenvalues[b]).inverse();
        }
        components.push_back(std::move(part));
    }
    return components;
}

// ---------------------------------------------------------------------------

TransferOperator::TransferOperator(std::size_t i, std::size_t j) : i_(i), j_(j)
{
    if (i == j) throw PreconditionError("transfer operator needs distinct indices (i == j is the Cartan action)");
}

Polynomial TransferOperator::generator(std::size_t n, Field field) const
{
    return Polynomial::variable(n, i_, field) * Polynomial::variable(n, j_, field);
}

Polynomial TransferOperator::apply(const Polynomial& f) const
{
    return circ(generator(f.ambient(), f.field()), f);
}

Subspace bimodule_closure(const Polynomial& seed, std::uint64_t k)
{
    require_char_zero(seed.field(), "bimodule closure");
    if (seed.is_zero()) throw PreconditionError("bimodule closure of the zero polynomial");
    if (!seed.is_homogeneous() || *seed.degree() != k) {
        throw PreconditionError("seed is not homogeneous of degree " + std::to_string(k));
    }
    const std::size_t n = seed.ambient();
    const Field field = seed.field();

    std::vector<Polynomial> generators;
    for (std::size_t i = 0; i < n; ++i) generators.push_back(CartanElement::basis(n, i, field).to_polynomial());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) generators.push_back(TransferOperator(i, j).generator(n, field));
    }

    Subspace space(n, k, field);
    const std::uint64_t budget = space.ambient_dimension() * generators.size();
    std::uint64_t applications = 0;

    std::deque<Polynomial> frontier;
    space.insert(seed);
    frontier.push_back(seed);
    while (!frontier.empty() && !space.is_full()) {
        const Polynomial v = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            if (++applications > budget) throw InternalLogicError("bimodule closure did not stabilise within budget");
            auto image = circ(g, v);
            if (!image.is_zero() && space.insert(image)) frontier.push_back(std::move(image));
        }
    }
    return space;
}

SimplicityReport is_simple_bimodule(std::size_t n, std::uint64_t k, std::size_t random_seeds, std::uint64_t rng_seed, Field field)
{
    require_char_zero(field, "bimodule simplicity");
    if (n == 0) throw PreconditionError("simplicity check needs n >= 1");
    SimplicityReport report;
    report.n = n;
    report.k = k;
    report.expected_dimension = homogeneous_dimension(n, k);

    auto check = [&](const Polynomial& seed) {
        const auto closure = bimodule_closure(seed, k);
        ++report.seeds_checked;
        if (!closure.is_full()) report.failures.push_back({seed, closure.dimension()});
    };
    for (const auto& w : weights_of_degree(n, k)) check(Polynomial::term(w.monomial(), field));
    Sampler sampler(rng_seed);
    for (std::size_t s = 0; s < random_seeds; ++s) check(sampler.nonzero_homogeneous(n, k, field));
    return report;
}

} // namespace bideriv
