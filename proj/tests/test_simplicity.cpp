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

#include <doctest.h>

#include <set>

#include "bideriv/errors.hpp"
#include "bideriv/sampling.hpp"
#include "bideriv/simplicity.hpp"
#include "bideriv/weights.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bideriv;
using namespace bideriv::test;

namespace {

// Differentiates along u and reads the constant term.
Scalar reduce_oracle(const Polynomial& f, const Monomial& u)
{
    Polynomial g = f;
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::uint32_t e = 0; e < u[i]; ++e) g = oracle::derivative(g, i);
    }
    return g.constant_term();
}

}

TEST_SUITE("simplicity") {

TEST_CASE("dimension and distance helpers")
{
    CHECK(homogeneous_dimension(2, 2) == 3);
    CHECK(homogeneous_dimension(3, 5) == 21);
    CHECK(homogeneous_dimension(1, 9) == 1);
    CHECK(homogeneous_dimension(4, 0) == 1);
    CHECK(monomial_distance(Monomial{2, 0}, Monomial{0, 2}) == 4);
    CHECK(monomial_distance(Monomial{1, 1, 1}, Monomial{1, 1, 1}) == 0);
}

TEST_CASE("ideal reduction")
{
    CHECK(ideal_reduce(P("5*x1^2*x2 + x1", 2)) == Q(10));
    CHECK(ideal_reduce(P("7", 2)) == Q(7));
    CHECK(ideal_reduce(P("x1", 1)) == Q(1));
    CHECK(ideal_reduce(P("-2/3*x1^3*x2^2*x3", 3)) == Q(-8));
    CHECK_THROWS_AS(ideal_reduce(Polynomial(2)), PreconditionError);
    CHECK_THROWS_AS(ideal_reduce(P("x1", 1, Field::prime(5))), CharacteristicError);

    Sampler rng(51);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.below(3);
        const auto f = rng.nonzero_polynomial(n, 5);
        const auto& [u, a] = f.leading_term();
        mpz_class weight = 1;
        for (std::size_t i = 0; i < n; ++i) weight *= oracle::factorial(u[i]);
        const auto r = ideal_reduce(f);
        CHECK_FALSE(r.is_zero());
        CHECK(r == a * Scalar::from_integer(Field{}, weight));
        CHECK(r == reduce_oracle(f, u));
    }
}

TEST_CASE("separating cartan elements")
{
    const auto h = separating_cartan(2, 2);
    CHECK(h.coeffs() == std::vector<Scalar>{Q(2), Q(6)});
    CHECK(separating_cartan(1, 7).coeffs() == std::vector<Scalar>{Q(2)});
    CHECK(separating_cartan(3, 1).coeffs() == std::vector<Scalar>{Q(2), Q(4), Q(8)});
    const auto w = weights_of_degree(2, 2);
    CHECK(w[0].evaluate(h) == Q(2));
    CHECK(w[1].evaluate(h) == Q(4));
    CHECK(w[2].evaluate(h) == Q(6));

    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::uint64_t k = 0; k <= 6; ++k) {
            const auto y = separating_cartan(n, k);
            std::set<mpq_class> seen;
            for (const auto& wt : weights_of_degree(n, k)) seen.insert(wt.evaluate(y).rational());
            CHECK(seen.size() == homogeneous_dimension(n, k));
        }
    }
}

TEST_CASE("eigen split")
{
    const auto h = separating_cartan(2, 2);
    const auto parts = eigen_split(P("x1^2 + x1*x2", 2), h);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == P("x1^2", 2));
    CHECK(parts[1] == P("x1*x2", 2));
    CHECK(eigen_split(P("3*x1*x2", 2), h) == std::vector<Polynomial>{P("3*x1*x2", 2)});
    CHECK(eigen_split(Polynomial(2), h).empty());
    CHECK_THROWS_AS(eigen_split(P("x1^2 + x2^2", 2), CartanElement::unit(2)), SeparationError);
    CHECK_THROWS_AS(eigen_split(P("x1^2 + x1", 2), h), DomainError);
    try {
        eigen_split(P("x1^2 + x2^2", 2), CartanElement::unit(2));
    } catch (const SeparationError& e) {
        const std::string what = e.what();
        CHECK(what.find("x1^2") != std::string::npos);
        CHECK(what.find("x2^2") != std::string::npos);
    }

    Sampler rng(52);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng.below(3);
        const auto k = rng.below(5);
        const auto f = rng.homogeneous(n, k, {}, 10);
        const auto split = eigen_split(f, separating_cartan(n, k));
        Polynomial total(n);
        for (const auto& p : split) {
            CHECK(p.size() == 1);
            CHECK(f.terms().count(p.leading_term().first) == 1);
            total += p;
        }
        CHECK(total == f);
        CHECK(split.size() == f.size());
    }
}

TEST_CASE("transfer operators")
{
    const TransferOperator t(0, 1);
    CHECK(t.generator(2) == P("x1*x2", 2));
    CHECK(t.apply(P("x1^2", 2)) == P("2*x1*x2", 2));
    CHECK(t.apply(P("x1*x2", 2)) == P("x1^2 + x2^2", 2));
    CHECK(TransferOperator(0, 1).apply(P("x3^4", 3)).is_zero());
    CHECK_THROWS_AS(TransferOperator(1, 1), PreconditionError);
}

TEST_CASE("one transfer step lowers the distance by two")
{
    const std::size_t n = 3;
    for (std::uint64_t k = 1; k <= 4; ++k) {
        const auto basis = oracle::monomials(n, k);
        for (const auto& u : basis) {
            for (const auto& v : basis) {
                if (u == v) continue;
                const auto d = monomial_distance(u, v);
                bool reduced = false;
                for (std::size_t i = 0; i < n && !reduced; ++i) {
                    for (std::size_t j = 0; j < n && !reduced; ++j) {
                        if (i == j || u[i] <= v[i] || v[j] <= u[j]) continue;
                        const auto image = TransferOperator(i, j).apply(Polynomial::term(v, Field{}));
                        for (const auto& [w, c] : image.terms()) {
                            if (monomial_distance(u, w) + 2 == d) reduced = true;
                        }
                    }
                }
                CHECK(reduced);
            }
        }
    }
}

TEST_CASE("subspaces")
{
    Subspace s(2, 2);
    CHECK(s.ambient_dimension() == 3);
    CHECK(s.insert(P("x1^2 + x2^2", 2)));
    CHECK_FALSE(s.insert(P("2*x1^2 + 2*x2^2", 2)));
    CHECK(s.insert(P("x1^2 - x1*x2", 2)));
    CHECK(s.dimension() == 2);
    CHECK(s.contains(P("x1*x2 + x2^2", 2)));
    CHECK_FALSE(s.contains(P("x1*x2", 2)));
    const auto b = s.basis();
    REQUIRE(b.size() == 2);
    CHECK(b[0] == P("x1^2 + x2^2", 2));
    CHECK(b[1] == P("x1*x2 + x2^2", 2));
    CHECK_THROWS_AS(s.insert(P("x1", 2)), PreconditionError);
    CHECK_THROWS_AS(Subspace(2, 2, Field::prime(5)), CharacteristicError);
}

TEST_CASE("bimodule closure")
{
    CHECK(bimodule_closure(P("x1*x2", 2), 2).dimension() == 3);
    CHECK(bimodule_closure(P("x1^4", 1), 4).is_full());
    const auto c = bimodule_closure(P("x1*x2*x3", 3), 3);
    CHECK(c.dimension() == 10);
    CHECK(c.is_full());
    CHECK_THROWS_AS(bimodule_closure(Polynomial(2), 2), PreconditionError);
    CHECK_THROWS_AS(bimodule_closure(P("x1^2", 2), 3), PreconditionError);
    CHECK_THROWS_AS(bimodule_closure(P("x1^2 + x1", 2), 2), PreconditionError);
    CHECK_THROWS_AS(bimodule_closure(P("x1^2", 2, Field::prime(7)), 2), CharacteristicError);
}

TEST_CASE("closure matches a dense reference")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::uint64_t k = 0; k <= 4; ++k) {
            for (const auto& u : oracle::monomials(n, k)) {
                const auto seed = Polynomial::term(u, Field{});
                CHECK(bimodule_closure(seed, k).dimension() == oracle::closure_dimension(seed, k));
            }
        }
    }
    Sampler rng(53);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + rng.below(3);
        const auto k = rng.below(5);
        const auto seed = rng.nonzero_homogeneous(n, k);
        CHECK(bimodule_closure(seed, k).dimension() == oracle::closure_dimension(seed, k));
    }
}

TEST_CASE("closing a closure changes nothing")
{
    Sampler rng(54);
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 1 + rng.below(3);
        const auto k = rng.below(4);
        const auto c = bimodule_closure(rng.nonzero_homogeneous(n, k), k);
        for (const auto& b : c.basis()) {
            const auto again = bimodule_closure(b, k);
            CHECK(again.dimension() <= c.dimension());
            for (const auto& v : again.basis()) CHECK(c.contains(v));
        }
    }
}

TEST_CASE("simplicity verdicts")
{
    const auto r = is_simple_bimodule(2, 3);
    CHECK(r.simple());
    CHECK(r.expected_dimension == 4);
    CHECK(r.seeds_checked >= 4);
    for (std::uint64_t k = 0; k <= 6; ++k) CHECK(is_simple_bimodule(1, k).simple());
    const auto big = is_simple_bimodule(3, 5, 4);
    CHECK(big.simple());
    CHECK(big.expected_dimension == 21);
    CHECK_THROWS_AS(is_simple_bimodule(2, 2, 8, 1, Field::prime(5)), CharacteristicError);
}

}
