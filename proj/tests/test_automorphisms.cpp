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

#include "bideriv/automorphisms.hpp"
#include "bideriv/errors.hpp"
#include "bideriv/sampling.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bideriv;
using namespace bideriv::test;

namespace {

SquareMatrix rotation()
{
    return SquareMatrix({{Q(3, 5), Q(-4, 5)}, {Q(4, 5), Q(3, 5)}});
}

// A^T A computed entrywise.
bool orthogonal_oracle(const SquareMatrix& a)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s(a.field());
            for (std::size_t k = 0; k < n; ++k) s += a(k, i) * a(k, j);
            if (!(s == Scalar::from_integer(a.field(), i == j ? 1 : 0))) return false;
        }
    }
    return true;
}

}

TEST_SUITE("automorphisms") {

TEST_CASE("matrices")
{
    const auto p = SquareMatrix::permutation({1, 2, 0});
    CHECK(p(0, 1) == Q(1));
    CHECK(p(2, 0) == Q(1));
    CHECK(p * p.transpose() == SquareMatrix::identity(3));
    CHECK(SquareMatrix::diagonal({Q(2), Q(3)}) * SquareMatrix::diagonal({Q(5), Q(7)}) == SquareMatrix::diagonal({Q(10), Q(21)}));
    CHECK_THROWS_AS(SquareMatrix::permutation({0, 0}), PreconditionError);
    CHECK_THROWS_AS(SquareMatrix({{Q(1), Q(2)}, {Q(3)}}), PreconditionError);
    CHECK_THROWS_AS(SquareMatrix::identity(2) * SquareMatrix::identity(3), DimensionMismatch);
}

TEST_CASE("substitution")
{
    const Substitution s({P("x1 + x2", 2), P("x2", 2)});
    CHECK(substitute(P("x1^2", 2), s) == P("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(substitute(P("x1^3*x2 - 4", 2), Substitution::identity(2)) == P("x1^3*x2 - 4", 2));
    const Substitution swap({P("x2", 2), P("x1", 2)});
    CHECK(substitute(P("x1*x2", 2), swap) == P("x1*x2", 2));
    CHECK(substitute(P("x1^2 + 3", 2), swap) == P("x2^2 + 3", 2));
    CHECK_THROWS_AS(substitute(P("x1", 3), s), DimensionMismatch);

    const Substitution shift({P("x1 + 1", 1)});
    const Substitution dbl({P("2*x1", 1)});
    // As ring maps, compose(outer, inner) applies inner first.
    CHECK(compose(shift, dbl)[0] == P("2*x1 + 2", 1));
    CHECK(compose(dbl, shift)[0] == P("2*x1 + 1", 1));
    const auto f = P("x1^3 - x1", 1);
    CHECK(substitute(f, compose(shift, dbl)) == substitute(substitute(f, dbl), shift));
}

TEST_CASE("induced maps")
{
    CHECK(induced_map(SquareMatrix::identity(3)) == Substitution::identity(3));
    const auto perm = induced_map(SquareMatrix::permutation({1, 0}));
    CHECK(perm[0] == P("x2", 2));
    CHECK(perm[1] == P("x1", 2));
    const auto r = induced_map(rotation());
    CHECK(r[0] == P("3/5*x1 + 4/5*x2", 2));
    CHECK(r[1] == P("-4/5*x1 + 3/5*x2", 2));
}

TEST_CASE("orthogonality")
{
    CHECK(is_orthogonal(SquareMatrix::identity(4)));
    CHECK(is_orthogonal(SquareMatrix::diagonal({Q(1), Q(-1)})));
    CHECK(is_orthogonal(rotation()));
    CHECK_FALSE(is_orthogonal(SquareMatrix::diagonal({Q(2), Q(1)})));
    CHECK(is_orthogonal(SquareMatrix::diagonal({Scalar::from_integer(Field::prime(5), 4), Scalar::from_integer(Field::prime(5), 1)})));
}

TEST_CASE("automorphism verdicts")
{
    const auto ok = check_automorphism(rotation());
    CHECK(ok.preserves_circ);
    CHECK_FALSE(ok.failing_pair);
    CHECK(ok.samples_checked == 8);

    const auto bad = check_automorphism(SquareMatrix::diagonal({Q(2), Q(1)}));
    CHECK_FALSE(bad.preserves_circ);
    REQUIRE(bad.failing_pair);
    CHECK(*bad.failing_pair == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(*bad.failing_value == P("4", 2));

    // Nonlinear substitutions are caught by the spot checks.
    const auto shear = check_substitution(Substitution({P("x1 + x2^2", 2), P("x2", 2)}), 8, 3);
    CHECK_FALSE(shear.preserves_circ);

    const auto translate = check_substitution(Substitution({P("x1 + 3", 2), P("x2 - 1", 2)}));
    CHECK(translate.preserves_circ);
}

TEST_CASE("composition")
{
    CHECK(compose_check(SquareMatrix::identity(2), SquareMatrix::identity(2)).group_law);
    const auto v = compose_check(rotation(), SquareMatrix::diagonal({Q(1), Q(-1)}));
    CHECK(v.group_law);
    CHECK(v.inputs_orthogonal);
    const auto p = SquareMatrix::permutation({1, 2, 0});
    const auto q = SquareMatrix::permutation({0, 2, 1});
    CHECK(compose_check(p, q).group_law);
    CHECK(compose(induced_map(q), induced_map(p)) == induced_map(q * p));
    const auto lin = compose_check(SquareMatrix::diagonal({Q(2), Q(1)}), rotation());
    CHECK(lin.group_law);
    CHECK_FALSE(lin.inputs_orthogonal);
    CHECK_FALSE(lin.note.empty());
}

TEST_CASE("rational rotations")
{
    const auto [c, s] = rotation_parameters(Q(1, 2));
    CHECK(c == Q(3, 5));
    CHECK(s == Q(4, 5));
    const auto [c0, s0] = rotation_parameters(Q(0));
    CHECK(c0 == Q(1));
    CHECK(s0 == Q(0));
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto a = rational_orthogonal_sample(seed, n);
            CHECK(is_orthogonal(a));
            CHECK(orthogonal_oracle(a));
        }
    }
    const auto f7 = Field::prime(7);
    for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(orthogonal_oracle(rational_orthogonal_sample(seed, 3, f7)));
}

TEST_CASE("orthogonal substitutions preserve the grading and invert by transpose")
{
    Sampler rng(71);
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const std::size_t n = 1 + rng.below(4);
        const auto a = rational_orthogonal_sample(seed, n);
        const auto phi = induced_map(a);
        const auto k = rng.below(5);
        const auto f = rng.homogeneous(n, k);
        const auto image = substitute(f, phi);
        CHECK(image.is_homogeneous());
        if (!f.is_zero()) CHECK(image.degree() == k);
        CHECK(compose(induced_map(a.transpose()), phi) == Substitution::identity(n));
        CHECK(substitute(image, induced_map(a.transpose())) == f);

        const auto g = rng.polynomial(n, 4);
        const auto h = rng.polynomial(n, 4);
        CHECK(substitute(circ(g, h), phi) == circ(substitute(g, phi), substitute(h, phi)));
    }
}

TEST_CASE("automorphisms of the polynomial ring in one variable")
{
    const auto a = aut_dim1(Q(-1), Q(5));
    CHECK(a.is_automorphism);
    CHECK(a.h_circ_h == Q(1));
    CHECK(a.composition_law);
    CHECK(a.inverse_ok);
    const auto b = aut_dim1(Q(2), Q(0));
    CHECK_FALSE(b.is_automorphism);
    CHECK(b.h_circ_h == Q(4));
    CHECK(aut_dim1(Q(1), Q(0)).is_automorphism);
    CHECK(affine_substitution({Q(1), Q(0)}) == Substitution::identity(1));

    const auto ab = affine_product({Q(-1), Q(2)}, {Q(1), Q(3)});
    CHECK(ab.lambda == Q(-1));
    CHECK(ab.mu == Q(-1));
    const AffineMap x{Q(-1), Q(7, 3)};
    const AffineMap y{Q(1), Q(-2)};
    CHECK(compose(affine_substitution(y), affine_substitution(x)) == affine_substitution(affine_product(x, y)));
}

}
