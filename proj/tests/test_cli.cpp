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

#include <json.hpp>

#include "bideriv/cli.hpp"
#include "bideriv/errors.hpp"
#include "bideriv/json_io.hpp"
#include "bideriv/sampling.hpp"
#include "support.hpp"

using namespace bideriv;
using namespace bideriv::test;
using nlohmann::json;

namespace {

cli::CommandOutput run(std::vector<std::string> args, std::string_view input = {})
{
    return cli::run(args, input);
}

json run_json(std::vector<std::string> args, std::string_view input = {})
{
    args.push_back("--json");
    return json::parse(cli::run(args, input).out);
}

}

TEST_SUITE("cli") {

TEST_CASE("text output")
{
    CHECK(run({"circ", "-n", "2", "x1^2+x2^2", "x1*x2"}).out == "4*x1*x2\n");
    CHECK(run({"grad", "-n", "2", "x1*x2"}).out == "[x2, x1]\n");
    CHECK(run({"bracket", "-n", "2", "x1^2", "x1*x2"}).out == "[-2*x2, 2*x1]\n");
    CHECK(run({"assoc", "-n", "1", "x1^3", "x1^2", "x1"}).out == "12*x1^2\n");
    CHECK(run({"jacobi", "-n", "1", "x1^2", "x1^2", "x1^2"}).out == "48*x1^2\n");
    CHECK(run({"xi", "-n", "2", "x1^2"}).out == "4 0\n0 0\n");
    CHECK(run({"xi-inv", "-n", "2"}, R"({"n": 2, "entries": [["1", "0"], ["0", "1"]]})").out == "1/4*x1^2 + 1/4*x2^2\n");
    CHECK(run({"jordan-defect", "-n", "1", "x1^3", "x1"}).out == "108*x1^4\n");
    CHECK(run({"bimodule-defect", "-n", "1", "x1^2", "x1^2", "x1^3"}).out == "r1: 0\nr2: 0\nr3: 96*x1^3\n");
    CHECK(run({"reduce", "-n", "2", "5*x1^2*x2 + x1"}).out == "10\n");
    CHECK(run({"decompose", "-n", "2", "x1^2 + x1*x2"}).out == "(2,0)  beta1  x1^2\n(1,1)  1/2*beta1 + 1/2*beta2  x1*x2\n");
    CHECK(run({"circ", "-n", "1", "--field", "fp:5", "x1^3", "x1^2"}).out == "x1^3\n");
    CHECK(run({"circ", "-n", "1", "--", "-x1", "x1"}).out == "-1\n");
}

TEST_CASE("exit codes")
{
    CHECK(run({"circ", "-n", "2", "x1", "x2"}).exit_code == cli::kOk);
    CHECK(run({"simple", "-n", "2", "-k", "3"}).exit_code == cli::kOk);
    CHECK(run({"aut1", "2", "0"}).exit_code == cli::kNegative);
    CHECK(run({"aut1", "-1", "5"}).exit_code == cli::kOk);
    CHECK(run({"aut-check"}, R"({"n": 2, "entries": [[2, 0], [0, 1]]})").exit_code == cli::kNegative);
    CHECK(run({"aut-check"}, R"({"n": 2, "entries": [["3/5", "-4/5"], ["4/5", "3/5"]]})").exit_code == cli::kOk);
    CHECK(run({"xi", "-n", "1", "x1^3"}).exit_code == cli::kNegative);
    CHECK(run({"circ", "-n", "2", "x1 +", "x2"}).exit_code == cli::kParse);
    CHECK(run({"circ", "-n", "2", "x1"}).exit_code == cli::kParse);
    CHECK(run({"frobnicate"}).exit_code == cli::kParse);
    CHECK(run({}).exit_code == cli::kParse);
    CHECK(run({"aut-check"}, "{not json").exit_code == cli::kParse);
    CHECK(run({"reduce", "-n", "1", "--field", "fp:5", "x1"}).exit_code == cli::kPrecondition);
    CHECK(run({"reduce", "-n", "1", "0"}).exit_code == cli::kPrecondition);
    CHECK(run({"circ", "-n", "2", "--field", "fp:4", "x1", "x2"}).exit_code == cli::kPrecondition);
    CHECK(run({"closure", "-n", "2", "-k", "3", "x1^2"}).exit_code == cli::kPrecondition);
    CHECK(run({"closure", "-n", "2", "-k", "40", "x1^2"}).exit_code == cli::kPrecondition);
    CHECK(run({"xi-inv", "-n", "3"}, R"({"n": 2, "entries": [["1", "0"], ["0", "1"]]})").exit_code == cli::kPrecondition);
    CHECK(run({"circ", "--help"}).exit_code == cli::kOk);
}

TEST_CASE("json documents")
{
    const auto c = run_json({"circ", "-n", "2", "x1^2", "x1*x2"});
    CHECK(c["status"] == "ok");
    CHECK(c["command"] == "circ");
    CHECK(c["field"] == "q");
    CHECK(c["n"] == 2);
    CHECK(c["result"]["text"] == "2*x1*x2");
    CHECK(c["result"]["terms"][0]["exponents"] == json::array({1, 1}));
    CHECK(c["result"]["terms"][0]["coeff"] == "2");

    const auto e = run_json({"circ", "-n", "2", "x1 ** x2", "x1"});
    CHECK(e["status"] == "error");
    CHECK(e["kind"] == "parse");
    CHECK(e["offset"] == 4);
    CHECK_FALSE(e["expected"].empty());

    const auto s = run_json({"simple", "-n", "3", "-k", "2"});
    CHECK(s["result"]["simple"] == true);
    CHECK(s["result"]["expected_dimension"] == 6);

    const auto a = run_json({"aut-check"}, R"({"n": 2, "entries": [[2, 0], [0, 1]]})");
    CHECK(a["result"]["automorphism"] == false);
    CHECK(a["result"]["failing_pair"] == json::array({1, 1}));

    const auto cl = run_json({"closure", "-n", "3", "-k", "5", "x1*x2^2*x3^2"});
    CHECK(cl["result"]["dimension"] == 21);
    CHECK(cl["result"]["basis"].size() == 21);

    const auto pc = run_json({"peirce", "-n", "3"});
    CHECK(pc["result"]["parts"].size() == 6);
}

TEST_CASE("output is byte deterministic")
{
    const std::vector<std::vector<std::string>> invocations = {
        {"circ", "-n", "3", "x1^2*x3 + 1/2*x2", "x3^3 - x1*x2"},
        {"decompose", "-n", "3", "(x1+x2+x3)^3"},
        {"simple", "-n", "2", "-k", "4", "--seeds", "5", "--seed", "9"},
        {"closure", "-n", "2", "-k", "3", "x1^2*x2 + x2^3"},
        {"bracket", "-n", "2", "x1^3*x2", "x2^2 + x1"},
        {"peirce", "-n", "4"},
    };
    for (const auto& args : invocations) {
        for (const bool js : {false, true}) {
            auto a = args;
            if (js) a.push_back("--json");
            const auto first = run(a);
            const auto second = run(a);
            CHECK(first.out == second.out);
            CHECK(first.err == second.err);
            CHECK(first.exit_code == second.exit_code);
        }
    }
    const std::string m = R"({"n": 3, "entries": [[0, 1, 0], [0, 0, -1], [1, 0, 0]]})";
    CHECK(run({"aut-check", "--json"}, m).out == run({"aut-check", "--json"}, m).out);
}

TEST_CASE("json round trips")
{
    Sampler rng(61);
    for (const Field field : {Field::rationals(), Field::prime(11)}) {
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 1 + rng.below(3);
            const auto f = rng.polynomial(n, 5, field) * Scalar::from_fraction(field, 1, 3);
            CHECK(polynomial_from_json(polynomial_to_json(f), n, field) == f);
            const auto a = rng.sym_matrix(n, field);
            CHECK(matrix_from_json(matrix_to_json(a), field) == SquareMatrix(std::vector<std::vector<Scalar>>([&] {
                      std::vector<std::vector<Scalar>> rows(n);
                      for (std::size_t i = 0; i < n; ++i)
                          for (std::size_t j = 0; j < n; ++j) rows[i].push_back(a(i, j));
                      return rows;
                  }())));
        }
    }
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 2, "entries": [[1]]})"), {}), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 1, "entries": [["x"]]})"), {}), ParseError);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"({"terms": [{"exponents": [1, 2], "coeff": "1"}]})"), 1, {}), ParseError);

    const auto wrapped = run_json({"xi", "-n", "2", "x1*x2"});
    CHECK(matrix_from_json(wrapped, {}) == SquareMatrix({{Q(0), Q(2)}, {Q(2), Q(0)}}));
}

}
