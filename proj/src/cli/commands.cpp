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

#include "bideriv/cli.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bideriv/automorphisms.hpp"
#include "bideriv/errors.hpp"
#include "bideriv/format.hpp"
#include "bideriv/jordan.hpp"
#include "bideriv/json_io.hpp"
#include "bideriv/simplicity.hpp"
#include "bideriv/weights.hpp"

namespace bideriv::cli {

namespace {

using nlohmann::json;

struct Options {
    std::size_t n = 0;
    std::string field = "q";
    bool json = false;
    std::uint64_t max_degree = 16;
    std::uint64_t seed = 1;
    std::uint64_t k = 0;
    std::size_t seeds = 8;
    std::size_t samples = 8;
    std::vector<std::string> args;
};

struct Outcome {
    int exit_code = kOk;
    json payload;
    std::string text;
};

struct Invocation {
    const Options& opt;
    Field field;
    std::string_view stdin_text;

    ParseContext context() const { return {opt.n, field, opt.max_degree}; }

    Polynomial poly(std::size_t index) const
    {
        try {
            return parse_polynomial(opt.args.at(index), context());
        } catch (const ParseError& e) {
            throw ParseError(e.offset(), "argument " + std::to_string(index + 1) + ": " + e.message(), e.expected());
        }
    }

    SquareMatrix matrix() const
    {
        json j;
        try {
            j = json::parse(stdin_text);
        } catch (const json::parse_error& e) {
            throw ParseError(e.byte, std::string("matrix JSON on stdin: ") + e.what());
        }
        auto m = matrix_from_json(j, field);
        if (opt.n != 0 && m.size() != opt.n) {
            throw DimensionMismatch("matrix is " + std::to_string(m.size()) + "x" + std::to_string(m.size()) + " but -n is " +
                                    std::to_string(opt.n));
        }
        return m;
    }
};

Outcome polynomial_outcome(const Polynomial& f)
{
    return {kOk, polynomial_to_json(f), format_polynomial(f) + "\n"};
}

Outcome vector_field_outcome(const VectorField& v)
{
    return {kOk, vector_field_to_json(v), format_vector_field(v) + "\n"};
}

std::string matrix_text(const SymMatrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out += (j > 0 ? " " : "") + m(i, j).to_string();
        out += "\n";
    }
    return out;
}

std::string decomposition_text(const WeightDecomposition& d)
{
    std::string out;
    for (auto it = d.parts().rbegin(); it != d.parts().rend(); ++it) {
        out += it->first.to_string() + "  " + it->first.to_beta_string() + "  " + format_polynomial(it->second) + "\n";
    }
    return out;
}

SymMatrix symmetric(const SquareMatrix& m)
{
    std::vector<std::vector<Scalar>> rows(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) rows[i].push_back(m(i, j));
    }
    return SymMatrix(rows);
}

void require_degree_guard(const Options& opt)
{
    if (opt.k > opt.max_degree) {
        throw PreconditionError("degree " + std::to_string(opt.k) + " exceeds --max-degree " + std::to_string(opt.max_degree));
    }
}

using Handler = std::function<Outcome(const Invocation&)>;

struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> positionals;
    bool needs_n;
    Handler handler;
};

std::vector<Command> commands()
{
    return {
        {"circ", "f o g = sum_i f_i g_i", {"F", "G"}, true,
         [](const Invocation& in) { return polynomial_outcome(circ(in.poly(0), in.poly(1))); }},
        {"grad", "gradient vector field", {"F"}, true,
         [](const Invocation& in) { return vector_field_outcome(gradient(in.poly(0))); }},
        {"bracket", "Lie bracket [grad F, grad G]", {"F", "G"}, true,
         [](const Invocation& in) { return vector_field_outcome(lie_bracket(gradient(in.poly(0)), gradient(in.poly(1)))); }},
        {"assoc", "associator (F o G) o H - F o (G o H)", {"F", "G", "H"}, true,
         [](const Invocation& in) { return polynomial_outcome(associator(in.poly(0), in.poly(1), in.poly(2))); }},
        {"jacobi", "Jacobiator (F o G) o H + (G o H) o F + (H o F) o G", {"F", "G", "H"}, true,
         [](const Invocation& in) { return polynomial_outcome(jacobiator(in.poly(0), in.poly(1), in.poly(2))); }},
        {"xi", "xi(Q) = 4A for Q = X A X^T", {"Q"}, true,
         [](const Invocation& in) {
             const auto m = xi(in.poly(0));
             return Outcome{kOk, matrix_to_json(m), matrix_text(m)};
         }},
        {"xi-inv", "inverse of xi; reads a symmetric matrix as JSON on stdin", {}, true,
         [](const Invocation& in) { return polynomial_outcome(xi_inverse(symmetric(in.matrix()))); }},
        {"jordan-defect", "J2 residual X o (Y o X^2) - (X o Y) o X^2", {"X", "Y"}, true,
         [](const Invocation& in) { return polynomial_outcome(jordan_defect_j2(in.poly(0), in.poly(1))); }},
        {"bimodule-defect", "residuals of the three Jordan bimodule identities", {"X", "Y", "M"}, true,
         [](const Invocation& in) {
             const auto d = bimodule_defects(in.poly(0), in.poly(1), in.poly(2));
             json j = {{"r1", polynomial_to_json(d.r1)}, {"r2", polynomial_to_json(d.r2)}, {"r3", polynomial_to_json(d.r3)},
                       {"all_zero", d.all_zero()}};
             return Outcome{kOk, std::move(j),
                            "r1: " + format_polynomial(d.r1) + "\nr2: " + format_polynomial(d.r2) + "\nr3: " + format_polynomial(d.r3) + "\n"};
         }},
        {"decompose", "weight space decomposition", {"F"}, true,
         [](const Invocation& in) {
             const auto d = decompose(in.poly(0));
             return Outcome{kOk, weight_decomposition_to_json(d), decomposition_text(d)};
         }},
        {"peirce", "Peirce basis of A_2[n]", {}, true,
         [](const Invocation& in) {
             const auto d = peirce_decomposition(in.opt.n, in.field);
             return Outcome{kOk, weight_decomposition_to_json(d), decomposition_text(d)};
         }},
        {"reduce", "ideal reduction witness u_1! ... u_n! a", {"F"}, true,
         [](const Invocation& in) {
             const auto s = ideal_reduce(in.poly(0));
             return Outcome{kOk, json{{"value", s.to_string()}}, s.to_string() + "\n"};
         }},
        {"closure", "A_2[n]-bimodule generated by SEED in A_k[n]", {"SEED"}, true,
         [](const Invocation& in) {
             require_degree_guard(in.opt);
             const auto space = bimodule_closure(in.poly(0), in.opt.k);
             auto basis = json::array();
             std::string text = "dimension " + std::to_string(space.dimension()) + " of " + std::to_string(space.ambient_dimension()) + "\n";
             for (const auto& b : space.basis()) {
                 basis.push_back(polynomial_to_json(b));
                 text += "  " + format_polynomial(b) + "\n";
             }
             json j = {{"k", space.degree()},
                       {"dimension", space.dimension()},
                       {"ambient_dimension", space.ambient_dimension()},
                       {"full", space.is_full()},
                       {"basis", std::move(basis)}};
             return Outcome{kOk, std::move(j), std::move(text)};
         }},
        {"simple", "check that A_k[n] is a simple A_2[n]-bimodule", {}, true,
         [](const Invocation& in) {
             require_degree_guard(in.opt);
             const auto r = is_simple_bimodule(in.opt.n, in.opt.k, in.opt.seeds, in.opt.seed, in.field);
             auto failures = json::array();
             std::string text = "A_" + std::to_string(r.k) + "[" + std::to_string(r.n) + "] ";
             text += r.simple() ? "is simple" : "is NOT simple";
             text += ": expected dimension " + std::to_string(r.expected_dimension) + ", " + std::to_string(r.seeds_checked) + " seeds checked\n";
             for (const auto& f : r.failures) {
                 failures.push_back({{"seed", polynomial_to_json(f.seed)}, {"dimension", f.dimension}});
                 text += "  seed " + format_polynomial(f.seed) + " closes to dimension " + std::to_string(f.dimension) + "\n";
             }
             json j = {{"k", r.k},
                       {"expected_dimension", r.expected_dimension},
                       {"seeds_checked", r.seeds_checked},
                       {"simple", r.simple()},
                       {"failures", std::move(failures)}};
             return Outcome{r.simple() ? kOk : kNegative, std::move(j), std::move(text)};
         }},
        {"aut-check", "is the linear substitution of a matrix (JSON on stdin) an automorphism", {}, false,
         [](const Invocation& in) {
             const auto a = in.matrix();
             const auto v = check_automorphism(a, in.opt.samples, in.opt.seed);
             const bool orthogonal = is_orthogonal(a);
             json j = {{"automorphism", v.preserves_circ}, {"orthogonal", orthogonal}, {"samples_checked", v.samples_checked},
                       {"failing_pair", nullptr}, {"failing_value", nullptr}, {"failing_sample", nullptr}};
             std::string text;
             if (v.preserves_circ) {
                 text = "automorphism: yes (orthogonal, " + std::to_string(v.samples_checked) + " spot checks passed)\n";
             } else if (v.failing_pair) {
                 const auto [i, k] = *v.failing_pair;
                 j["failing_pair"] = {i + 1, k + 1};
                 j["failing_value"] = polynomial_to_json(*v.failing_value);
                 text = "automorphism: no (h" + std::to_string(i + 1) + " o h" + std::to_string(k + 1) + " = " +
                        format_polynomial(*v.failing_value) + ", expected " + (i == k ? "1" : "0") + ")\n";
             } else {
                 j["failing_sample"] = {polynomial_to_json(v.failing_sample->first), polynomial_to_json(v.failing_sample->second)};
                 text = "automorphism: no (phi(f o g) != phi(f) o phi(g) for f = " + format_polynomial(v.failing_sample->first) +
                        ", g = " + format_polynomial(v.failing_sample->second) + ")\n";
             }
             return Outcome{v.preserves_circ ? kOk : kNegative, std::move(j), std::move(text)};
         }},
        {"aut1", "is x -> LAMBDA x + MU an automorphism of A[1]", {"LAMBDA", "MU"}, false,
         [](const Invocation& in) {
             Scalar lambda(in.field);
             Scalar mu(in.field);
             for (std::size_t i = 0; i < 2; ++i) {
                 try {
                     (i == 0 ? lambda : mu) = parse_scalar(in.opt.args.at(i), in.field);
                 } catch (const ParseError& e) {
                     throw ParseError(e.offset(), "argument " + std::to_string(i + 1) + ": " + e.message(), e.expected());
                 }
             }
             const auto v = aut_dim1(lambda, mu);
             const auto h = affine_substitution({lambda, mu})[0];
             json j = {{"lambda", lambda.to_string()},
                       {"mu", mu.to_string()},
                       {"automorphism", v.is_automorphism},
                       {"h_circ_h", v.h_circ_h.to_string()},
                       {"composition_law", v.composition_law},
                       {"inverse_ok", v.inverse_ok}};
             std::string text = v.is_automorphism ? "automorphism: yes (x -> " + format_polynomial(h) + ")\n"
                                                  : "automorphism: no (h o h = " + v.h_circ_h.to_string() + ", expected 1)\n";
             return Outcome{v.is_automorphism ? kOk : kNegative, std::move(j), std::move(text)};
         }},
    };
}

json error_json(const std::string& kind, const std::string& message)
{
    return {{"status", "error"}, {"kind", kind}, {"message", message}};
}

} // namespace

CommandOutput run(const std::vector<std::string>& args, std::string_view stdin_text)
{
    CLI::App app{"Exact algebra of the standard symmetric biderivation f o g = sum_i f_i g_i on K[x1..xn]", "bideriv"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    Options opt;
    const auto table = commands();
    std::map<const CLI::App*, const Command*> by_app;
    for (const auto& cmd : table) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        auto* n_opt = sub->add_option("-n", opt.n, "number of variables")->check(CLI::PositiveNumber);
        if (cmd.needs_n) n_opt->required();
        sub->add_option("--field", opt.field, "coefficient field: q or fp:P")->capture_default_str();
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--max-degree", opt.max_degree, "degree guard for parsed input")->capture_default_str();
        sub->add_option("--seed", opt.seed, "seed for random samplers")->capture_default_str();
        if (std::string_view(cmd.name) == "closure" || std::string_view(cmd.name) == "simple") {
            sub->add_option("-k", opt.k, "homogeneous degree")->required();
        }
        if (std::string_view(cmd.name) == "simple") {
            sub->add_option("--seeds", opt.seeds, "number of random seeds besides the monomials")->capture_default_str();
        }
        if (std::string_view(cmd.name) == "aut-check") {
            sub->add_option("--samples", opt.samples, "random spot checks of phi(f o g) = phi(f) o phi(g)")->capture_default_str();
        }
        if (!cmd.positionals.empty()) {
            std::string names;
            for (const auto* p : cmd.positionals) names += std::string(names.empty() ? "" : " ") + p;
            sub->add_option("arguments", opt.args, "operands (use -- before an operand starting with '-')")
                ->type_name(names)
                ->required()
                ->expected(static_cast<int>(cmd.positionals.size()));
        }
        by_app.emplace(sub, &cmd);
    }

    CommandOutput result;
    std::ostringstream out;
    std::ostringstream err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? kOk : kParse;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    const Command& cmd = *by_app.at(chosen);
    auto finish_error = [&](int code, const std::string& kind, const std::string& message, json extra = json::object()) {
        result.exit_code = code;
        if (opt.json) {
            auto j = error_json(kind, message);
            j["command"] = cmd.name;
            j.update(extra);
            result.out = j.dump(2) + "\n";
        } else {
            result.err = "bideriv " + std::string(cmd.name) + ": " + message + "\n";
        }
        return result;
    };

    try {
        const Field field = Field::parse(opt.field);
        if (std::string_view(cmd.name) == "aut1") opt.n = 1;
        const Invocation in{opt, field, stdin_text};
        Outcome outcome = cmd.handler(in);
        result.exit_code = outcome.exit_code;
        if (opt.json) {
            json j = {{"status", "ok"}, {"command", cmd.name}, {"field", field.name()}, {"result", std::move(outcome.payload)}};
            if (opt.n != 0) j["n"] = opt.n;
            result.out = j.dump(2) + "\n";
        } else {
            result.out = std::move(outcome.text);
        }
    } catch (const ParseError& e) {
        return finish_error(kParse, "parse", e.what(), {{"offset", e.offset()}, {"expected", e.expected()}});
    } catch (const PreconditionError& e) {
        return finish_error(kPrecondition, "precondition", e.what());
    } catch (const DomainError& e) {
        return finish_error(kNegative, "domain", e.what());
    } catch (const std::exception& e) {
        return finish_error(kNegative, "internal", e.what());
    }
    return result;
}

} // namespace bideriv::cli
