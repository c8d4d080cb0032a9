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

#include "bideriv/json_io.hpp"

#include "bideriv/errors.hpp"
#include "bideriv/format.hpp"

namespace bideriv {

nlohmann::json polynomial_to_json(const Polynomial& f)
{
    auto terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        terms.push_back({{"exponents", it->first.exponents()}, {"coeff", it->second.to_string()}});
    }
    return {{"text", format_polynomial(f)}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t n, Field field)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw ParseError(0, "polynomial JSON needs a \"terms\" array");
    }
    Polynomial f(n, field);
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff") || !t["coeff"].is_string()) {
            throw ParseError(0, "malformed polynomial term");
        }
        std::vector<std::uint32_t> exps;
        try {
            exps = t["exponents"].get<std::vector<std::uint32_t>>();
        } catch (const nlohmann::json::exception&) {
            throw ParseError(0, "malformed exponent vector");
        }
        if (exps.size() != n) throw ParseError(0, "exponent vector of length " + std::to_string(exps.size()) + ", expected " + std::to_string(n));
        f.add_term(Monomial(std::move(exps)), parse_scalar(t["coeff"].get<std::string>(), field));
    }
    return f;
}

nlohmann::json vector_field_to_json(const VectorField& v)
{
    auto components = nlohmann::json::array();
    for (const auto& c : v.components()) components.push_back(polynomial_to_json(c));
    return {{"text", format_vector_field(v)}, {"components", std::move(components)}};
}

nlohmann::json weight_decomposition_to_json(const WeightDecomposition& d)
{
    auto parts = nlohmann::json::array();
    for (auto it = d.parts().rbegin(); it != d.parts().rend(); ++it) {
        parts.push_back({{"u", it->first.u()}, {"weight", it->first.to_beta_string()}, {"part", polynomial_to_json(it->second)}});
    }
    return {{"parts", std::move(parts)}};
}

namespace {

template <class Matrix>
nlohmann::json any_matrix_to_json(const Matrix& m)
{
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"entries", std::move(rows)}};
}

} // namespace

nlohmann::json matrix_to_json(const SquareMatrix& m)
{
    return any_matrix_to_json(m);
}

nlohmann::json matrix_to_json(const SymMatrix& m)
{
    return any_matrix_to_json(m);
}

SquareMatrix matrix_from_json(const nlohmann::json& j, Field field)
{
    if (j.is_object() && !j.contains("entries") && j.contains("result")) return matrix_from_json(j["result"], field);
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError(0, "matrix JSON needs an \"entries\" array");
    }
    const auto& rows = j["entries"];
    const std::size_t n = rows.size();
    if (j.contains("n") && !(j["n"].is_number_unsigned() && j["n"].get<std::size_t>() == n)) {
        throw ParseError(0, "\"n\" does not match the number of rows");
    }
    if (n == 0) throw ParseError(0, "empty matrix");
    std::vector<std::vector<Scalar>> entries;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw ParseError(0, "matrix is not square");
        std::vector<Scalar> parsed;
        for (const auto& x : row) {
            if (x.is_string()) {
                parsed.push_back(parse_scalar(x.get<std::string>(), field));
            } else if (x.is_number_integer()) {
                parsed.push_back(Scalar::from_integer(field, x.get<long long>()));
            } else {
                throw ParseError(0, "matrix entries must be strings like \"a/b\" or integers");
            }
        }
        entries.push_back(std::move(parsed));
    }
    return SquareMatrix(entries);
}

} // namespace bideriv
