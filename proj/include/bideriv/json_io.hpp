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

#ifndef BIDERIV_JSON_IO_HPP
#define BIDERIV_JSON_IO_HPP

#include <json.hpp>

#include "bideriv/automorphisms.hpp"
#include "bideriv/jordan.hpp"
#include "bideriv/polynomial.hpp"
#include "bideriv/weights.hpp"

namespace bideriv {

// Coefficients are always exact strings ("a", "a/b", or a residue) so the
// encoding never goes through a lossy numeric type.

nlohmann::json polynomial_to_json(const Polynomial& f);
/// Reads the "terms" array written by polynomial_to_json.
Polynomial polynomial_from_json(const nlohmann::json& j, std::size_t n, Field field);

nlohmann::json vector_field_to_json(const VectorField& v);
nlohmann::json weight_decomposition_to_json(const WeightDecomposition& d);

/// {"n": N, "entries": [["a/b", ...], ...]}
nlohmann::json matrix_to_json(const SquareMatrix& m);
nlohmann::json matrix_to_json(const SymMatrix& m);
/// Accepts the matrix object itself or a command result wrapping it
/// under "result". Entries may be strings or integers.
SquareMatrix matrix_from_json(const nlohmann::json& j, Field field);

} // namespace bideriv

#endif // BIDERIV_JSON_IO_HPP
