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

#ifndef BIDERIV_FORMAT_HPP
#define BIDERIV_FORMAT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "bideriv/polynomial.hpp"

namespace bideriv {

struct ParseContext {
    std::size_t n = 1;
    Field field;
    /// Any intermediate result above this total degree is rejected.
    std::uint64_t max_degree = 16;
};

/// Parses the polynomial grammar
///
///     expr        := ["+"|"-"] term (("+"|"-") term)*
///     term        := factor ("*" factor)*
///     factor      := coefficient | variable ["^" nat] | "(" expr ")" ["^" nat]
///     coefficient := int ["/" posint]
///     variable    := "x" posint
///
/// Whitespace between tokens is ignored. Implicit multiplication ("2x1")
/// is rejected. Every failure is a ParseError carrying the byte offset.
Polynomial parse_polynomial(std::string_view text, const ParseContext& ctx);

/// "[-]int[/posint]" mapped into the field.
Scalar parse_scalar(std::string_view text, Field field);

/// Terms in descending graded-lex order, e.g. "x1^2 - 3/4*x1*x2 + 5".
std::string format_polynomial(const Polynomial& f);
std::string format_monomial(const Monomial& u);
/// "[f1, f2, ...]"
std::string format_vector_field(const VectorField& v);

} // namespace bideriv

#endif // BIDERIV_FORMAT_HPP
