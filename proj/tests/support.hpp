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

#ifndef BIDERIV_TESTS_SUPPORT_HPP
#define BIDERIV_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <string>

#include "bideriv/format.hpp"
#include "bideriv/polynomial.hpp"

namespace bideriv::test {

inline Polynomial P(std::string_view text, std::size_t n, Field field = {})
{
    return parse_polynomial(text, ParseContext{n, field, 64});
}

inline Scalar Q(long long num, long long den = 1, Field field = {})
{
    return Scalar::from_fraction(field, num, den);
}

inline std::string S(const Polynomial& f) { return format_polynomial(f); }

} // namespace bideriv::test

#endif // BIDERIV_TESTS_SUPPORT_HPP
