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

#include "bideriv/errors.hpp"

#include <utility>

namespace bideriv {

namespace {

std::string describe(std::size_t offset, const std::string& message, const std::vector<std::string>& expected)
{
    std::string text = "parse error at byte " + std::to_string(offset) + ": " + message;
    if (!expected.empty()) {
        text += " (expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) text += i + 1 == expected.size() ? " or " : ", ";
            text += expected[i];
        }
        text += ")";
    }
    return text;
}

} // namespace

ParseError::ParseError(std::size_t offset, std::string message, std::vector<std::string> expected)
    : std::runtime_error(describe(offset, message, expected)),
      offset_(offset),
      message_(std::move(message)),
      expected_(std::move(expected))
{
}

} // namespace bideriv
