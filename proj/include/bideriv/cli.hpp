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

#ifndef BIDERIV_CLI_HPP
#define BIDERIV_CLI_HPP

#include <string>
#include <string_view>
#include <vector>

namespace bideriv::cli {

enum ExitCode : int {
    kOk = 0,
    kNegative = 1,     // domain error or negative verdict
    kParse = 2,        // polynomial, matrix, or command-line syntax
    kPrecondition = 3, // e.g. char-p input to a char-0 procedure
};

struct CommandOutput {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

/// Runs one `bideriv` invocation. `args` excludes the program name; stdin
/// is consumed only by subcommands that read a matrix.
CommandOutput run(const std::vector<std::string>& args, std::string_view stdin_text = {});

} // namespace bideriv::cli

#endif // BIDERIV_CLI_HPP
