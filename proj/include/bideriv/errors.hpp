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

#ifndef BIDERIV_ERRORS_HPP
#define BIDERIV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bideriv {

// Caller broke an operation's contract: wrong ambient dimension, wrong
// field, index out of range, char-p input to a char-0 procedure, ...
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class FieldMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class CharacteristicError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Input lies outside the mathematical domain of the operation
// (xi of a non-quadratic, division by zero, degree checks, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A Cartan element fails to separate the support of a polynomial.
class SeparationError : public DomainError {
public:
    using DomainError::DomainError;
};

// Should be unreachable; raised when an internal bound is exceeded.
class InternalLogicError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string message, std::vector<std::string> expected = {});

    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string message_;
    std::vector<std::string> expected_;
};

} // namespace bideriv

#endif // BIDERIV_ERRORS_HPP
