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

#ifndef BIDERIV_SCALAR_HPP
#define BIDERIV_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bideriv {

/// Coefficient field K: either the rationals or F_p for an odd prime p.
/// Characteristic 2 is never representable.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws PreconditionError unless p is an odd prime below 2^32.
    static Field prime(std::uint64_t p);
    /// Accepts "q" or "fp:P".
    static Field parse(std::string_view text);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// Exact element of a Field. Rationals are kept in lowest terms with a
/// positive denominator; residues are kept in 0..p-1.
class Scalar {
public:
    explicit Scalar(Field field = {}) : field_(field) {}

    static Scalar zero(Field field) { return Scalar(field); }
    static Scalar one(Field field) { return from_integer(field, 1); }
    /// Image of an integer under the canonical ring map Z -> K.
    static Scalar from_integer(Field field, long long value);
    static Scalar from_integer(Field field, const mpz_class& value);
    /// num/den in K; DomainError when den vanishes in K.
    static Scalar from_fraction(Field field, const mpz_class& num, const mpz_class& den);
    static Scalar from_fraction(Field field, long long num, long long den);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Only meaningful over Q.
    const mpq_class& rational() const noexcept { return rational_; }
    /// Only meaningful over F_p.
    std::uint64_t residue() const noexcept { return residue_; }
    /// Over Q: sign of the value. Over F_p: 0 for zero, 1 otherwise.
    int sign() const;

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "a" or "a/b" over Q, the canonical residue over F_p.
    std::string to_string() const;

private:
    void require_same_field(const Scalar& other) const;

    Field field_;
    mpq_class rational_;
    std::uint64_t residue_ = 0;
};

} // namespace bideriv

#endif // BIDERIV_SCALAR_HPP
