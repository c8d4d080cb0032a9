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

#include "bideriv/scalar.hpp"

#include <charconv>

#include "bideriv/errors.hpp"

namespace bideriv {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

} // namespace

Field Field::prime(std::uint64_t p)
{
    if (p == 2) throw PreconditionError("characteristic 2 is not supported");
    if (p >= (std::uint64_t{1} << 32)) throw PreconditionError("prime " + std::to_string(p) + " too large (must be < 2^32)");
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not a prime");
    return Field(p);
}

Field Field::parse(std::string_view text)
{
    if (text == "q" || text == "Q") return rationals();
    if (text.starts_with("fp:")) {
        auto digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
    }
    throw PreconditionError("unknown field '" + std::string(text) + "' (expected q or fp:P)");
}

std::string Field::name() const
{
    return is_rational() ? std::string("q") : "fp:" + std::to_string(p_);
}

Scalar Scalar::from_integer(Field field, long long value)
{
    return from_integer(field, mpz_class(static_cast<long>(value)));
}

Scalar Scalar::from_integer(Field field, const mpz_class& value)
{
    Scalar s(field);
    if (field.is_rational()) {
        s.rational_ = value;
    } else {
        s.residue_ = reduce(value, field.characteristic());
    }
    return s;
}

Scalar Scalar::from_fraction(Field field, long long num, long long den)
{
    return from_fraction(field, mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

Scalar Scalar::from_fraction(Field field, const mpz_class& num, const mpz_class& den)
{
    if (field.is_rational()) {
        if (den == 0) throw DomainError("zero denominator");
        Scalar s(field);
        s.rational_ = mpq_class(num, den);
        s.rational_.canonicalize();
        return s;
    }
    Scalar d = from_integer(field, den);
    if (d.is_zero()) {
        throw DomainError("denominator " + den.get_str() + " is not invertible in " + field.name());
    }
    return from_integer(field, num) / d;
}

bool Scalar::is_zero() const
{
    return field_.is_rational() ? sgn(rational_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_rational() ? rational_ == 1 : residue_ == 1;
}

int Scalar::sign() const
{
    if (field_.is_rational()) return sgn(rational_);
    return residue_ == 0 ? 0 : 1;
}

void Scalar::require_same_field(const Scalar& other) const
{
    if (!(field_ == other.field_)) {
        throw FieldMismatch("field mismatch: " + field_.name() + " vs " + other.field_.name());
    }
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw DomainError("division by zero");
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rational_ = 1 / rational_;
    } else {
        s.residue_ = mod_pow(residue_, field_.characteristic() - 2, field_.characteristic());
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        rational_ += rhs.rational_;
    } else {
        residue_ = (residue_ + rhs.residue_) % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        rational_ -= rhs.rational_;
    } else {
        const auto p = field_.characteristic();
        residue_ = (residue_ + p - rhs.residue_) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        rational_ *= rhs.rational_;
    } else {
        residue_ = residue_ * rhs.residue_ % field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const
{
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rational_ = -rational_;
    } else {
        s.residue_ = (field_.characteristic() - residue_) % field_.characteristic();
    }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const
{
    return field_.is_rational() ? rational_.get_str() : std::to_string(residue_);
}

} // namespace bideriv
