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

#include "bideriv/format.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

#include "bideriv/errors.hpp"

namespace bideriv {

namespace {

constexpr std::size_t kMaxNesting = 200;
constexpr std::size_t kMaxProductWork = 4'000'000;
constexpr std::uint64_t kMaxCoefficientBits = std::uint64_t{1} << 22;

std::uint64_t coefficient_bits(const Polynomial& p)
{
    if (!p.field().is_rational()) return 0;
    std::uint64_t bits = 0;
    for (const auto& [u, c] : p.terms()) {
        const auto& q = c.rational();
        bits = std::max<std::uint64_t>(bits, mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2));
    }
    return bits;
}

class Parser {
public:
    Parser(std::string_view text, const ParseContext& ctx) : text_(text), ctx_(ctx) {}

    Polynomial parse()
    {
        auto result = expr();
        skip_space();
        if (pos_ < text_.size()) {
            fail("unexpected " + describe_here(), {"'+'", "'-'", "'*'", "end of input"});
        }
        return result;
    }

private:
    Polynomial expr()
    {
        if (++depth_ > kMaxNesting) fail("expression nested too deeply");
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        Polynomial result = term();
        if (negate) result = -result;
        for (;;) {
            skip_space();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            auto rhs = term();
            if (c == '+') {
                result += rhs;
            } else {
                result -= rhs;
            }
        }
        --depth_;
        return result;
    }

    Polynomial term()
    {
        Polynomial result = factor();
        for (;;) {
            skip_space();
            if (peek() != '*') break;
            const std::size_t at = pos_++;
            auto rhs = factor();
            guard_degree(total_degree(result) + total_degree(rhs), at);
            if (result.size() * rhs.size() > kMaxProductWork) fail_at(at, "product too large");
            result *= rhs;
            if (coefficient_bits(result) > kMaxCoefficientBits) fail_at(at, "coefficients too large");
        }
        return result;
    }

    Polynomial factor()
    {
        skip_space();
        const std::size_t start = pos_;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return coefficient();
        if (c == 'x') {
            ++pos_;
            const auto index = natural("variable index");
            if (index == 0 || index > ctx_.n) {
                fail_at(start, "variable x" + std::to_string(index) + " out of range for n = " + std::to_string(ctx_.n));
            }
            auto v = Polynomial::variable(ctx_.n, static_cast<std::size_t>(index - 1), ctx_.field);
            return maybe_power(std::move(v));
        }
        if (c == '(') {
            ++pos_;
            auto inner = expr();
            skip_space();
            if (peek() != ')') fail("unexpected " + describe_here(), {"')'", "'+'", "'-'", "'*'"});
            ++pos_;
            return maybe_power(std::move(inner));
        }
        fail("unexpected " + describe_here(), {"number", "variable", "'('"});
    }

    Polynomial maybe_power(Polynomial base)
    {
        skip_space();
        if (peek() != '^') return base;
        const std::size_t at = pos_++;
        skip_space();
        const auto e = natural("exponent");
        if (e == 0) return Polynomial::constant(ctx_.n, ctx_.field, 1);
        const auto d = total_degree(base);
        if (d > 0 && e > ctx_.max_degree / d) fail_at(at, "power exceeds maximum degree " + std::to_string(ctx_.max_degree));
        // Term-count growth is bounded by the degree guard, but not the work
        // of repeated squaring on wide bases.
        if (base.size() > 1 && e > 1 && base.size() * base.size() > kMaxProductWork) fail_at(at, "power too large");
        if (const auto bits = coefficient_bits(base); bits > 2 && e > kMaxCoefficientBits / bits) {
            fail_at(at, "coefficients too large");
        }
        return base.pow(e);
    }

    Polynomial coefficient()
    {
        const std::size_t start = pos_;
        mpz_class num = integer();
        mpz_class den = 1;
        skip_space();
        if (peek() == '/') {
            ++pos_;
            skip_space();
            const std::size_t den_at = pos_;
            den = integer();
            if (den == 0) fail_at(den_at, "zero denominator");
        }
        try {
            return Polynomial::constant(ctx_.n, Scalar::from_fraction(ctx_.field, num, den));
        } catch (const DomainError& e) {
            fail_at(start, std::string("coefficient not in field: ") + e.what());
        }
    }

    mpz_class integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("unexpected " + describe_here(), {"digit"});
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::uint64_t natural(const char* what)
    {
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                fail_at(start, std::string(what) + " too large");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) fail(std::string("unexpected ") + describe_here() + " in " + what, {"digit"});
        return value;
    }

    std::uint64_t total_degree(const Polynomial& p) const { return p.degree().value_or(0); }

    void guard_degree(std::uint64_t degree, std::size_t at) const
    {
        if (degree > ctx_.max_degree) fail_at(at, "product exceeds maximum degree " + std::to_string(ctx_.max_degree));
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::string describe_here() const
    {
        if (pos_ >= text_.size()) return "end of input";
        const auto c = static_cast<unsigned char>(text_[pos_]);
        if (std::isprint(c)) return std::string("'") + text_[pos_] + "'";
        static constexpr char hex[] = "0123456789abcdef";
        return std::string("byte 0x") + hex[c >> 4U] + hex[c & 15U];
    }

    [[noreturn]] void fail(std::string message, std::vector<std::string> expected = {}) const
    {
        throw ParseError(pos_, std::move(message), std::move(expected));
    }

    [[noreturn]] void fail_at(std::size_t at, std::string message) const { throw ParseError(at, std::move(message)); }

    std::string_view text_;
    const ParseContext& ctx_;
    std::size_t pos_ = 0;
    std::size_t depth_ = 0;
};

std::string magnitude(const Scalar& c)
{
    if (c.field().is_rational()) return mpq_class(abs(c.rational())).get_str();
    return c.to_string();
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const ParseContext& ctx)
{
    return Parser(text, ctx).parse();
}

Scalar parse_scalar(std::string_view text, Field field)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
    auto digits = [&](std::size_t& at) {
        const std::size_t start = at;
        while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) ++at;
        if (at == start) throw ParseError(at, "expected a digit", {"digit"});
        return mpz_class(std::string(text.substr(start, at - start)), 10);
    };
    mpz_class num = digits(pos);
    mpz_class den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_at = pos;
        den = digits(pos);
        if (den == 0) throw ParseError(den_at, "zero denominator");
    }
    if (pos != text.size()) throw ParseError(pos, "trailing characters in scalar", {"'/'", "end of input"});
    if (negative) num = -num;
    try {
        return Scalar::from_fraction(field, num, den);
    } catch (const DomainError& e) {
        throw ParseError(0, std::string("scalar not in field: ") + e.what());
    }
}

std::string format_monomial(const Monomial& u)
{
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (u[i] > 1) out += '^' + std::to_string(u[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [u, c] = *it;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const auto mag = magnitude(c);
        if (u.degree() == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + '*';
            out += format_monomial(u);
        }
    }
    return out;
}

std::string format_vector_field(const VectorField& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.ambient(); ++i) {
        if (i > 0) out += ", ";
        out += format_polynomial(v[i]);
    }
    return out + "]";
}

} // namespace bideriv
