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

#include "bideriv/weights.hpp"

#include <numeric>

#include "bideriv/errors.hpp"
#include "bideriv/format.hpp"

namespace bideriv {

CartanElement::CartanElement(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw PreconditionError("Cartan element needs n >= 1");
    for (const auto& a : coeffs_) {
        if (!(a.field() == coeffs_.front().field())) throw FieldMismatch("Cartan coefficients over different fields");
    }
}

CartanElement CartanElement::basis(std::size_t n, std::size_t i, Field field)
{
    if (i >= n) throw PreconditionError("Cartan basis index out of range");
    std::vector<Scalar> a(n, Scalar::zero(field));
    a[i] = Scalar::one(field);
    return CartanElement(std::move(a));
}

CartanElement CartanElement::unit(std::size_t n, Field field)
{
    return CartanElement(std::vector<Scalar>(n, Scalar::one(field)));
}

Polynomial CartanElement::to_polynomial() const
{
    const std::size_t n = size();
    const auto quarter = Scalar::from_integer(field(), 4).inverse();
    Polynomial h(n, field());
    for (std::size_t i = 0; i < n; ++i) {
        Monomial u(n);
        u[i] = 2;
        h.add_term(u, coeffs_[i] * quarter);
    }
    return h;
}

// ---------------------------------------------------------------------------

std::uint64_t Weight::degree() const
{
    return std::accumulate(u_.begin(), u_.end(), std::uint64_t{0});
}

Scalar Weight::evaluate(const CartanElement& h) const
{
    if (h.size() != u_.size()) throw DimensionMismatch("weight and Cartan element of different length");
    Scalar sum(h.field());
    for (std::size_t i = 0; i < u_.size(); ++i) sum += Scalar::from_integer(h.field(), u_[i]) * h[i];
    return sum / Scalar::from_integer(h.field(), 2);
}

Weight operator+(const Weight& a, const Weight& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("weights of different length");
    auto u = a.u_;
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += b.u_[i];
    return Weight(std::move(u));
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b)
{
    return a.monomial() <=> b.monomial();
}

std::string Weight::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(u_[i]);
    }
    return out + ")";
}

std::string Weight::to_beta_string() const
{
    std::string out;
    for (std::size_t i = 0; i < u_.size(); ++i) {
        if (u_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        mpq_class c(u_[i], 2);
        c.canonicalize();
        if (c != 1) out += c.get_str() + "*";
        out += "beta" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

void WeightDecomposition::add(const Weight& w, const Polynomial& part)
{
    if (part.ambient() != n_ || w.size() != n_) throw DimensionMismatch("weight part of wrong dimension");
    auto [it, inserted] = parts_.try_emplace(w, n_, field_);
    it->second += part;
    if (it->second.is_zero()) parts_.erase(it);
}

Polynomial WeightDecomposition::sum() const
{
    Polynomial total(n_, field_);
    for (const auto& [w, p] : parts_) total += p;
    return total;
}

// ---------------------------------------------------------------------------

std::vector<Polynomial> idempotents(std::size_t n, Field field)
{
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(CartanElement::basis(n, i, field).to_polynomial());
    return out;
}

Polynomial cartan_action(const CartanElement& h, const Polynomial& f)
{
    if (h.size() != f.ambient()) throw DimensionMismatch("Cartan element and polynomial of different dimension");
    return circ(h.to_polynomial(), f);
}

Weight weight_of_monomial(const Monomial& u)
{
    return Weight(u.exponents());
}

WeightDecomposition decompose(const Polynomial& f)
{
    WeightDecomposition d(f.ambient(), f.field());
    for (const auto& [u, c] : f.terms()) d.add(weight_of_monomial(u), Polynomial::term(u, c));
    return d;
}

std::vector<Weight> weights_of_degree(std::size_t n, std::uint64_t k)
{
    if (n == 0) throw PreconditionError("weights_of_degree needs n >= 1");
    std::vector<Weight> out;
    std::vector<std::uint32_t> u(n, 0);
    // Descending lex: put as much as possible in the earliest slot first.
    auto fill = [&](auto&& self, std::size_t slot, std::uint64_t remaining) -> void {
        if (slot + 1 == n) {
            u[slot] = static_cast<std::uint32_t>(remaining);
            out.emplace_back(u);
            return;
        }
        for (std::uint64_t take = remaining + 1; take-- > 0;) {
            u[slot] = static_cast<std::uint32_t>(take);
            self(self, slot + 1, remaining - take);
        }
    };
    fill(fill, 0, k);
    return out;
}

WeightDecomposition peirce_decomposition(std::size_t n, Field field)
{
    WeightDecomposition d(n, field);
    for (const auto& w : weights_of_degree(n, 2)) d.add(w, Polynomial::term(w.monomial(), field));
    return d;
}

ProductRuleVerdict product_rule_check(const Weight& a1, const Weight& a2, Field field)
{
    if (a1.size() != a2.size()) throw DimensionMismatch("weights of different length");
    const std::size_t n = a1.size();
    const auto f = Polynomial::term(a1.monomial(), field);
    const auto g = Polynomial::term(a2.monomial(), field);
    const Weight target = a1 + a2;

    ProductRuleVerdict verdict;
    const auto product = decompose(f * g);
    verdict.product_law = product.size() == 1 && product.parts().begin()->first == target;
    if (!verdict.product_law) verdict.witness = "product X^u*X^v does not have weight " + target.to_string();

    verdict.circ_containment = true;
    const auto terms = decompose(circ(f, g));
    for (const auto& [w, part] : terms.parts()) {
        bool found = false;
        for (std::size_t i = 0; i < n && !found; ++i) {
            if (target.u()[i] < 2) continue;
            auto shifted = target.u();
            shifted[i] -= 2;
            found = Weight(shifted) == w;
        }
        if (!found) {
            verdict.circ_containment = false;
            if (verdict.witness.empty()) {
                verdict.witness = "term " + format_polynomial(part) + " of X^u o X^v has weight " + w.to_string() +
                                  " not of the form a1 + a2 - beta_i";
            }
        }
    }
    return verdict;
}

} // namespace bideriv
