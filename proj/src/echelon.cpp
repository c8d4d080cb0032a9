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

#include "bideriv/echelon.hpp"

#include <algorithm>

#include "bideriv/errors.hpp"

namespace bideriv {

namespace {

void make_primitive(std::vector<mpz_class>& row)
{
    mpz_class content = 0;
    for (const auto& x : row) {
        if (x != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    }
    if (content == 0 || content == 1) return;
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
}

std::size_t first_nonzero(const std::vector<mpz_class>& row)
{
    auto it = std::find_if(row.begin(), row.end(), [](const mpz_class& x) { return x != 0; });
    return static_cast<std::size_t>(it - row.begin());
}

} // namespace

std::vector<mpz_class> IntegerEchelon::to_integer(const std::vector<mpq_class>& row) const
{
    if (row.size() != columns_) throw DimensionMismatch("echelon row of wrong length");
    mpz_class lcm = 1;
    for (const auto& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> out(columns_);
    for (std::size_t c = 0; c < columns_; ++c) out[c] = row[c].get_num() * (lcm / row[c].get_den());
    return out;
}

void IntegerEchelon::reduce(std::vector<mpz_class>& row) const
{
    // Eliminating pivot p only touches columns >= p, so one pass in pivot
    // order clears every pivot column.
    for (const auto& [pivot, prow] : rows_) {
        if (row[pivot] == 0) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), prow[pivot].get_mpz_t(), row[pivot].get_mpz_t());
        const mpz_class a = prow[pivot] / g;
        const mpz_class b = row[pivot] / g;
        for (std::size_t c = pivot; c < columns_; ++c) row[c] = a * row[c] - b * prow[c];
        make_primitive(row);
    }
}

bool IntegerEchelon::insert(const std::vector<mpq_class>& row)
{
    auto r = to_integer(row);
    reduce(r);
    const auto pivot = first_nonzero(r);
    if (pivot == columns_) return false;
    make_primitive(r);
    if (r[pivot] < 0) {
        for (auto& x : r) x = -x;
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

bool IntegerEchelon::contains(const std::vector<mpq_class>& row) const
{
    auto r = to_integer(row);
    reduce(r);
    return first_nonzero(r) == columns_;
}

std::vector<std::vector<mpq_class>> IntegerEchelon::reduced() const
{
    std::vector<std::pair<std::size_t, std::vector<mpq_class>>> rows;
    for (const auto& [pivot, prow] : rows_) {
        std::vector<mpq_class> q(columns_);
        for (std::size_t c = 0; c < columns_; ++c) q[c] = mpq_class(prow[c], prow[pivot]);
        for (auto& x : q) x.canonicalize();
        rows.emplace_back(pivot, std::move(q));
    }
    // Back substitution, last pivot first.
    for (std::size_t i = rows.size(); i-- > 0;) {
        const auto& [pivot, prow] = rows[i];
        for (std::size_t j = 0; j < i; ++j) {
            auto& other = rows[j].second;
            const mpq_class factor = other[pivot];
            if (factor == 0) continue;
            for (std::size_t c = pivot; c < columns_; ++c) other[c] -= factor * prow[c];
        }
    }
    std::vector<std::vector<mpq_class>> out;
    out.reserve(rows.size());
    for (auto& [pivot, q] : rows) out.push_back(std::move(q));
    return out;
}

} // namespace bideriv
