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

#ifndef BIDERIV_ECHELON_HPP
#define BIDERIV_ECHELON_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace bideriv {

/// Row echelon basis of a subspace of Q^columns kept fraction-free: rows
/// are primitive integer vectors, and elimination cross-multiplies by the
/// pivot instead of dividing. Column 0 is the most significant.
class IntegerEchelon {
public:
    explicit IntegerEchelon(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const noexcept { return columns_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Returns true iff the row was outside the current span.
    bool insert(const std::vector<mpq_class>& row);
    bool contains(const std::vector<mpq_class>& row) const;

    /// Reduced row echelon form over Q: leading entry 1, pivot columns
    /// cleared in every other row, rows ordered by pivot column.
    std::vector<std::vector<mpq_class>> reduced() const;

private:
    std::vector<mpz_class> to_integer(const std::vector<mpq_class>& row) const;
    void reduce(std::vector<mpz_class>& row) const;

    std::size_t columns_;
    std::map<std::size_t, std::vector<mpz_class>> rows_; // pivot column -> primitive row
};

} // namespace bideriv

#endif // BIDERIV_ECHELON_HPP
