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

#include "bideriv/jordan.hpp"

#include <string>

#include "bideriv/errors.hpp"

namespace bideriv {

namespace {

Monomial pair_monomial(std::size_t n, std::size_t i, std::size_t j)
{
    Monomial u(n);
    ++u[i];
    ++u[j];
    return u;
}

bool has_degree(const Polynomial& p, std::uint64_t d)
{
    return p.is_zero() || (p.is_homogeneous() && *p.degree() == d);
}

} // namespace

SymMatrix::SymMatrix(std::size_t n, Field field) : n_(n), field_(field), entries_(n * n, Scalar(field)) {}

SymMatrix::SymMatrix(const std::vector<std::vector<Scalar>>& rows) : n_(rows.size())
{
    if (n_ == 0) throw PreconditionError("empty matrix");
    if (rows.front().size() != n_) throw PreconditionError("matrix is not square");
    field_ = rows.front().front().field();
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw PreconditionError("matrix is not square");
        for (const auto& x : row) {
            if (!(x.field() == field_)) throw FieldMismatch("matrix entries over different fields");
            entries_.push_back(x);
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!((*this)(i, j) == (*this)(j, i))) {
                throw PreconditionError("matrix is not symmetric at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
            }
        }
    }
}

SymMatrix SymMatrix::identity(std::size_t n, Field field)
{
    SymMatrix m(n, field);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(field));
    return m;
}

SymMatrix SymMatrix::unit(std::size_t n, std::size_t i, std::size_t j, Field field)
{
    SymMatrix m(n, field);
    m.set(i, j, Scalar::one(field));
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Scalar& value)
{
    if (i >= n_ || j >= n_) throw PreconditionError("matrix index out of range");
    if (!(value.field() == field_)) throw FieldMismatch("matrix entry over a different field");
    entries_[i * n_ + j] = value;
    entries_[j * n_ + i] = value;
}

void SymMatrix::require_compatible(const SymMatrix& other) const
{
    if (n_ != other.n_) throw DimensionMismatch("matrix size mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    if (!(field_ == other.field_)) throw FieldMismatch("matrix field mismatch");
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& rhs)
{
    require_compatible(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

SymMatrix& SymMatrix::operator*=(const Scalar& c)
{
    for (auto& x : entries_) x *= c;
    return *this;
}

Polynomial quadratic_form(const SymMatrix& a)
{
    const std::size_t n = a.size();
    Polynomial q(n, a.field());
    const auto two = Scalar::from_integer(a.field(), 2);
    for (std::size_t i = 0; i < n; ++i) {
        q.add_term(pair_monomial(n, i, i), a(i, i));
        for (std::size_t j = i + 1; j < n; ++j) q.add_term(pair_monomial(n, i, j), two * a(i, j));
    }
    return q;
}

SymMatrix xi(const Polynomial& q)
{
    if (!has_degree(q, 2)) throw DomainError("xi is defined on homogeneous quadratics only");
    const std::size_t n = q.ambient();
    const auto& field = q.field();
    const auto two = Scalar::from_integer(field, 2);
    const auto four = Scalar::from_integer(field, 4);
    SymMatrix m(n, field);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, four * q.coefficient(pair_monomial(n, i, i)));
        // off-diagonal coefficient c of x_i x_j is 2 a_ij, so 4 a_ij = 2c
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, two * q.coefficient(pair_monomial(n, i, j)));
    }
    return m;
}

Polynomial xi_inverse(const SymMatrix& m)
{
    return quadratic_form(m * Scalar::from_integer(m.field(), 4).inverse());
}

SymMatrix matrix_jordan(const SymMatrix& a, const SymMatrix& b)
{
    a.require_compatible(b);
    const std::size_t n = a.size();
    const auto half = Scalar::from_integer(a.field(), 2).inverse();
    SymMatrix c(n, a.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Scalar sum(a.field());
            for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, j) + b(i, k) * a(k, j);
            c.set(i, j, half * sum);
        }
    }
    return c;
}

Polynomial check_xi_homomorphism(const SymMatrix& a, const SymMatrix& b)
{
    return circ(quadratic_form(a), quadratic_form(b)) - quadratic_form(matrix_jordan(a, b)).scaled(4);
}

Polynomial jordan_defect_j2(const Polynomial& x, const Polynomial& y)
{
    const auto x2 = circ(x, x);
    return circ(x, circ(y, x2)) - circ(circ(x, y), x2);
}

Polynomial unit(std::size_t n, Field field)
{
    if (n == 0) throw PreconditionError("unit needs n >= 1");
    Polynomial e(n, field);
    const auto quarter = Scalar::from_integer(field, 4).inverse();
    for (std::size_t i = 0; i < n; ++i) e.add_term(pair_monomial(n, i, i), quarter);
    return e;
}

BimoduleDefects bimodule_defects(const Polynomial& x, const Polynomial& y, const Polynomial& m)
{
    const auto x2 = circ(x, x);
    const auto xm = circ(x, m);
    BimoduleDefects d{circ(x, m) - circ(m, x), circ(x, circ(x2, m)) - circ(x2, xm), Polynomial(x.ambient(), x.field())};
    d.r3 = circ(circ(x2, y), m) + circ(x, circ(y, xm)).scaled(2) - circ(x2, circ(y, m)) - circ(circ(x, y), xm).scaled(2);
    return d;
}

GradedPair::GradedPair(Polynomial quad, Polynomial lin) : quad_(std::move(quad)), lin_(std::move(lin))
{
    quad_.require_compatible(lin_);
    if (!has_degree(quad_, 2)) throw PreconditionError("first component must lie in A_2[n]");
    if (!has_degree(lin_, 1)) throw PreconditionError("second component must lie in A_1[n]");
}

GradedPair& GradedPair::operator+=(const GradedPair& rhs)
{
    quad_ += rhs.quad_;
    lin_ += rhs.lin_;
    return *this;
}

GradedPair semidirect_product(const GradedPair& p, const GradedPair& q)
{
    return GradedPair(circ(p.quad(), q.quad()), circ(p.lin(), q.quad()) + circ(p.quad(), q.lin()));
}

GradedPair jordan_defect_j2(const GradedPair& x, const GradedPair& y)
{
    const auto x2 = semidirect_product(x, x);
    return semidirect_product(x, semidirect_product(y, x2)) - semidirect_product(semidirect_product(x, y), x2);
}

Polynomial radical_nilpotency_check(const Polynomial& f, const Polynomial& g, const Polynomial& h)
{
    for (const auto* p : {&f, &g, &h}) {
        if (p->degree().value_or(0) > 1) throw PreconditionError("radical check needs arguments of degree <= 1");
    }
    return circ(circ(f, g), h);
}

} // namespace bideriv
