/*
   Copyright 2026 The superharrison Authors

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

#ifndef SUPERHARRISON_EXACTLA_HPP
#define SUPERHARRISON_EXACTLA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace superharrison {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        RationalMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols) throw ArgumentError("row length mismatch");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    static RationalMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
        RationalMatrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows) throw ArgumentError("column length mismatch");
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    Vector column(std::size_t c) const {
        Vector out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (sgn(x) != 0) return false;
        return true;
    }

    /// Appends the rows of `below`; column counts must agree (an empty
    /// matrix adopts the column count of `below`).
    void append_rows(const RationalMatrix& below) {
        if (rows_ == 0 && data_.empty()) cols_ = below.cols_;
        if (below.cols_ != cols_) throw ArgumentError("cannot stack matrices with different column counts");
        data_.insert(data_.end(), below.data_.begin(), below.data_.end());
        rows_ += below.rows_;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Vector operator*(const RationalMatrix& m, const Vector& x) {
    if (x.size() != m.cols())
        throw ArgumentError("matrix-vector size mismatch: " + std::to_string(m.cols()) + " vs " +
                            std::to_string(x.size()));
    Vector y(m.rows(), Rational(0));
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (sgn(x[c]) == 0) continue;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (sgn(m(r, c)) != 0) y[r] += m(r, c) * x[c];
    }
    return y;
}

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("matrix product size mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(r, k)) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (sgn(b(k, c)) != 0) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

namespace detail {

/// In-place reduced row echelon form. Pivots are chosen column by column,
/// taking the first row (from the current position down) with a nonzero
/// entry. Returns the pivot columns.
inline std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    Rational factor;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        std::size_t found = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r)
            if (sgn(rows[r][c]) != 0) {
                found = r;
                break;
            }
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        Vector& piv = rows[next];
        if (piv[c] != 1) {
            const Rational inv = 1 / piv[c];
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(piv[k]) != 0) piv[k] *= inv;
        }
        std::vector<std::size_t> support;
        for (std::size_t k = c; k < cols; ++k)
            if (sgn(piv[k]) != 0) support.push_back(k);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || sgn(rows[r][c]) == 0) continue;
            factor = rows[r][c];
            for (auto k : support) rows[r][k] -= factor * piv[k];
        }
        pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    return pivots;
}

}  // namespace detail

/// A subspace of Q^ambient_dim held as the nonzero rows of a reduced row
/// echelon form: every vector has a leading 1 at its pivot column and zeros
/// in every other pivot column.
class SubspaceBasis {
   public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Echelon basis of the span of arbitrary vectors.
    static SubspaceBasis span(std::size_t ambient_dim, std::vector<Vector> vectors) {
        for (const auto& v : vectors)
            if (v.size() != ambient_dim) throw ArgumentError("vector length does not match ambient dimension");
        SubspaceBasis b(ambient_dim);
        b.pivots_ = detail::reduce_rows(vectors, ambient_dim);
        b.vectors_ = std::move(vectors);
        return b;
    }

    static SubspaceBasis full(std::size_t ambient_dim) {
        std::vector<Vector> units;
        units.reserve(ambient_dim);
        for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
        return span(ambient_dim, std::move(units));
    }

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }
    const std::vector<Vector>& vectors() const noexcept { return vectors_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Coordinates of v in this basis, or nullopt when v lies outside the span.
    std::optional<Vector> coordinates(const Vector& v) const {
        if (v.size() != ambient_) throw ArgumentError("vector length does not match ambient dimension");
        Vector coords;
        coords.reserve(vectors_.size());
        Vector rest = v;
        for (std::size_t k = 0; k < vectors_.size(); ++k) {
            const Rational c = rest[pivots_[k]];
            coords.push_back(c);
            if (sgn(c) == 0) continue;
            const Vector& b = vectors_[k];
            for (std::size_t j = pivots_[k]; j < ambient_; ++j)
                if (sgn(b[j]) != 0) rest[j] -= c * b[j];
        }
        if (!is_zero(rest)) return std::nullopt;
        return coords;
    }

    bool contains(const Vector& v) const { return coordinates(v).has_value(); }

    bool contains(const SubspaceBasis& other) const {
        for (const auto& v : other.vectors_)
            if (!contains(v)) return false;
        return true;
    }

    Vector combine(const Vector& coords) const {
        if (coords.size() != vectors_.size()) throw ArgumentError("coordinate count does not match basis size");
        Vector out(ambient_, Rational(0));
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (sgn(coords[k]) == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                if (sgn(vectors_[k][j]) != 0) out[j] += coords[k] * vectors_[k][j];
        }
        return out;
    }

    /// Row-echelon bases are unique, so equal subspaces compare equal.
    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

   private:
    std::size_t ambient_ = 0;
    std::vector<Vector> vectors_;
    std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const RationalMatrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return detail::reduce_rows(rows, m.cols()).size();
}

/// Column space of m.
inline SubspaceBasis image_basis(const RationalMatrix& m) {
    std::vector<Vector> columns;
    columns.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) columns.push_back(m.column(c));
    return SubspaceBasis::span(m.rows(), std::move(columns));
}

/// {x : m x = 0}.
inline SubspaceBasis kernel_basis(const RationalMatrix& m) {
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    const auto pivots = detail::reduce_rows(rows, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> kernel;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][free];
        kernel.push_back(std::move(v));
    }
    return SubspaceBasis::span(m.cols(), std::move(kernel));
}

/// One solution of m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
    if (b.size() != m.rows()) throw ArgumentError("right-hand side length does not match row count");
    std::vector<Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Vector row = m.row(r);
        row.push_back(b[r]);
        rows.push_back(std::move(row));
    }
    const auto pivots = detail::reduce_rows(rows, m.cols() + 1);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rows[k][m.cols()];
    return x;
}

/// Thrown by quotient_representatives when B is not contained in Z.
class NotSubspaceError : public ArgumentError {
   public:
    using ArgumentError::ArgumentError;
};

/// Vectors completing B to a basis of Z. Each vector of Z is reduced to
/// zero in every pivot column of B's echelon basis; the span of what remains
/// is a complement of B in Z, returned in echelon form.
inline SubspaceBasis quotient_representatives(const SubspaceBasis& z, const SubspaceBasis& b) {
    if (z.ambient_dim() != b.ambient_dim()) throw ArgumentError("ambient dimension mismatch");
    if (!z.contains(b)) throw NotSubspaceError("not a subspace: B is not contained in Z");
    const std::size_t n = z.ambient_dim();
    std::vector<Vector> reduced;
    reduced.reserve(z.dim());
    for (const auto& zv : z.vectors()) {
        Vector v = zv;
        for (std::size_t k = 0; k < b.dim(); ++k) {
            const Rational c = v[b.pivots()[k]];
            if (sgn(c) == 0) continue;
            const Vector& bv = b.vectors()[k];
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(bv[j]) != 0) v[j] -= c * bv[j];
        }
        reduced.push_back(std::move(v));
    }
    auto out = SubspaceBasis::span(n, std::move(reduced));
    if (out.dim() + b.dim() != z.dim()) throw InternalError("quotient dimension mismatch");
    return out;
}

}  // namespace superharrison

#endif  // SUPERHARRISON_EXACTLA_HPP
