/*
   Copyright 2026 The camols Authors

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

#include "camols/linalg.hpp"

#include <string>
#include <utility>

namespace camols {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, Element(0)) {
    if (rows_ < 1 || cols_ < 1) throw Error(Errc::DimensionMismatch, "matrix dimensions must be positive");
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw Error(Errc::DimensionMismatch, "matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_) throw Error(Errc::DimensionMismatch, "entry count differs from rows*cols");
    for (auto e : entries_) {
        if (!field_.contains(e)) throw Error(Errc::ElementOutOfRange, "matrix entry outside the field");
    }
}

Matrix Matrix::identity(const FieldSpec& field, std::size_t size) {
    Matrix m(field, size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_indices(const FieldSpec& field, const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) throw Error(Errc::DimensionMismatch, "matrix needs at least one row");
    std::vector<Element> entries;
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) throw Error(Errc::DimensionMismatch, "ragged rows");
        for (auto v : row) entries.push_back(field.element(v));
    }
    return Matrix(field, rows.size(), rows.front().size(), std::move(entries));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(Errc::FieldMismatch, "matrices over different fields");
    if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "inner dimensions differ");
    const auto& F = a.field();
    Matrix c(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Element aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(aik, b(k, j)));
        }
    }
    return c;
}

std::vector<Element> mat_vec(const Matrix& m, std::span<const Element> v) {
    if (v.size() != m.cols()) {
        throw Error(Errc::DimensionMismatch, "vector length " + std::to_string(v.size()) + " differs from " +
                                                 std::to_string(m.cols()) + " columns");
    }
    const auto& F = m.field();
    std::vector<Element> out(m.rows(), F.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] = F.add(out[i], F.mul(m(i, j), v[j]));
    }
    return out;
}

Matrix transition_matrix(const LocalRule& rule, std::size_t n, std::size_t step) {
    const auto& a = rule.coeffs();
    const std::size_t two_r = 2 * rule.radius();
    const std::size_t cols = n > two_r * step ? n - two_r * step : 0;
    if (cols <= two_r) {
        throw Error(Errc::DimensionUnderflow,
                    "n=" + std::to_string(n) + " leaves no output at step " + std::to_string(step));
    }
    const std::size_t rows = cols - two_r;
    Matrix m(rule.field(), rows, cols);
    for (std::size_t k = 0; k < rows; ++k) {
        for (std::size_t i = 0; i <= two_r; ++i) m(k, k + i) = a[i];
    }
    return m;
}

Matrix sylvester_matrix(const Polynomial& pf, const Polynomial& pg) {
    if (!(pf.field() == pg.field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
    if (pf.degree() < 1 || pf.degree() != pg.degree()) {
        throw Error(Errc::DegreeMismatch, "Sylvester matrix needs two polynomials of the same degree >= 1");
    }
    return sylvester_matrix_general(pf, pg);
}

Matrix sylvester_matrix_general(const Polynomial& pf, const Polynomial& pg) {
    if (!(pf.field() == pg.field())) throw Error(Errc::FieldMismatch, "polynomials over different fields");
    if (pf.degree() < 1 || pg.degree() < 1) throw Error(Errc::DegreeTooSmall, "Sylvester matrix needs degree >= 1");
    const auto df = static_cast<std::size_t>(pf.degree());
    const auto dg = static_cast<std::size_t>(pg.degree());
    const std::size_t size = df + dg;
    Matrix m(pf.field(), size, size);
    for (std::size_t k = 0; k < dg; ++k) {
        for (std::size_t i = 0; i <= df; ++i) m(k, k + i) = pf[i];
    }
    for (std::size_t k = 0; k < df; ++k) {
        for (std::size_t i = 0; i <= dg; ++i) m(dg + k, k + i) = pg[i];
    }
    return m;
}

Element determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
    const auto& F = m.field();
    const std::size_t n = m.rows();
    Matrix a = m;
    Element det = F.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return F.zero();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = F.neg(det);
        }
        const Element p = a(col, col);
        det = F.mul(det, p);
        const Element p_inv = F.inv(p);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const Element factor = F.mul(a(i, col), p_inv);
            for (std::size_t j = col; j < n; ++j) a(i, j) = F.sub(a(i, j), F.mul(factor, a(col, j)));
        }
    }
    return det;
}

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
    const auto& F = m.field();
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(F, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Error(Errc::Singular, "matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Element p_inv = F.inv(a(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = F.mul(a(col, j), p_inv);
            inv(col, j) = F.mul(inv(col, j), p_inv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            const Element factor = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = F.sub(a(i, j), F.mul(factor, a(col, j)));
                inv(i, j) = F.sub(inv(i, j), F.mul(factor, inv(col, j)));
            }
        }
    }
    return inv;
}

}  // namespace camols
