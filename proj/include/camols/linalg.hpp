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

#ifndef CAMOLS_LINALG_HPP
#define CAMOLS_LINALG_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "camols/ca.hpp"
#include "camols/gf.hpp"
#include "camols/poly.hpp"

namespace camols {

/// Dense row-major matrix over F_q.
class Matrix {
   public:
    /// Zero matrix.
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Element> entries);

    static Matrix identity(const FieldSpec& field, std::size_t size);
    static Matrix from_indices(const FieldSpec& field, const std::vector<std::vector<std::uint32_t>>& rows);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Element>& entries() const noexcept { return entries_; }

    Element operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Matrix transpose() const;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

   private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<Element> mat_vec(const Matrix& m, std::span<const Element> v);

/// Matrix of the global rule at `step` of a linear CA of length n: row k holds
/// a_0..a_2r starting at column k. Shape (n - 2r(step+1)) x (n - 2r step).
Matrix transition_matrix(const LocalRule& rule, std::size_t n, std::size_t step);

/// 2d x 2d Sylvester matrix of two degree-d polynomials: d shifted copies of
/// pf's coefficients (ascending, left to right) on top, then d of pg's.
Matrix sylvester_matrix(const Polynomial& pf, const Polynomial& pg);

/// The same layout for unequal degrees: deg(pg) rows of pf above deg(pf)
/// rows of pg, square of size deg(pf) + deg(pg).
Matrix sylvester_matrix_general(const Polynomial& pf, const Polynomial& pg);

/// Gaussian elimination, first nonzero pivot in each column.
Element determinant(const Matrix& m);

/// Gauss-Jordan inverse; throws Singular.
Matrix invert(const Matrix& m);

}  // namespace camols

#endif
