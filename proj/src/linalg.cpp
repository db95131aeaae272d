/*
   Copyright 2026 The cykummer authors

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

#include "cykummer/linalg.hpp"

#include <optional>
#include <stdexcept>

namespace cykummer {

ExactMatrix::ExactMatrix(Field f, int rows, int cols)
    : field_(std::move(f)), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, FieldElement::zero(field_)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(const Field& f, int n) {
    ExactMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const Field& f, const std::vector<std::vector<FieldElement>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    ExactMatrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    ExactMatrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    ExactMatrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
    ExactMatrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
        }
    return m;
}

ExactMatrix ExactMatrix::operator*(const FieldElement& k) const {
    ExactMatrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * k;
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<FieldElement> ExactMatrix::apply(const std::vector<FieldElement>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<FieldElement> out(rows_, FieldElement::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] = out[i] + at(i, j) * v[j];
    return out;
}

std::pair<ExactMatrix, std::vector<int>> ExactMatrix::rref() const {
    ExactMatrix m = *this;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pr = -1;
        for (int r = row; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(row, j));
        FieldElement inv = m.at(row, col).inverse();
        for (int j = col; j < cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            FieldElement factor = m.at(r, col);
            for (int j = col; j < cols_; ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

int ExactMatrix::rank() const { return static_cast<int>(rref().second.size()); }

FieldElement ExactMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    ExactMatrix m = *this;
    FieldElement d = FieldElement::one(field_);
    for (int col = 0; col < cols_; ++col) {
        int pr = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) { pr = r; break; }
        if (pr < 0) return FieldElement::zero(field_);
        if (pr != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pr, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        FieldElement inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            FieldElement factor = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(col, j);
        }
    }
    return d;
}

std::vector<std::vector<FieldElement>> ExactMatrix::nullspace() const {
    auto [m, pivots] = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
        v[free] = FieldElement::one(field_);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("column mismatch in stack");
    ExactMatrix m(field_, rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
}

std::optional<std::vector<FieldElement>> ExactMatrix::solve(const std::vector<FieldElement>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("rhs length mismatch");
    ExactMatrix aug(field_, rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto [m, pivots] = aug.rref();
    for (int c : pivots)
        if (c == cols_) return std::nullopt; // pivot in augmented column
    std::vector<FieldElement> x(cols_, FieldElement::zero(field_));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = m.at(static_cast<int>(r), cols_);
    return x;
}

FieldElement ExactMatrix::minor_det(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    if (row_idx.size() != col_idx.size()) throw std::invalid_argument("minor must be square");
    const int n = static_cast<int>(row_idx.size());
    ExactMatrix sub(field_, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub.at(i, j) = at(row_idx[i], col_idx[j]);
    return sub.det();
}

} // namespace cykummer
