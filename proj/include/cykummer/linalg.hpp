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

#ifndef CYKUMMER_LINALG_HPP
#define CYKUMMER_LINALG_HPP

#include "cykummer/field.hpp"

#include <vector>

namespace cykummer {

/**
 * Dense matrix over a runtime field with exact rank/kernel computations.
 * Everything is plain Gaussian elimination; fields make pivoting trivial.
 */
class ExactMatrix {
public:
    ExactMatrix(Field f, int rows, int cols);
    static ExactMatrix identity(const Field& f, int n);
    static ExactMatrix from_rows(const Field& f, const std::vector<std::vector<FieldElement>>& rows);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    FieldElement& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const FieldElement& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const FieldElement& k) const;
    bool operator==(const ExactMatrix& o) const;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

    int rank() const;
    FieldElement det() const; // square only

    /// Canonical nullspace basis from the reduced row echelon form: one
    /// vector per free column, unit entry at that column.  Deterministic.
    std::vector<std::vector<FieldElement>> nullspace() const;

    /// Stack another matrix with the same column count below this one.
    ExactMatrix stacked(const ExactMatrix& below) const;

    /// Solve A x = b; empty optional when inconsistent. Least index solution
    /// (free variables set to zero).
    std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;

    /// Minor determinant of the submatrix picked by row/col index lists.
    FieldElement minor_det(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

private:
    Field field_;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElement> a_;

    /// returns (rref matrix, pivot column of each pivot row)
    std::pair<ExactMatrix, std::vector<int>> rref() const;
};

} // namespace cykummer

#endif
