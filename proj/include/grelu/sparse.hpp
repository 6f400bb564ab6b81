#pragma once

#include <vector>

#include "grelu/mat.hpp"

namespace grelu {

/// Compressed sparse row matrix. Column indices are sorted ascending within
/// each row, so row products accumulate in the same order as a dense sweep.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> row_offsets;  // length rows+1, non-decreasing
    std::vector<int> col_indices;
    std::vector<double> values;

    int nnz() const { return static_cast<int>(values.size()); }

    static SparseMatrix identity(int n);

    // Builds from (row, col, value) triplets; duplicates within a cell are an
    // error for the callers here, so they are rejected.
    static SparseMatrix from_triplets(int rows, int cols,
                                      std::vector<std::tuple<int, int, double>> triplets);

    void validate() const;  // throws ShapeError on a broken invariant
};

Mat dense(const SparseMatrix& s);
SparseMatrix sparse_transpose(const SparseMatrix& s);

// out = s * b, row-by-row with ascending column order.
Mat spmm_raw(const SparseMatrix& s, const Mat& b);

}  // namespace grelu
