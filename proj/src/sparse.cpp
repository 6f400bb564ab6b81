#include "grelu/sparse.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "grelu/errors.hpp"

namespace grelu {

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix s;
    s.rows = s.cols = n;
    s.row_offsets.resize(n + 1);
    s.col_indices.resize(n);
    s.values.assign(n, 1.0);
    for (int i = 0; i < n; ++i) {
        s.row_offsets[i] = i;
        s.col_indices[i] = i;
    }
    s.row_offsets[n] = n;
    return s;
}

SparseMatrix SparseMatrix::from_triplets(
    int rows, int cols, std::vector<std::tuple<int, int, double>> triplets) {
    std::sort(triplets.begin(), triplets.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
              });
    SparseMatrix s;
    s.rows = rows;
    s.cols = cols;
    s.row_offsets.assign(rows + 1, 0);
    s.col_indices.reserve(triplets.size());
    s.values.reserve(triplets.size());
    int prev_r = -1, prev_c = -1;
    for (const auto& [r, c, v] : triplets) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw ShapeError("from_triplets: entry (" + std::to_string(r) + "," +
                             std::to_string(c) + ") outside " + std::to_string(rows) + "x" +
                             std::to_string(cols));
        if (r == prev_r && c == prev_c)
            throw ValueError("from_triplets: duplicate entry (" + std::to_string(r) + "," +
                             std::to_string(c) + ")");
        prev_r = r;
        prev_c = c;
        s.col_indices.push_back(c);
        s.values.push_back(v);
        ++s.row_offsets[r + 1];
    }
    for (int i = 0; i < rows; ++i) s.row_offsets[i + 1] += s.row_offsets[i];
    return s;
}

void SparseMatrix::validate() const {
    if (static_cast<int>(row_offsets.size()) != rows + 1)
        throw ShapeError("SparseMatrix: row_offsets length != rows+1");
    if (row_offsets.front() != 0 || row_offsets.back() != nnz())
        throw ShapeError("SparseMatrix: row_offsets endpoints inconsistent with nnz");
    for (int i = 0; i < rows; ++i) {
        if (row_offsets[i + 1] < row_offsets[i])
            throw ShapeError("SparseMatrix: row_offsets not non-decreasing at row " +
                             std::to_string(i));
        for (int k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
            if (col_indices[k] < 0 || col_indices[k] >= cols)
                throw ShapeError("SparseMatrix: column index out of range in row " +
                                 std::to_string(i));
            if (k > row_offsets[i] && col_indices[k] <= col_indices[k - 1])
                throw ShapeError("SparseMatrix: columns not strictly ascending in row " +
                                 std::to_string(i));
        }
    }
}

Mat dense(const SparseMatrix& s) {
    Mat m(s.rows, s.cols);
    for (int i = 0; i < s.rows; ++i)
        for (int k = s.row_offsets[i]; k < s.row_offsets[i + 1]; ++k)
            m(i, s.col_indices[k]) = s.values[k];
    return m;
}

SparseMatrix sparse_transpose(const SparseMatrix& s) {
    SparseMatrix t;
    t.rows = s.cols;
    t.cols = s.rows;
    t.row_offsets.assign(t.rows + 1, 0);
    t.col_indices.resize(s.nnz());
    t.values.resize(s.nnz());
    for (int c : s.col_indices) ++t.row_offsets[c + 1];
    for (int i = 0; i < t.rows; ++i) t.row_offsets[i + 1] += t.row_offsets[i];
    std::vector<int> cursor(t.row_offsets.begin(), t.row_offsets.end() - 1);
    for (int i = 0; i < s.rows; ++i) {
        for (int k = s.row_offsets[i]; k < s.row_offsets[i + 1]; ++k) {
            const int c = s.col_indices[k];
            const int pos = cursor[c]++;
            t.col_indices[pos] = i;  // ascending because rows are scanned in order
            t.values[pos] = s.values[k];
        }
    }
    return t;
}

Mat spmm_raw(const SparseMatrix& s, const Mat& b) {
    if (s.cols != b.rows())
        throw ShapeError("spmm: inner dimensions mismatch (" + std::to_string(s.rows) + "x" +
                         std::to_string(s.cols) + " vs " + shape_str(b) + ")");
    Mat out(s.rows, b.cols());
    const int n = b.cols();
    for (int i = 0; i < s.rows; ++i) {
        double* oi = out.data() + static_cast<size_t>(i) * n;
        for (int k = s.row_offsets[i]; k < s.row_offsets[i + 1]; ++k) {
            const double v = s.values[k];
            const double* bk = b.data() + static_cast<size_t>(s.col_indices[k]) * n;
            for (int j = 0; j < n; ++j) oi[j] += v * bk[j];
        }
    }
    return out;
}

}  // namespace grelu
