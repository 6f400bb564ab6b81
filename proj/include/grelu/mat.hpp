#pragma once

#include <initializer_list>
#include <vector>

namespace grelu {

/// Dense row-major matrix of doubles. All tensor math in the project runs in
/// double precision.
class Mat {
 public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0);

    static Mat eye(int n);
    static Mat from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long size() const { return static_cast<long long>(rows_) * cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return d_[static_cast<size_t>(r) * cols_ + c]; }

    double* data() { return d_.data(); }
    const double* data() const { return d_.data(); }

    bool same_shape(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> d_;
};

// Plain dense product; summation over the inner index in ascending order.
Mat matmul(const Mat& a, const Mat& b);

Mat transpose(const Mat& a);

// Largest absolute entry.
double max_abs(const Mat& a);
double frob_norm(const Mat& a);
bool all_finite(const Mat& a);

// max over entries of |a - b|.
double max_abs_diff(const Mat& a, const Mat& b);

// Solves A X = B by LU factorization with partial pivoting. A is n x n and is
// consumed by the factorization. Throws NumericError on a singular pivot.
Mat lu_solve(Mat a, const Mat& b);

// Eigenvalues of a symmetric matrix via cyclic Jacobi rotations (unordered).
std::vector<double> sym_eigenvalues(Mat a);

std::string shape_str(const Mat& a);

}  // namespace grelu
