#include "grelu/mat.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "grelu/errors.hpp"

namespace grelu {

Mat::Mat(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw ShapeError("Mat: negative dimension");
}

Mat Mat::eye(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw ShapeError("Mat::from_rows: ragged initializer");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::string shape_str(const Mat& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

Mat matmul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matmul: inner dimensions mismatch (" + shape_str(a) + " vs " +
                         shape_str(b) + ")");
    Mat out(a.rows(), b.cols());
    const int m = a.rows(), k = a.cols(), n = b.cols();
    for (int i = 0; i < m; ++i) {
        double* oi = out.data() + static_cast<size_t>(i) * n;
        const double* ai = a.data() + static_cast<size_t>(i) * k;
        for (int p = 0; p < k; ++p) {
            const double aip = ai[p];
            const double* bp = b.data() + static_cast<size_t>(p) * n;
            for (int j = 0; j < n; ++j) oi[j] += aip * bp[j];
        }
    }
    return out;
}

Mat transpose(const Mat& a) {
    Mat out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

double max_abs(const Mat& a) {
    double m = 0.0;
    for (long long i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a.data()[i]));
    return m;
}

double frob_norm(const Mat& a) {
    double s = 0.0;
    for (long long i = 0; i < a.size(); ++i) s += a.data()[i] * a.data()[i];
    return std::sqrt(s);
}

bool all_finite(const Mat& a) {
    for (long long i = 0; i < a.size(); ++i)
        if (!std::isfinite(a.data()[i])) return false;
    return true;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    if (!a.same_shape(b))
        throw ShapeError("max_abs_diff: shape mismatch (" + shape_str(a) + " vs " +
                         shape_str(b) + ")");
    double m = 0.0;
    for (long long i = 0; i < a.size(); ++i)
        m = std::max(m, std::fabs(a.data()[i] - b.data()[i]));
    return m;
}

Mat lu_solve(Mat a, const Mat& b) {
    const int n = a.rows();
    if (a.cols() != n)
        throw ShapeError("lu_solve: matrix not square (" + shape_str(a) + ")");
    if (b.rows() != n)
        throw ShapeError("lu_solve: rhs rows mismatch (" + shape_str(a) + " vs " +
                         shape_str(b) + ")");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::fabs(a(col, col));
        for (int r = col + 1; r < n; ++r) {
            double v = std::fabs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) throw NumericError("lu_solve: singular pivot at column " +
                                            std::to_string(col));
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
            std::swap(perm[col], perm[pivot]);
        }
        const double inv = 1.0 / a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) * inv;
            a(r, col) = f;
            for (int j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }

    Mat x(n, b.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < b.cols(); ++j) x(i, j) = b(perm[i], j);
    // forward substitution (unit lower triangle)
    for (int i = 0; i < n; ++i)
        for (int r = i + 1; r < n; ++r) {
            const double f = a(r, i);
            if (f == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) x(r, j) -= f * x(i, j);
        }
    // back substitution
    for (int i = n - 1; i >= 0; --i) {
        const double inv = 1.0 / a(i, i);
        for (int j = 0; j < b.cols(); ++j) x(i, j) *= inv;
        for (int r = 0; r < i; ++r) {
            const double f = a(r, i);
            if (f == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) x(r, j) -= f * x(i, j);
        }
    }
    return x;
}

std::vector<double> sym_eigenvalues(Mat a) {
    const int n = a.rows();
    if (a.cols() != n) throw ShapeError("sym_eigenvalues: matrix not square");
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-24) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i);
    return ev;
}

}  // namespace grelu
