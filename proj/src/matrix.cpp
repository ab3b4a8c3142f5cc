#include "ngd/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ngd/errors.hpp"

namespace ngd {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

namespace {

// Shared kernel: C[i,:] accumulated in k-major order so that the parallel
// and serial entry points produce bitwise-identical results.
void multiply_row(const Matrix& a, const Matrix& b, Matrix& c, int i) {
    const int n = a.cols();
    const int p = b.cols();
    double* ci = c.row(i);
    const double* ai = a.row(i);
    for (int k = 0; k < n; ++k) {
        const double aik = ai[k];
        if (aik == 0.0) continue;
        const double* bk = b.row(k);
        for (int j = 0; j < p; ++j) ci[j] += aik * bk[j];
    }
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("multiply: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
    return c;
}

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("multiply: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
    return c;
}

}  // namespace serial

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

double max_abs(const Matrix& m) {
    double v = 0.0;
    for (double x : m.data()) v = std::max(v, std::fabs(x));
    return v;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error("max_abs_diff: shape mismatch");
    double v = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        v = std::max(v, std::fabs(a.data()[k] - b.data()[k]));
    return v;
}

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double x : m.data()) s += x * x;
    return std::sqrt(s);
}

bool is_symmetric(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = max_abs(m);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (std::fabs(m(i, j) - m(j, i)) > rel_tol * scale) return false;
    return true;
}

std::vector<double> solve_linear(Matrix a, std::vector<double> b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw Error("solve_linear: shape mismatch");
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
        if (std::fabs(a(pivot, col)) < 1e-300)
            throw SingularSystem("solve_linear: zero pivot at column " + std::to_string(col));
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            std::swap(b[pivot], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace ngd
