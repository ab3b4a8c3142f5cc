#pragma once

#include <cstddef>
#include <vector>

namespace ngd {

// Dense row-major matrix of doubles. Everything in this project is dense:
// nonlocal graphs are complete, so sparse storage would buy nothing.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    double* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }

    const std::vector<double>& data() const { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// C = A * B, rows of C computed in parallel. The per-row arithmetic is
// identical to the serial version, so results are bitwise equal.
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& m);

// max |m(i,j) - m(j,i)| <= rel_tol * max|m|
bool is_symmetric(const Matrix& m, double rel_tol);

// Gaussian elimination with partial pivoting; throws SingularSystem.
std::vector<double> solve_linear(Matrix a, std::vector<double> b);

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
}

}  // namespace ngd
