#include "ngd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "ngd/errors.hpp"

namespace ngd {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

// One Jacobi rotation zeroing a(p, q), accumulated into v.
void rotate(Matrix& a, Matrix& v, int p, int q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::fabs(theta) > 1e10) {
        t = 1.0 / (2.0 * theta);
    } else {
        t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    const int n = a.rows();
    for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        a(r, p) = arp - s * (arq + tau * arp);
        a(r, q) = arq + s * (arp - tau * arq);
        a(p, r) = a(r, p);
        a(q, r) = a(r, q);
    }
    for (int r = 0; r < n; ++r) {
        const double vrp = v(r, p);
        const double vrq = v(r, q);
        v(r, p) = vrp - s * (vrq + tau * vrp);
        v(r, q) = vrq + s * (vrp - tau * vrq);
    }
}

}  // namespace

SymmetricEigen sym_eig(const Matrix& m) {
    const int n = m.rows();
    if (n != m.cols()) throw NotSymmetric("sym_eig: matrix not square");
    if (!is_symmetric(m, 1e-10))
        throw NotSymmetric("sym_eig: matrix not symmetric within 1e-10 relative");

    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));

    Matrix v = Matrix::identity(n);
    const double norm = frobenius_norm(a);
    const double target = 1e-12 * norm;

    bool converged = (off_diagonal_norm(a) <= target);
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, v, p, q);
        converged = (off_diagonal_norm(a) <= target);
    }
    if (!converged)
        throw ConvergenceFailure("sym_eig: off-diagonal norm above threshold after 100 sweeps");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int x, int y) { return a(x, x) < a(y, y); });

    SymmetricEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]);
        for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }

    Matrix scaled = out.eigenvectors;
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) scaled(r, k) *= out.eigenvalues[k];
    const Matrix recon = multiply(scaled, transpose(out.eigenvectors));
    double err = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double d = recon(i, j) - 0.5 * (m(i, j) + m(j, i));
            err += d * d;
        }
    out.residual = std::sqrt(err) / std::max(norm, 1e-300);
    return out;
}

Matrix fractional_power(const SymmetricEigen& eig, double alpha) {
    if (!(alpha > 0.0)) throw Error("fractional_power: alpha must be positive");
    const int n = static_cast<int>(eig.eigenvalues.size());
    // Eigenvalues inside the noise window around zero must be powered as an
    // exact zero: |lam|^alpha amplifies solver noise enormously for small
    // alpha (1e-16^0.3 is 2e-5), which would smear the kernel over every
    // entry of the result.
    double scale = 0.0;
    for (int k = 0; k < n; ++k) scale = std::max(scale, std::fabs(eig.eigenvalues[k]));
    const double zero_window = 1e-9 * scale;
    std::vector<double> powered(n);
    for (int k = 0; k < n; ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam < -1e-8)
            throw NegativeEigenvalue("fractional_power: eigenvalue " + std::to_string(lam) +
                                     " below -1e-8");
        powered[k] = lam <= zero_window ? 0.0 : std::pow(lam, alpha);
    }
    Matrix scaled = eig.eigenvectors;
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) scaled(r, k) *= powered[k];
    Matrix out = multiply(scaled, transpose(eig.eigenvectors));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (out(i, j) + out(j, i));
            out(i, j) = avg;
            out(j, i) = avg;
        }
    return out;
}

double spectral_radius(const SymmetricEigen& eig) {
    if (eig.eigenvalues.empty()) throw Error("spectral_radius: empty spectrum");
    return std::max(std::fabs(eig.eigenvalues.front()), std::fabs(eig.eigenvalues.back()));
}

SimilarSpectrum normalized_laplacian_spectrum(const Graph& g) {
    const int n = g.size();
    std::vector<double> root(n);
    for (int i = 0; i < n; ++i) root[i] = std::sqrt(g.degree(i));
    Matrix s(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) s(i, j) = -g.weight(i, j) / (root[i] * root[j]);
        s(i, i) = 1.0;
    }
    return SimilarSpectrum{g.degrees(), sym_eig(s)};
}

Matrix matrix_exp_action(const SimilarSpectrum& s, double t) {
    const int n = static_cast<int>(s.eig.eigenvalues.size());
    Matrix scaled = s.eig.eigenvectors;
    for (int k = 0; k < n; ++k) {
        const double e = std::exp(-t * s.eig.eigenvalues[k]);
        for (int r = 0; r < n; ++r) scaled(r, k) *= e;
    }
    Matrix out = multiply(scaled, transpose(s.eig.eigenvectors));
    std::vector<double> root(n);
    for (int i = 0; i < n; ++i) root[i] = std::sqrt(s.degrees[i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) *= root[j] / root[i];
    return out;
}

Matrix matrix_exp_action(const Matrix& m, const std::vector<double>& d, double t) {
    const int n = m.rows();
    if (n != m.cols() || static_cast<int>(d.size()) != n)
        throw Error("matrix_exp_action: shape mismatch");
    for (double x : d)
        if (!(x > 0.0))
            throw NonSimilarizable("matrix_exp_action: similarity weights must be positive");
    std::vector<double> root(n);
    for (int i = 0; i < n; ++i) root[i] = std::sqrt(d[i]);
    Matrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = m(i, j) * root[i] / root[j];
    if (!is_symmetric(s, 1e-10))
        throw NonSimilarizable("matrix_exp_action: conjugated matrix is not symmetric");
    return matrix_exp_action(SimilarSpectrum{d, sym_eig(s)}, t);
}

}  // namespace ngd
