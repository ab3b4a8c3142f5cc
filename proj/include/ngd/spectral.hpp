#pragma once

#include <vector>

#include "ngd/graph.hpp"
#include "ngd/matrix.hpp"

namespace ngd {

struct SymmetricEigen {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // orthonormal columns, same order
    double residual = 0.0;            // ||V L V^T - M||_F / max(||M||_F, 1)
};

// Cyclic Jacobi rotations on the symmetrized input. Deterministic and
// intentionally serial: rotation order changes the floating-point result,
// so parallelizing here would break reproducibility.
// Converged when off-diagonal Frobenius norm <= 1e-12 * ||M||_F within
// 100 sweeps, else ConvergenceFailure. Input must be symmetric within
// 1e-10 relative, else NotSymmetric.
SymmetricEigen sym_eig(const Matrix& m);

// V diag(lambda^alpha) V^T, result symmetrized. Eigenvalues at or below
// 1e-9 * max|lambda| are powered as exact zeros: the kernel eigenvalue
// of a Laplacian comes back from the solver as noise around 0, and
// |noise|^alpha would leak into every entry. Below -1e-8 throws
// NegativeEigenvalue.
Matrix fractional_power(const SymmetricEigen& eig, double alpha);

double spectral_radius(const SymmetricEigen& eig);

// Spectrum of a matrix similar to a symmetric one via conjugation by
// diag(d)^{1/2}: here, I - D^{-1/2} A D^{-1/2}, which shares eigenvalues
// with the normalized walk Laplacian I - D^{-1} A.
struct SimilarSpectrum {
    std::vector<double> degrees;
    SymmetricEigen eig;
};

SimilarSpectrum normalized_laplacian_spectrum(const Graph& g);

// exp(-t * (I - D^{-1} A)) = D^{-1/2} V exp(-t L) V^T D^{1/2}.
// Row-stochastic for t >= 0.
Matrix matrix_exp_action(const SimilarSpectrum& s, double t);

// General form: exp(-t m) where diag(d)^{1/2} m diag(d)^{-1/2} must come
// out symmetric (else NonSimilarizable; also thrown for d_i <= 0).
Matrix matrix_exp_action(const Matrix& m, const std::vector<double>& d, double t);

}  // namespace ngd
