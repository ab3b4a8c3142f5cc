#include "ngd/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "ngd/dynamics.hpp"
#include "ngd/errors.hpp"
#include "ngd/metrics.hpp"
#include "ngd/spectral.hpp"

namespace ngd {

std::vector<double> stationary_distribution(const Graph& g) {
    std::vector<double> pi(g.size());
    for (int i = 0; i < g.size(); ++i) pi[i] = g.degree(i) / g.volume();
    return pi;
}

namespace {

std::vector<double> trapping_from(const Matrix& f, const std::vector<double>& pi) {
    const int n = f.rows();
    std::vector<double> trap(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += pi[i] * f(i, j);
        trap[j] = s / (1.0 - pi[j]);
    }
    return trap;
}

}  // namespace

PassageTimes mfpt_spectral(const Graph& g) {
    const int n = g.size();
    const SimilarSpectrum s = normalized_laplacian_spectrum(g);
    const std::vector<double>& mu = s.eig.eigenvalues;
    if (mu[1] < 1e-10)
        throw DegenerateEigenvalueOne("spectral gap " + std::to_string(mu[1]) +
                                      " too small for the passage-time formula");

    // B(i, j) = sum_{k >= 2} psi_ki psi_kj / mu_k via one reconstruction
    Matrix scaled = s.eig.eigenvectors;
    for (int r = 0; r < n; ++r) scaled(r, 0) = 0.0;
    for (int k = 1; k < n; ++k)
        for (int r = 0; r < n; ++r) scaled(r, k) /= mu[k];
    const Matrix b = multiply(scaled, transpose(s.eig.eigenvectors));

    const std::vector<double> pi = stationary_distribution(g);
    std::vector<double> root(n);
    for (int i = 0; i < n; ++i) root[i] = std::sqrt(g.degree(i));

    PassageTimes out;
    out.method = PassageMethod::Spectral;
    out.mfpt = Matrix(n, n);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            out.mfpt(i, j) = (b(j, j) - b(i, j) * root[j] / root[i]) / pi[j];
        }
    out.trapping = trapping_from(out.mfpt, pi);
    return out;
}

namespace {

// Column j of F by first-step analysis on the walk with target j removed.
void solve_target(const Matrix& p, int j, Matrix& f) {
    const int n = p.rows();
    Matrix a(n - 1, n - 1);
    std::vector<double> one(n - 1, 1.0);
    for (int r = 0, ri = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, ci = 0; c < n; ++c) {
            if (c == j) continue;
            a(ri, ci) = (ri == ci ? 1.0 : 0.0) - p(r, c);
            ++ci;
        }
        ++ri;
    }
    const std::vector<double> x = solve_linear(std::move(a), std::move(one));
    for (int r = 0, ri = 0; r < n; ++r) {
        if (r == j) continue;
        f(r, j) = x[ri++];
    }
}

PassageTimes mfpt_by_solve(const Graph& g, bool parallel) {
    const int n = g.size();
    const Matrix p = transition_matrix(g);
    PassageTimes out;
    out.method = PassageMethod::LinearSolve;
    out.mfpt = Matrix(n, n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int j = 0; j < n; ++j) solve_target(p, j, out.mfpt);
    out.trapping = trapping_from(out.mfpt, stationary_distribution(g));
    return out;
}

}  // namespace

PassageTimes mfpt_solve(const Graph& g) { return mfpt_by_solve(g, true); }

namespace serial {
PassageTimes mfpt_solve(const Graph& g) { return mfpt_by_solve(g, false); }
}  // namespace serial

DecayAuditReport decay_audit(const Graph& base, const Graph& sup, double alpha, double c,
                             double tolerance, double rho_hint) {
    if (base.size() != sup.size())
        throw SizeMismatch("decay audit: node counts differ");
    if (!(alpha > 0.0) || alpha > 1.0) throw Error("decay audit: alpha must lie in (0, 1]");

    const std::vector<int> delta = combinatorial_distances(base);
    const double rho =
        rho_hint >= 0.0 ? rho_hint : spectral_radius(sym_eig(laplacian(base).entries));
    const int n = base.size();

    DecayAuditReport rep;
    rep.alpha = alpha;
    rep.c = c;
    rep.rho = rho;
    rep.tolerance = tolerance;

    std::map<int, DecayBin> bins;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int d = delta[static_cast<std::size_t>(i) * n + j];
            const double w = sup.weight(i, j);
            DecayBin& bin = bins[d];
            bin.distance = d;
            bin.max_weight = std::max(bin.max_weight, w);
            ++bin.pairs;
            if (d >= 2) {
                const double bound = c * std::pow(rho / (2.0 * (d - 1)), alpha);
                const double ratio = w / bound;
                rep.max_gap_ratio = std::max(rep.max_gap_ratio, ratio);
                if (ratio > 1.0 + tolerance) ++rep.violations;
            }
            if (d >= 1) {
                const double shifted = c * std::pow(rho / (2.0 * d - 1.0), alpha);
                rep.max_shift_ratio = std::max(rep.max_shift_ratio, w / shifted);
            }
        }
    }
    for (auto& [d, bin] : bins) {
        bin.gap_bound = d >= 2 ? c * std::pow(rho / (2.0 * (d - 1)), alpha)
                               : std::numeric_limits<double>::infinity();
        rep.bins.push_back(bin);
    }
    rep.bounded = rep.violations == 0;
    return rep;
}

}  // namespace ngd
