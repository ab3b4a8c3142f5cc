#pragma once

#include <cstddef>
#include <vector>

#include "ngd/graph.hpp"
#include "ngd/matrix.hpp"

namespace ngd {

// pi_i = deg(i) / volume; the unique stationary distribution of the walk.
std::vector<double> stationary_distribution(const Graph& g);

enum class PassageMethod { Spectral, LinearSolve };

struct PassageTimes {
    Matrix mfpt;                   // F(i, j) = expected steps i -> j, zero diagonal
    std::vector<double> trapping;  // F_bar(j) = stationary average over starts != j
    PassageMethod method = PassageMethod::Spectral;
};

// Closed form over the normalized Laplacian spectrum:
// F(i, j) = (1/pi_j) sum_{k >= 2} (psi_kj^2 - psi_ki psi_kj sqrt(d_j/d_i)) / mu_k.
// Throws DegenerateEigenvalueOne if the spectral gap closes numerically.
PassageTimes mfpt_spectral(const Graph& g);

// First-step analysis: for each target j solve (I - P_without_j) f = 1.
// Independent of the eigensolver; used to cross-check the spectral form.
PassageTimes mfpt_solve(const Graph& g);

namespace serial {
PassageTimes mfpt_solve(const Graph& g);
}

struct DecayBin {
    int distance = 0;      // hop count delta in the base graph
    double max_weight = 0.0;
    double gap_bound = 0.0;  // c * (rho / (2 (delta - 1)))^alpha, inf at delta = 1
    std::size_t pairs = 0;
};

struct DecayAuditReport {
    double alpha = 0.0;
    double c = 0.0;
    double rho = 0.0;               // spectral radius of the base Laplacian
    double max_gap_ratio = 0.0;     // max w / gap_bound over delta >= 2
    double max_shift_ratio = 0.0;   // same with denominator 2*delta - 1, delta >= 1
    bool bounded = true;            // max_gap_ratio <= 1 + tolerance
    double tolerance = 0.0;
    std::vector<DecayBin> bins;
    std::size_t violations = 0;     // pairs with gap ratio above 1 + tolerance
};

// Checks the fractional decay bound w(i, j) <= c (rho / (2 (delta - 1)))^alpha
// for every pair at hop distance delta >= 2, where delta and rho come from
// the base graph and w from `sup`. Default c = 1 + pi^2/2. A nonnegative
// rho_hint skips the eigensolve for the base's spectral radius.
DecayAuditReport decay_audit(const Graph& base, const Graph& sup, double alpha,
                             double c = 5.934802200544679, double tolerance = 1e-9,
                             double rho_hint = -1.0);

}  // namespace ngd
