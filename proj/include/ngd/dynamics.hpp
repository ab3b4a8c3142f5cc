#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ngd/graph.hpp"
#include "ngd/matrix.hpp"
#include "ngd/spectral.hpp"

namespace ngd {

// P = D^{-1} A, row-stochastic.
Matrix transition_matrix(const Graph& g);

std::vector<double> point_mass(int n, int node);
std::vector<double> uniform_distribution(int n);

struct WalkEnsemble {
    std::vector<std::vector<int>> trajectories;  // walks x (steps + 1) nodes
    std::uint64_t seed = 0;
    int steps = 0;
    std::vector<double> start;
    std::vector<std::int64_t> visits;  // node occupation counts over all steps
};

// `walks` independent chains of `steps` transitions of P, starts drawn from
// `start`. Walk w consumes its own RNG stream keyed by (seed, w), so the
// ensemble is identical no matter how many threads run it.
// P rows must sum to 1 within 1e-9; `start` must be a distribution within
// 1e-9, else InvalidDistribution.
WalkEnsemble simulate(const Matrix& p, const std::vector<double>& start, int walks, int steps,
                      std::uint64_t seed);

namespace serial {
WalkEnsemble simulate(const Matrix& p, const std::vector<double>& start, int walks, int steps,
                      std::uint64_t seed);
}

struct ReturnProbabilityCurve {
    std::vector<double> times;
    std::vector<double> values;  // p0(t) = (1/N) sum_m exp(-lambda_m t)
    std::string source;
};

// Average return probability of the continuous-time walk whose generator has
// the given (normalized Laplacian) spectrum. Requires lambda_min >= -1e-9;
// small negatives are clamped so the curve decays monotonically to 1/N.
ReturnProbabilityCurve return_probability(const SymmetricEigen& spectrum,
                                          std::vector<double> times,
                                          std::string source = "");

// `points` logarithmically spaced times over [t_min, t_max].
std::vector<double> log_time_grid(double t_min, double t_max, int points);

}  // namespace ngd
