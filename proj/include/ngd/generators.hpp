#pragma once

#include <cstdint>
#include <vector>

#include "ngd/graph.hpp"

namespace ngd {

// n-cycle with w(i, (i+1) mod n) = weights[i]; throws BadWeightCount unless
// exactly n positive weights are given. n >= 3.
Graph gen_cycle(int n, const std::vector<double>& weights);
Graph gen_cycle(int n, double weight = 1.0);

// unweighted path 0 - 1 - ... - n-1, n >= 2
Graph gen_path(int n);

struct BAConfig {
    int n = 0;       // final node count
    int n0 = 5;      // seed clique size, >= 2
    int m = 3;       // edges per new node, 1 <= m <= n0
    double theta = 0.0;  // weight exponent: w(i, j) = (deg_i deg_j)^theta
    std::uint64_t seed = 0;
};

// Preferential attachment: start from an n0-clique (so the degree measure is
// positive from the first step), each new node attaches to m distinct
// existing nodes drawn proportionally to current degree. Weights use final
// unweighted degrees; theta = 0 gives the unweighted graph. Deterministic
// for a fixed seed.
Graph gen_barabasi_albert(const BAConfig& cfg);

}  // namespace ngd
