#pragma once

#include <cstdint>

#include "ngd/graph.hpp"
#include "ngd/nonlocal.hpp"

namespace ngd {

struct RegularizedGraph {
    Graph graph;
    double alpha = 0.0;
    double beta = 0.0;
    std::uint64_t origin = 0;
    std::size_t off_edge_pairs = 0;
};

// rw(i, j) = w(i, j) on base edges (copied verbatim, so the conditioned
// walk reproduces the base walk exactly), beta * w_nl(i, j) elsewhere.
// `nl` must have been built from `base` (checked by fingerprint, else
// OriginMismatch); beta must be positive.
RegularizedGraph regularize(const Graph& base, const NonlocalGraph& nl, double beta);

// (min base edge weight) / (max nonlocal weight off the base edge set).
// Throws BaseComplete when no off-edge pair exists.
double beta_heuristic(const Graph& base, const NonlocalGraph& nl);

}  // namespace ngd
