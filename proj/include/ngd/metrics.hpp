#pragma once

#include <vector>

#include "ngd/graph.hpp"
#include "ngd/matrix.hpp"

namespace ngd {

// Hop counts delta(i, j), row-major n*n. Zero exactly on the diagonal.
std::vector<int> combinatorial_distances(const Graph& g);

// Weighted shortest-path metric d_w (edge cost = weight). Symmetric, zero
// diagonal, triangle inequality by construction.
Matrix weighted_shortest_paths(const Graph& g);

struct DistanceTables {
    int n = 0;
    std::vector<int> combinatorial;
    Matrix weighted;
    int diameter = 0;  // max hop count

    int hops(int i, int j) const { return combinatorial[static_cast<std::size_t>(i) * n + j]; }
    double weighted_dist(int i, int j) const { return weighted(i, j); }
};

DistanceTables distance_tables(const Graph& g);

namespace serial {
std::vector<int> combinatorial_distances(const Graph& g);
Matrix weighted_shortest_paths(const Graph& g);
}

}  // namespace ngd
