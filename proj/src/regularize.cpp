#include "ngd/regularize.hpp"

#include <limits>
#include <utility>

#include "ngd/errors.hpp"

namespace ngd {

namespace {

void check_origin(const Graph& base, const NonlocalGraph& nl) {
    if (nl.graph.size() != base.size() || nl.origin != graph_fingerprint(base))
        throw OriginMismatch("nonlocal graph was not built from this base graph");
}

}  // namespace

RegularizedGraph regularize(const Graph& base, const NonlocalGraph& nl, double beta) {
    check_origin(base, nl);
    if (!(beta > 0.0)) throw Error("regularize: beta must be positive");

    const int n = base.size();
    Matrix w(n, n);
    std::size_t off_edges = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (base.has_edge(i, j)) {
                w(i, j) = base.weight(i, j);
            } else {
                w(i, j) = beta * nl.graph.weight(i, j);
                ++off_edges;
            }
        }
    }
    return RegularizedGraph{Graph::validate(std::move(w), base.measure(), base.labels()),
                            nl.alpha, beta, graph_fingerprint(base), off_edges / 2};
}

double beta_heuristic(const Graph& base, const NonlocalGraph& nl) {
    check_origin(base, nl);
    if (base.is_complete())
        throw BaseComplete("base graph has no off-edge pair to regularize");

    double min_edge = std::numeric_limits<double>::infinity();
    double max_off = 0.0;
    const int n = base.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (base.has_edge(i, j))
                min_edge = std::min(min_edge, base.weight(i, j));
            else
                max_off = std::max(max_off, nl.graph.weight(i, j));
        }
    }
    if (!(max_off > 0.0))
        throw Error("beta heuristic: nonlocal weights vanish off the edge set");
    return min_edge / max_off;
}

}  // namespace ngd
