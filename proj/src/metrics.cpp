#include "ngd/metrics.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

#include "ngd/errors.hpp"

namespace ngd {

namespace {

using Adjacency = std::vector<std::vector<std::pair<int, double>>>;

Adjacency adjacency(const Graph& g) {
    Adjacency adj(g.size());
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (g.has_edge(i, j)) adj[i].emplace_back(j, g.weight(i, j));
    return adj;
}

void bfs_from(const Adjacency& adj, int src, int* out) {
    const int n = static_cast<int>(adj.size());
    std::fill(out, out + n, -1);
    out[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (const auto& [v, w] : adj[u]) {
            if (out[v] < 0) {
                out[v] = out[u] + 1;
                q.push(v);
            }
        }
    }
}

// Opposite-direction path sums can differ in the last ulp, so the row of the
// smaller index is canonical and mirrored onto the larger one.
void symmetrize(Matrix& d) {
    for (int i = 0; i < d.rows(); ++i)
        for (int j = i + 1; j < d.cols(); ++j) d(j, i) = d(i, j);
}

void dijkstra_from(const Adjacency& adj, int src, double* dist) {
    const int n = static_cast<int>(adj.size());
    std::fill(dist, dist + n, std::numeric_limits<double>::infinity());
    dist[src] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (const auto& [v, w] : adj[u]) {
            const double nd = d + w;
            if (nd < dist[v]) {
                dist[v] = nd;
                heap.emplace(nd, v);
            }
        }
    }
}

}  // namespace

std::vector<int> combinatorial_distances(const Graph& g) {
    const Adjacency adj = adjacency(g);
    const int n = g.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic)
    for (int src = 0; src < n; ++src)
        bfs_from(adj, src, table.data() + static_cast<std::size_t>(src) * n);
    return table;
}

Matrix weighted_shortest_paths(const Graph& g) {
    const Adjacency adj = adjacency(g);
    const int n = g.size();
    Matrix d(n, n);
#pragma omp parallel for schedule(dynamic)
    for (int src = 0; src < n; ++src) dijkstra_from(adj, src, d.row(src));
    symmetrize(d);
    return d;
}

namespace serial {

std::vector<int> combinatorial_distances(const Graph& g) {
    const Adjacency adj = adjacency(g);
    const int n = g.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int src = 0; src < n; ++src)
        bfs_from(adj, src, table.data() + static_cast<std::size_t>(src) * n);
    return table;
}

Matrix weighted_shortest_paths(const Graph& g) {
    const Adjacency adj = adjacency(g);
    const int n = g.size();
    Matrix d(n, n);
    for (int src = 0; src < n; ++src) dijkstra_from(adj, src, d.row(src));
    symmetrize(d);
    return d;
}

}  // namespace serial

DistanceTables distance_tables(const Graph& g) {
    DistanceTables t;
    t.n = g.size();
    t.combinatorial = combinatorial_distances(g);
    t.weighted = weighted_shortest_paths(g);
    t.diameter = *std::max_element(t.combinatorial.begin(), t.combinatorial.end());
    return t;
}

}  // namespace ngd
