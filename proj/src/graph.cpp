#include "ngd/graph.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ngd/errors.hpp"

namespace ngd {

namespace {

std::string entry(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

}  // namespace

Graph Graph::validate(Matrix weights, Measure measure, std::vector<std::string> labels) {
    const int n = weights.rows();
    if (n != weights.cols()) throw Error("graph weights must be square");
    if (n < 2) throw Error("graph needs at least 2 nodes");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error("label count does not match node count");

    for (double x : weights.data())
        if (!std::isfinite(x)) throw Error("graph weights must be finite");

    // Symmetry within 1e-12 relative to the largest entry is repaired by
    // averaging; anything worse is refused.
    const double scale = max_abs(weights);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = std::fabs(weights(i, j) - weights(j, i));
            if (d > 1e-12 * scale)
                throw AsymmetricWeights("asymmetric weight at " + entry(i, j) + ": " +
                                        std::to_string(weights(i, j)) + " vs " +
                                        std::to_string(weights(j, i)));
            if (d != 0.0) {
                const double avg = 0.5 * (weights(i, j) + weights(j, i));
                weights(i, j) = avg;
                weights(j, i) = avg;
            }
        }
    }

    for (int i = 0; i < n; ++i)
        if (weights(i, i) != 0.0)
            throw SelfLoop("nonzero diagonal at node " + std::to_string(i));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (weights(i, j) < 0.0)
                throw NegativeWeight("negative weight at " + entry(i, j));

    // connectivity over the positive-weight support
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && weights(u, v) > 0.0) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != n) {
        std::string missing;
        for (int v = 0; v < n && missing.size() < 60; ++v)
            if (!seen[v]) missing += (missing.empty() ? "" : ", ") + std::to_string(v);
        throw Disconnected("graph is disconnected; nodes unreachable from 0: " + missing);
    }

    return Graph(std::move(weights), measure, std::move(labels));
}

Graph::Graph(Matrix w, Measure m, std::vector<std::string> labels)
    : weights_(std::move(w)), measure_(m), labels_(std::move(labels)) {
    const int n = weights_.rows();
    degrees_.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        const double* row = weights_.row(i);
        for (int j = 0; j < n; ++j) s += row[j];
        degrees_[i] = s;
        volume_ += s;
    }
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (weights_(i, j) > 0.0) e.emplace_back(i, j);
    return e;
}

int Graph::edge_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (weights_(i, j) > 0.0) ++c;
    return c;
}

bool Graph::is_complete() const {
    return edge_count() == size() * (size() - 1) / 2;
}

std::uint64_t graph_fingerprint(const Graph& g) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto feed = [&h](const unsigned char* p, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 0x100000001B3ULL;
        }
    };
    const std::uint64_t n = static_cast<std::uint64_t>(g.size());
    feed(reinterpret_cast<const unsigned char*>(&n), sizeof n);
    feed(reinterpret_cast<const unsigned char*>(g.weights().data().data()),
         g.weights().data().size() * sizeof(double));
    return h;
}

LaplacianMatrix laplacian(const Graph& g) {
    const int n = g.size();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = -g.weight(i, j);
        m(i, i) = g.degree(i);
    }
    return LaplacianMatrix{std::move(m), LaplacianKind::Unnormalized, {}};
}

LaplacianMatrix normalized_laplacian(const Graph& g) {
    const int n = g.size();
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const double d = g.degree(i);
        for (int j = 0; j < n; ++j) m(i, j) = -g.weight(i, j) / d;
        m(i, i) = 1.0;
    }
    return LaplacianMatrix{std::move(m), LaplacianKind::Normalized, {}};
}

}  // namespace ngd
