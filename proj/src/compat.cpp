#include "ngd/compat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ngd/errors.hpp"

namespace ngd {

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::vector<int> resolve_mapping(const std::vector<int>& mapping, int n) {
    std::vector<int> phi(n);
    if (mapping.empty()) {
        for (int i = 0; i < n; ++i) phi[i] = i;
        return phi;
    }
    if (static_cast<int>(mapping.size()) != n)
        throw SizeMismatch("mapping size does not match node count");
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i) {
        const int v = mapping[i];
        if (v < 0 || v >= n || hit[v]) throw Error("mapping is not a bijection");
        hit[v] = 1;
        phi[i] = v;
    }
    return phi;
}

double ratio_deviation(double r, double rp) {
    return std::fabs(r - rp) / std::max(r, rp);
}

// Anchored ratio scan shared by all compatibility checks. `super_weight`
// maps a base pair (anchor, neighbor) to the supergraph-side weight.
template <typename SuperWeight>
CompatReport anchored_scan(const Graph& base, double tolerance, SuperWeight super_weight,
                           bool parallel) {
    const int n = base.size();
    std::vector<std::vector<CompatWitness>> local(n);

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) {
        int k0 = -1;
        for (int j = 0; j < n; ++j) {
            if (!base.has_edge(i, j)) continue;
            if (k0 < 0) {
                k0 = j;
                continue;
            }
            const double r = base.weight(i, j) / base.weight(i, k0);
            const double rp = super_weight(i, j) / super_weight(i, k0);
            const double dev = ratio_deviation(r, rp);
            if (dev > 0.0) local[i].push_back(CompatWitness{i, j, k0, r, rp, dev});
        }
    }

    CompatReport report;
    report.tolerance = tolerance;
    for (int i = 0; i < n; ++i) {
        for (const CompatWitness& w : local[i]) {
            report.worst_deviation = std::max(report.worst_deviation, w.deviation);
            if (w.deviation > tolerance) report.witnesses.push_back(w);
        }
    }
    report.compatible = report.worst_deviation <= tolerance;
    return report;
}

CompatReport checked_scan(const Graph& base, const Graph& sup, const std::vector<int>& mapping,
                          double tolerance, bool parallel) {
    if (base.size() != sup.size())
        throw SizeMismatch("base has " + std::to_string(base.size()) + " nodes, supergraph " +
                           std::to_string(sup.size()));
    const std::vector<int> phi = resolve_mapping(mapping, base.size());
    for (const auto& [i, j] : base.edges())
        if (!(sup.weight(phi[i], phi[j]) > 0.0))
            throw EdgeNotPreserved("base edge " + pair_str(i, j) +
                                   " has no positive weight in the supergraph");
    return anchored_scan(
        base, tolerance,
        [&sup, &phi](int i, int j) { return sup.weight(phi[i], phi[j]); }, parallel);
}

}  // namespace

CompatReport check_compatibility(const Graph& base, const Graph& sup,
                                 const std::vector<int>& mapping, double tolerance) {
    return checked_scan(base, sup, mapping, tolerance, true);
}

namespace serial {
CompatReport check_compatibility(const Graph& base, const Graph& sup,
                                 const std::vector<int>& mapping, double tolerance) {
    return checked_scan(base, sup, mapping, tolerance, false);
}
}  // namespace serial

CompatReport check_path_compatibility(const Graph& base, const KernelSpec& kernel,
                                      const DistanceTables& dist, double tolerance) {
    if (dist.n != base.size())
        throw SizeMismatch("distance tables built for a different node count");
    auto kernel_weight = [&kernel, &dist](int i, int j) {
        const double d = kernel.distance == DistanceKind::Combinatorial
                             ? static_cast<double>(dist.hops(i, j))
                             : dist.weighted_dist(i, j);
        if (d <= 0.0)
            throw ZeroDistance("distinct nodes " + pair_str(i, j) + " at distance zero");
        return kernel.evaluate(d);
    };
    return anchored_scan(base, tolerance, kernel_weight, true);
}

EdgeSet::EdgeSet(const Graph& g) : n_(g.size()), mask_(static_cast<std::size_t>(n_) * n_, 0) {
    for (const auto& [i, j] : g.edges()) {
        mask_[static_cast<std::size_t>(i) * n_ + j] = 1;
        mask_[static_cast<std::size_t>(j) * n_ + i] = 1;
    }
}

EdgeSet::EdgeSet(int n, const std::vector<std::pair<int, int>>& pairs)
    : n_(n), mask_(static_cast<std::size_t>(n) * n, 0) {
    for (const auto& [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n) throw Error("edge endpoint out of range");
        if (i == j) throw Error("edge set cannot contain a loop");
        mask_[static_cast<std::size_t>(i) * n_ + j] = 1;
        mask_[static_cast<std::size_t>(j) * n_ + i] = 1;
    }
}

Matrix conditioned_transition(const Graph& sup, const EdgeSet& mask) {
    const int n = sup.size();
    if (mask.nodes() != n) throw SizeMismatch("mask node count differs from graph");

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask.contains(i, j) && !(sup.weight(i, j) > 0.0))
                throw EdgeNotPreserved("mask edge " + pair_str(i, j) +
                                       " has no positive weight in the graph");

    std::vector<double> degree(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += mask.contains(i, j) ? sup.weight(i, j) : 0.0;
        if (!(s > 0.0)) throw EmptyRow("node " + std::to_string(i) + " keeps no mask edge");
        degree[i] = s;
    }

    // masked support must stay connected for the conditioned walk to make sense
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && mask.contains(u, v)) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != n) throw MaskDisconnects("masked edge support is disconnected");

    Matrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p(i, j) = mask.contains(i, j) ? sup.weight(i, j) / degree[i] : 0.0;
    return p;
}

}  // namespace ngd
