#include "ngd/nonlocal.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ngd/errors.hpp"

namespace ngd {

double KernelSpec::evaluate(double t) const {
    switch (family) {
        case KernelFamily::Mellin:
            return std::pow(t, -alpha);
        case KernelFamily::Laplace:
            return std::exp(-alpha * t);
        case KernelFamily::Custom:
            return custom(t);
    }
    throw Error("kernel: unknown family");
}

KernelSpec KernelSpec::mellin(double alpha, DistanceKind d) {
    if (!(alpha > 0.0)) throw Error("kernel: alpha must be positive");
    return KernelSpec{KernelFamily::Mellin, alpha, d, {}};
}

KernelSpec KernelSpec::laplace(double alpha, DistanceKind d) {
    if (!(alpha > 0.0)) throw Error("kernel: alpha must be positive");
    return KernelSpec{KernelFamily::Laplace, alpha, d, {}};
}

KernelSpec KernelSpec::tabulated(std::function<double(double)> h, DistanceKind d) {
    if (!h) throw Error("kernel: empty table");
    return KernelSpec{KernelFamily::Custom, 0.0, d, std::move(h)};
}

std::string KernelSpec::name() const {
    switch (family) {
        case KernelFamily::Mellin:
            return "mellin";
        case KernelFamily::Laplace:
            return "laplace";
        case KernelFamily::Custom:
            return "custom";
    }
    return "?";
}

NonlocalGraph fractional_graph(const Graph& base, double alpha) {
    if (alpha == 1.0) {
        // Delta^1 = Delta: skip the decomposition so the copy is exact.
        return NonlocalGraph{base, NonlocalConstruction::Fractional, 1.0, {},
                             graph_fingerprint(base), 0};
    }
    return fractional_graph(base, alpha, sym_eig(laplacian(base).entries));
}

NonlocalGraph fractional_graph(const Graph& base, double alpha, const SymmetricEigen& eig) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw Error("fractional_graph: alpha must lie in (0, 1]");
    if (alpha == 1.0) return fractional_graph(base, 1.0);

    const Matrix power = fractional_power(eig, alpha);
    const int n = base.size();
    Matrix w(n, n);
    std::size_t clamped = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double v = -power(i, j);
            if (v <= -1e-10)
                throw NonPositiveFractionalWeight(
                    "fractional weight at (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") is " + std::to_string(v));
            if (v < 0.0) {
                v = 0.0;
                ++clamped;
            }
            w(i, j) = v;
        }
    }
    return NonlocalGraph{Graph::validate(std::move(w), base.measure(), base.labels()),
                         NonlocalConstruction::Fractional, alpha, {},
                         graph_fingerprint(base), clamped};
}

NonlocalGraph path_graph(const Graph& base, const KernelSpec& kernel,
                         const DistanceTables& dist) {
    const int n = base.size();
    if (dist.n != n) throw Error("path_graph: distance tables built for a different size");
    Matrix w(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = kernel.distance == DistanceKind::Combinatorial
                                 ? static_cast<double>(dist.hops(i, j))
                                 : dist.weighted_dist(i, j);
            if (d <= 0.0)
                throw ZeroDistance("distinct nodes " + std::to_string(i) + ", " +
                                   std::to_string(j) + " at distance zero");
            w(i, j) = kernel.evaluate(d);
        }
    }
    NonlocalGraph out{Graph::validate(std::move(w), base.measure(), base.labels()),
                      NonlocalConstruction::Path, kernel.alpha, kernel,
                      graph_fingerprint(base), 0};
    return out;
}

}  // namespace ngd
