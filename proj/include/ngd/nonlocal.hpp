#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "ngd/graph.hpp"
#include "ngd/metrics.hpp"
#include "ngd/spectral.hpp"

namespace ngd {

enum class KernelFamily { Mellin, Laplace, Custom };
enum class DistanceKind { Combinatorial, WeightedShortestPath };

// Strictly positive decreasing weight h_alpha applied to path distances:
// Mellin t^-alpha, Laplace e^{-alpha t}, or a caller-supplied map.
struct KernelSpec {
    KernelFamily family = KernelFamily::Mellin;
    double alpha = 1.0;
    DistanceKind distance = DistanceKind::Combinatorial;
    std::function<double(double)> custom;

    double evaluate(double t) const;

    static KernelSpec mellin(double alpha, DistanceKind d = DistanceKind::Combinatorial);
    static KernelSpec laplace(double alpha, DistanceKind d = DistanceKind::Combinatorial);
    static KernelSpec tabulated(std::function<double(double)> h,
                                DistanceKind d = DistanceKind::Combinatorial);

    std::string name() const;
};

enum class NonlocalConstruction { Fractional, Path };

// Complete graph derived from a connected base. `origin` fingerprints the
// base so later stages can refuse a mismatched pairing.
struct NonlocalGraph {
    Graph graph;
    NonlocalConstruction construction = NonlocalConstruction::Fractional;
    double alpha = 1.0;
    KernelSpec kernel;
    std::uint64_t origin = 0;
    std::size_t clamped_nonpositive = 0;  // tiny negatives zeroed during assembly
};

// w_alpha(i, j) = -(Delta^alpha)_{ij} for i != j, alpha in (0, 1].
// Off-diagonal entries of the power must exceed -1e-10 (eigensolver noise
// in (-1e-10, 0] is clamped to zero), else NonPositiveFractionalWeight.
// alpha = 1 copies the base weights verbatim.
NonlocalGraph fractional_graph(const Graph& base, double alpha);

// Same, reusing a decomposition of the base's unnormalized Laplacian.
NonlocalGraph fractional_graph(const Graph& base, double alpha, const SymmetricEigen& eig);

// w_alpha(i, j) = h_alpha(d(i, j)) with d chosen by kernel.distance.
// Throws ZeroDistance if distinct nodes sit at distance zero.
NonlocalGraph path_graph(const Graph& base, const KernelSpec& kernel,
                         const DistanceTables& dist);

}  // namespace ngd
