#include "doctest.h"

#include <cmath>
#include <numbers>
#include <utility>

#include "ngd/errors.hpp"
#include "ngd/generators.hpp"
#include "ngd/metrics.hpp"
#include "ngd/nonlocal.hpp"
#include "ngd/spectral.hpp"
#include "test_helpers.hpp"

using ngd::Graph;
using ngd::Matrix;

namespace {

// Weighted 4-cycle with alternating edge weights a, b and a + b = 1.
// Its Laplacian has eigenvalues {0, 2a, 2b, 2(a+b)} with fixed eigenvectors,
// which gives the fractional weights in closed form:
//   w(0,1) = w(2,3) = (2^s + (2a)^s - (2b)^s) / 4
//   w(1,2) = w(0,3) = (2^s + (2b)^s - (2a)^s) / 4
//   w(0,2) = w(1,3) = ((2a)^s + (2b)^s - 2^s) / 4
Matrix alternating_cycle_weights(double a, double b, double s) {
    const double pa = std::pow(2.0 * a, s);
    const double pb = std::pow(2.0 * b, s);
    const double pc = std::pow(2.0 * (a + b), s);
    const double near = (pc + pa - pb) / 4.0;
    const double far = (pc + pb - pa) / 4.0;
    const double diag = (pa + pb - pc) / 4.0;
    Matrix w(4, 4);
    w(0, 1) = w(1, 0) = near;
    w(2, 3) = w(3, 2) = near;
    w(1, 2) = w(2, 1) = far;
    w(0, 3) = w(3, 0) = far;
    w(0, 2) = w(2, 0) = diag;
    w(1, 3) = w(3, 1) = diag;
    return w;
}

}  // namespace

TEST_CASE("fractional weights of the alternating 4-cycle match the closed form") {
    for (const auto& [a, b] : {std::pair{0.7, 0.3}, std::pair{0.9, 0.1}, std::pair{0.5, 0.5}}) {
        for (const double alpha : {0.3, 0.5, 0.9}) {
            const ngd::NonlocalGraph nl =
                ngd::fractional_graph(ngd::gen_cycle(4, {a, b, a, b}), alpha);
            const Matrix expected = alternating_cycle_weights(a, b, alpha);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    CHECK(nl.graph.weight(i, j) ==
                          doctest::Approx(expected(i, j)).epsilon(1e-12));
        }
    }
}

TEST_CASE("fractional cycle weights match the circulant sum") {
    // For the unit n-cycle the fractional Laplacian is circulant:
    // (L^s)_{ij} = (1/n) sum_k (2 - 2 cos(2 pi k / n))^s cos(2 pi k (i-j) / n).
    const int n = 10;
    const double alpha = 0.5;
    const ngd::NonlocalGraph nl = ngd::fractional_graph(ngd::gen_cycle(n), alpha);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double entry = 0.0;
            for (int k = 1; k < n; ++k) {
                const double lam = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
                entry += std::pow(lam, alpha) * std::cos(2.0 * std::numbers::pi * k * (i - j) / n);
            }
            entry /= n;
            CHECK(nl.graph.weight(i, j) == doctest::Approx(-entry).epsilon(1e-10));
        }
    }
}

TEST_CASE("fractional path weights match the cosine transform") {
    // Path Laplacian diagonalizes in the DCT-II basis: eigenvalues
    // 4 sin^2(pi k / (2n)), eigenvectors v_k(i) ~ cos(pi k (2i+1) / (2n)).
    const int n = 4;
    const double alpha = 0.6;
    const ngd::NonlocalGraph nl = ngd::fractional_graph(ngd::gen_path(n), alpha);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            double entry = 0.0;
            for (int k = 1; k < n; ++k) {
                const double s = std::sin(std::numbers::pi * k / (2.0 * n));
                entry += std::pow(4.0 * s * s, alpha) * (2.0 / n) *
                         std::cos(std::numbers::pi * k * (2 * i + 1) / (2.0 * n)) *
                         std::cos(std::numbers::pi * k * (2 * j + 1) / (2.0 * n));
            }
            CHECK(nl.graph.weight(i, j) == doctest::Approx(-entry).epsilon(1e-10));
        }
    }
}

TEST_CASE("fractional complete graph rescales the Laplacian") {
    // K_n has Laplacian spectrum {0, n, ..., n}, so L^s = n^(s-1) L.
    const int n = 5;
    Matrix w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) w(i, j) = 1.0;
    const Graph k5 = Graph::validate(w);
    for (const double alpha : {0.25, 0.5, 0.75}) {
        const ngd::NonlocalGraph nl = ngd::fractional_graph(k5, alpha);
        const double scale = std::pow(static_cast<double>(n), alpha - 1.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    CHECK(nl.graph.weight(i, j) == doctest::Approx(scale).epsilon(1e-12));
    }
}

TEST_CASE("fractional graphs on sparse bases are complete") {
    for (const double alpha : {0.2, 0.5, 0.8}) {
        const ngd::NonlocalGraph nl = ngd::fractional_graph(ngd::gen_cycle(8), alpha);
        CHECK(nl.graph.is_complete());
        CHECK(nl.alpha == alpha);
        CHECK(nl.construction == ngd::NonlocalConstruction::Fractional);
        CHECK(nl.clamped_nonpositive == 0);
    }
}

TEST_CASE("alpha = 1 returns the base weights bitwise") {
    const Graph base = ngd::gen_barabasi_albert({40, 5, 3, 0.2, 991});
    const ngd::NonlocalGraph nl = ngd::fractional_graph(base, 1.0);
    CHECK(nl.graph.weights() == base.weights());

    const ngd::SymmetricEigen eig = ngd::sym_eig(ngd::laplacian(base).entries);
    const ngd::NonlocalGraph nl3 = ngd::fractional_graph(base, 1.0, eig);
    CHECK(nl3.graph.weights() == base.weights());
}

TEST_CASE("fractional_graph validates alpha") {
    const Graph g = ngd::gen_cycle(5);
    CHECK_THROWS_AS((void)ngd::fractional_graph(g, 0.0), ngd::Error);
    CHECK_THROWS_AS((void)ngd::fractional_graph(g, -0.5), ngd::Error);
    CHECK_THROWS_AS((void)ngd::fractional_graph(g, 1.5), ngd::Error);
}

TEST_CASE("fractional_graph records the base fingerprint") {
    const Graph base = ngd::gen_cycle(6);
    const ngd::NonlocalGraph nl = ngd::fractional_graph(base, 0.5);
    CHECK(nl.origin == ngd::graph_fingerprint(base));
}

TEST_CASE("kernel evaluation matches hand values") {
    const ngd::KernelSpec mellin = ngd::KernelSpec::mellin(2.0);
    CHECK(mellin.evaluate(1.0) == 1.0);
    CHECK(mellin.evaluate(2.0) == 0.25);
    CHECK(mellin.evaluate(3.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));

    const ngd::KernelSpec laplace = ngd::KernelSpec::laplace(0.5);
    CHECK(laplace.evaluate(2.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("path graphs apply the kernel to pairwise distances") {
    const Graph base = ngd::gen_path(5);
    const ngd::NonlocalGraph nl =
        ngd::path_graph(base, ngd::KernelSpec::mellin(2.0), ngd::distance_tables(base));
    CHECK(nl.graph.weight(0, 1) == 1.0);
    CHECK(nl.graph.weight(0, 2) == 0.25);
    CHECK(nl.graph.weight(0, 3) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(nl.graph.weight(0, 4) == 0.0625);
    CHECK(nl.graph.is_complete());
    CHECK(nl.construction == ngd::NonlocalConstruction::Path);
}

TEST_CASE("weighted distances feed the kernel when requested") {
    const Graph base = ngd::gen_cycle(4, {1.0, 0.1, 0.1, 0.1});
    const ngd::KernelSpec kernel =
        ngd::KernelSpec::mellin(1.0, ngd::DistanceKind::WeightedShortestPath);
    const ngd::NonlocalGraph nl = ngd::path_graph(base, kernel, ngd::distance_tables(base));
    // d_w(0, 1) goes the cheap way around: 0.1 + 0.1 + 0.1.
    CHECK(nl.graph.weight(0, 1) == doctest::Approx(1.0 / 0.3).epsilon(1e-12));
    CHECK(nl.graph.weight(0, 3) == doctest::Approx(1.0 / 0.1).epsilon(1e-12));
}

TEST_CASE("truncated kernels decompose the path-graph Laplacian") {
    // Splitting h into its per-distance pieces and summing the resulting
    // Laplacians reproduces the full path-graph Laplacian.
    const int n = 7;
    const Graph base = ngd::gen_cycle(n);
    const ngd::KernelSpec full = ngd::KernelSpec::mellin(1.3);
    const ngd::DistanceTables tables = ngd::distance_tables(base);
    const Matrix target = ngd::laplacian(ngd::path_graph(base, full, tables).graph).entries;

    Matrix sum(n, n);
    for (int d = 1; d <= tables.diameter; ++d) {
        for (int i = 0; i < n; ++i) {
            double rowsum = 0.0;
            for (int j = 0; j < n; ++j) {
                if (i == j || tables.hops(i, j) != d) continue;
                const double h = full.evaluate(d);
                sum(i, j) -= h;
                rowsum += h;
            }
            sum(i, i) += rowsum;
        }
    }
    CHECK(ngd::max_abs_diff(sum, target) < 1e-14);
}

TEST_CASE("path_graph rejects degenerate distances") {
    // A distance of zero between distinct nodes means the tables are corrupt.
    const Graph base = ngd::gen_path(3);
    ngd::DistanceTables tables = ngd::distance_tables(base);
    tables.weighted(0, 1) = 0.0;
    tables.weighted(1, 0) = 0.0;
    const ngd::KernelSpec kernel =
        ngd::KernelSpec::mellin(1.0, ngd::DistanceKind::WeightedShortestPath);
    CHECK_THROWS_AS((void)ngd::path_graph(base, kernel, tables), ngd::ZeroDistance);
}
