#include "doctest.h"

#include <cmath>

#include "ngd/errors.hpp"
#include "ngd/graph.hpp"
#include "test_helpers.hpp"

using ngd::Graph;
using ngd::Matrix;

TEST_CASE("validate accepts a weighted triangle and computes degrees") {
    const Graph g = test::graph({{0, 2, 0.5}, {2, 0, 1}, {0.5, 1, 0}});
    CHECK(g.size() == 3);
    CHECK(g.degree(0) == 2.5);
    CHECK(g.degree(1) == 3.0);
    CHECK(g.degree(2) == 1.5);
    CHECK(g.volume() == 7.0);
    CHECK(g.edge_count() == 3);
    CHECK(g.is_complete());
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("validate symmetrizes noise below 1e-12 relative") {
    Matrix w = test::matrix({{0, 1}, {1 + 1e-14, 0}});
    const Graph g = Graph::validate(w);
    CHECK(g.weight(0, 1) == g.weight(1, 0));
}

TEST_CASE("validate rejects bad inputs") {
    CHECK_THROWS_AS(Graph::validate(test::matrix({{0, 1}, {2, 0}})), ngd::AsymmetricWeights);
    CHECK_THROWS_AS(Graph::validate(test::matrix({{1, 1}, {1, 0}})), ngd::SelfLoop);
    CHECK_THROWS_AS(Graph::validate(test::matrix({{0, -1}, {-1, 0}})), ngd::NegativeWeight);
    CHECK_THROWS_AS(Graph::validate(test::matrix({{0, 1, 0, 0},
                                                  {1, 0, 0, 0},
                                                  {0, 0, 0, 1},
                                                  {0, 0, 1, 0}})),
                    ngd::Disconnected);
    CHECK_THROWS_AS(Graph::validate(Matrix(1, 1)), ngd::Error);
    CHECK_THROWS_AS(Graph::validate(Matrix(2, 3)), ngd::Error);
    Matrix nan = test::matrix({{0, 1}, {1, 0}});
    nan(0, 1) = std::nan("");
    CHECK_THROWS_AS(Graph::validate(nan), ngd::Error);
}

TEST_CASE("disconnected error names an unreachable node") {
    try {
        Graph::validate(test::matrix(
            {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
        FAIL("expected Disconnected");
    } catch (const ngd::Disconnected& e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("edges are listed once in lexicographic order") {
    const Graph g = test::graph({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    const auto e = g.edges();
    REQUIRE(e.size() == 4);
    CHECK(e[0] == std::pair<int, int>{0, 1});
    CHECK(e[1] == std::pair<int, int>{0, 3});
    CHECK(e[2] == std::pair<int, int>{1, 2});
    CHECK(e[3] == std::pair<int, int>{2, 3});
    CHECK_FALSE(g.is_complete());
}

TEST_CASE("laplacian of a single edge") {
    const Graph g = test::graph({{0, 1}, {1, 0}});
    const Matrix l = ngd::laplacian(g).entries;
    CHECK(l == test::matrix({{1, -1}, {-1, 1}}));
}

TEST_CASE("laplacian rows sum to zero and match degrees") {
    const Graph g = test::graph({{0, 0.7, 0.3, 0}, {0.7, 0, 0, 2}, {0.3, 0, 0, 1}, {0, 2, 1, 0}});
    const Matrix l = ngd::laplacian(g).entries;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += l(i, j);
        CHECK(std::fabs(s) < 1e-15);
        CHECK(l(i, i) == g.degree(i));
    }
}

TEST_CASE("normalized laplacian has unit diagonal and zero row sums") {
    const Graph g = test::graph({{0, 0.7, 0.3, 0}, {0.7, 0, 0, 2}, {0.3, 0, 0, 1}, {0, 2, 1, 0}});
    const Matrix l = ngd::normalized_laplacian(g).entries;
    for (int i = 0; i < 4; ++i) {
        CHECK(l(i, i) == 1.0);
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += l(i, j);
        CHECK(std::fabs(s) < 1e-15);
    }
    CHECK(ngd::normalized_laplacian(g).kind == ngd::LaplacianKind::Normalized);
}

TEST_CASE("fingerprint distinguishes weight changes") {
    const Graph a = test::graph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const Graph b = test::graph({{0, 2, 1}, {2, 0, 1}, {1, 1, 0}});
    CHECK(ngd::graph_fingerprint(a) == ngd::graph_fingerprint(test::triangle()));
    CHECK(ngd::graph_fingerprint(a) != ngd::graph_fingerprint(b));
}
