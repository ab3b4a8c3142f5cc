#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ngd/matrix.hpp"

namespace ngd {

// Node measure: Counting weighs every node 1, Degree weighs node i by deg(i).
enum class Measure { Counting, Degree };

// Finite connected weighted graph. Construction goes through validate(),
// which enforces every invariant the rest of the library assumes:
// symmetric nonnegative weights, zero diagonal, connected, n >= 2.
class Graph {
public:
    static Graph validate(Matrix weights, Measure measure = Measure::Counting,
                          std::vector<std::string> labels = {});

    int size() const { return weights_.rows(); }
    const Matrix& weights() const { return weights_; }
    double weight(int i, int j) const { return weights_(i, j); }
    bool has_edge(int i, int j) const { return i != j && weights_(i, j) > 0.0; }

    Measure measure() const { return measure_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // deg(i) = sum_j w(i, j); strictly positive on a connected graph
    const std::vector<double>& degrees() const { return degrees_; }
    double degree(int i) const { return degrees_[i]; }
    double volume() const { return volume_; }

    // undirected edges, each once, (i, j) with i < j in lexicographic order
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;
    bool is_complete() const;

private:
    Graph(Matrix w, Measure m, std::vector<std::string> labels);

    Matrix weights_;
    Measure measure_;
    std::vector<std::string> labels_;
    std::vector<double> degrees_;
    double volume_ = 0.0;
};

// Stable identity of a graph's weight matrix (FNV-1a over size and entry
// bytes). Used to check that derived graphs are applied to their base.
std::uint64_t graph_fingerprint(const Graph& g);

enum class LaplacianKind { Unnormalized, Normalized };

struct LaplacianProvenance {
    std::string transform = "none";  // none | fractional | path | regularized
    double alpha = 0.0;
    double beta = 0.0;
};

struct LaplacianMatrix {
    Matrix entries;
    LaplacianKind kind = LaplacianKind::Unnormalized;
    LaplacianProvenance provenance;
};

// Delta = D - A. Symmetric, PSD, rows sum to zero.
LaplacianMatrix laplacian(const Graph& g);

// Normalized walk Laplacian I - D^{-1} A. Rows sum to zero; similar to the
// symmetric I - D^{-1/2} A D^{-1/2} via conjugation by D^{1/2}.
LaplacianMatrix normalized_laplacian(const Graph& g);

}  // namespace ngd
