#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ngd/graph.hpp"
#include "ngd/matrix.hpp"

namespace ngd {

inline constexpr const char* kVersion = "0.1.0";

// Edge list: one undirected edge per line as "i<TAB>j<TAB>weight" (weight
// omitted means 1), '#' starts a comment, an optional "n=<count>" line fixes
// the node count. Repeated pairs throw DuplicateEdge, loops SelfLoop, other
// malformed input ParseError with the line number. The parsed graph passes
// full validation.
Graph parse_edge_list(const std::string& path);
Graph parse_edge_list_stream(std::istream& in, const std::string& name);

// Each edge once with i < j, weights as %.17g so a parse round-trips the
// weight matrix bit for bit.
void write_edge_list(const Graph& g, const std::string& path);

// MatrixMarket coordinate format, real or pattern, symmetric or general
// storage; 1-based indices. Anything else throws UnsupportedFormat.
Graph parse_matrix_market(const std::string& path);

// Reads by extension: .mtx / .mm go through MatrixMarket, the rest through
// the edge-list parser.
Graph load_graph(const std::string& path);

std::string format_double(double v);  // %.17g

void write_matrix_csv(const Matrix& m, const std::string& path);
void write_pairs_csv(const std::string& path, const std::string& header_a,
                     const std::string& header_b, const std::vector<double>& a,
                     const std::vector<double>& b);
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

std::uint64_t fnv1a_file(const std::string& path);

// Everything needed to re-run a CLI invocation and compare outputs.
struct RunManifest {
    std::string tool = "ngd";
    std::string version = kVersion;
    std::string operation;             // subcommand name
    std::vector<std::string> command;  // argv after the program name
    std::vector<std::pair<std::string, std::uint64_t>> inputs;  // path, fnv1a64
    std::vector<std::pair<std::string, std::string>> parameters;  // alpha, beta, seed, ...
    std::vector<std::string> outputs;
};

void write_manifest(const RunManifest& m, const std::string& path);
RunManifest read_manifest(const std::string& path);

}  // namespace ngd
