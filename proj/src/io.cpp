#include "ngd/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ngd/errors.hpp"

namespace ngd {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void parse_fail(const std::string& name, int line_no, const std::string& why) {
    throw ParseError(name + ":" + std::to_string(line_no) + ": " + why);
}

long parse_node(const std::string& tok, const std::string& name, int line_no) {
    try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size()) parse_fail(name, line_no, "bad node id '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        parse_fail(name, line_no, "bad node id '" + tok + "'");
    }
}

double parse_weight(const std::string& tok, const std::string& name, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) parse_fail(name, line_no, "bad weight '" + tok + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        parse_fail(name, line_no, "bad weight '" + tok + "'");
    }
}

struct EdgeAccumulator {
    std::map<std::pair<int, int>, double> edges;
    int max_node = -1;

    void add(long i, long j, double w, const std::string& name, int line_no) {
        if (i < 0 || j < 0) parse_fail(name, line_no, "negative node id");
        if (i == j) throw SelfLoop(name + ":" + std::to_string(line_no) + ": loop at node " +
                                   std::to_string(i));
        const std::pair<int, int> key = std::minmax(static_cast<int>(i), static_cast<int>(j));
        if (!edges.emplace(key, w).second)
            throw DuplicateEdge(name + ":" + std::to_string(line_no) + ": edge (" +
                                std::to_string(key.first) + ", " + std::to_string(key.second) +
                                ") appears twice");
        max_node = std::max(max_node, key.second);
    }

    Graph build(int declared_n, const std::string& name) const {
        const int n = declared_n > 0 ? declared_n : max_node + 1;
        if (max_node >= n)
            throw ParseError(name + ": node " + std::to_string(max_node) +
                             " exceeds declared count " + std::to_string(n));
        Matrix w(n, n);
        for (const auto& [key, weight] : edges) {
            w(key.first, key.second) = weight;
            w(key.second, key.first) = weight;
        }
        return Graph::validate(std::move(w));
    }
};

}  // namespace

Graph parse_edge_list_stream(std::istream& in, const std::string& name) {
    EdgeAccumulator acc;
    int declared_n = 0;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0].rfind("n=", 0) == 0) {
            if (tok.size() != 1 || declared_n > 0 || !acc.edges.empty())
                parse_fail(name, line_no, "misplaced node-count line");
            declared_n = static_cast<int>(parse_node(tok[0].substr(2), name, line_no));
            if (declared_n < 2) parse_fail(name, line_no, "node count must be >= 2");
            continue;
        }
        if (tok.size() < 2 || tok.size() > 3)
            parse_fail(name, line_no, "expected 'i j [weight]'");
        const long i = parse_node(tok[0], name, line_no);
        const long j = parse_node(tok[1], name, line_no);
        const double w = tok.size() == 3 ? parse_weight(tok[2], name, line_no) : 1.0;
        if (!(w > 0.0)) parse_fail(name, line_no, "edge weights must be positive");
        acc.add(i, j, w, name, line_no);
    }
    if (acc.edges.empty()) throw ParseError(name + ": no edges");
    return acc.build(declared_n, name);
}

Graph parse_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return parse_edge_list_stream(in, path);
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot write");
    out << "n=" << g.size() << "\n";
    for (const auto& [i, j] : g.edges())
        out << i << "\t" << j << "\t" << format_double(g.weight(i, j)) << "\n";
    if (!out) throw Error(path + ": write failed");
}

Graph parse_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");

    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file");
    std::vector<std::string> head = split_ws(lower(line));
    if (head.size() < 4 || head[0] != "%%matrixmarket" || head[1] != "matrix")
        throw UnsupportedFormat(path + ": not a MatrixMarket matrix header");
    const std::string format = head[2];
    const std::string field = head[3];
    const std::string symmetry = head.size() > 4 ? head[4] : "general";
    if (format != "coordinate")
        throw UnsupportedFormat(path + ": only coordinate format is supported");
    if (field != "real" && field != "integer" && field != "pattern")
        throw UnsupportedFormat(path + ": unsupported field type '" + field + "'");
    if (symmetry != "symmetric" && symmetry != "general")
        throw UnsupportedFormat(path + ": unsupported symmetry '" + symmetry + "'");
    const bool pattern = field == "pattern";

    int line_no = 1;
    long rows = 0, cols = 0, nnz = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '%') continue;
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() != 3) parse_fail(path, line_no, "expected 'rows cols nnz'");
        rows = parse_node(tok[0], path, line_no);
        cols = parse_node(tok[1], path, line_no);
        nnz = parse_node(tok[2], path, line_no);
        break;
    }
    if (rows == 0 || rows != cols)
        throw ParseError(path + ": matrix must be square and nonempty");

    Matrix w(static_cast<int>(rows), static_cast<int>(rows));
    std::map<std::pair<int, int>, bool> seen;
    long read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line[0] == '%') continue;
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (static_cast<long>(tok.size()) != (pattern ? 2 : 3))
            parse_fail(path, line_no, pattern ? "expected 'i j'" : "expected 'i j value'");
        const long i1 = parse_node(tok[0], path, line_no);
        const long j1 = parse_node(tok[1], path, line_no);
        if (i1 < 1 || j1 < 1 || i1 > rows || j1 > rows)
            parse_fail(path, line_no, "index out of range");
        const double v = pattern ? 1.0 : parse_weight(tok[2], path, line_no);
        const int i = static_cast<int>(i1 - 1);
        const int j = static_cast<int>(j1 - 1);
        if (i == j) {
            if (v != 0.0)
                throw SelfLoop(path + ":" + std::to_string(line_no) + ": loop at node " +
                               std::to_string(i));
        } else {
            const std::pair<int, int> key = std::minmax(i, j);
            if (!seen.emplace(key, true).second)
                throw DuplicateEdge(path + ":" + std::to_string(line_no) + ": pair (" +
                                    std::to_string(key.first) + ", " +
                                    std::to_string(key.second) + ") appears twice");
            w(i, j) = v;
            w(j, i) = v;
        }
        ++read;
    }
    if (read != nnz)
        throw ParseError(path + ": header promised " + std::to_string(nnz) + " entries, found " +
                         std::to_string(read));
    return Graph::validate(std::move(w));
}

Graph load_graph(const std::string& path) {
    const std::size_t dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : lower(path.substr(dot + 1));
    if (ext == "mtx" || ext == "mm") return parse_matrix_market(path);
    return parse_edge_list(path);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot write");
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ",";
            out << format_double(m(i, j));
        }
        out << "\n";
    }
    if (!out) throw Error(path + ": write failed");
}

void write_pairs_csv(const std::string& path, const std::string& header_a,
                     const std::string& header_b, const std::vector<double>& a,
                     const std::vector<double>& b) {
    if (a.size() != b.size()) throw Error("write_pairs_csv: column length mismatch");
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot write");
    out << header_a << "," << header_b << "\n";
    for (std::size_t k = 0; k < a.size(); ++k)
        out << format_double(a[k]) << "," << format_double(b[k]) << "\n";
    if (!out) throw Error(path + ": write failed");
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot write");
    for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
    out << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size()) throw Error("write_table_csv: ragged row");
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << row[k];
        out << "\n";
    }
    if (!out) throw Error(path + ": write failed");
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(path + ": cannot open for hashing");
    std::uint64_t h = 0xCBF29CE484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize k = 0; k < got; ++k) {
            h ^= static_cast<unsigned char>(buf[k]);
            h *= 0x100000001B3ULL;
        }
        if (!in) break;
    }
    return h;
}

void write_manifest(const RunManifest& m, const std::string& path) {
    nlohmann::json j;
    j["tool"] = m.tool;
    j["version"] = m.version;
    j["operation"] = m.operation;
    j["command"] = m.command;
    nlohmann::json inputs = nlohmann::json::array();
    for (const auto& [p, h] : m.inputs) {
        char hex[19];
        std::snprintf(hex, sizeof hex, "0x%016llx", static_cast<unsigned long long>(h));
        inputs.push_back({{"path", p}, {"fnv1a64", hex}});
    }
    j["inputs"] = inputs;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : m.parameters) params[k] = v;
    j["parameters"] = params;
    j["outputs"] = m.outputs;
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot write");
    out << j.dump(2) << "\n";
    if (!out) throw Error(path + ": write failed");
}

RunManifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    RunManifest m;
    try {
        m.tool = j.at("tool").get<std::string>();
        m.version = j.at("version").get<std::string>();
        m.operation = j.at("operation").get<std::string>();
        m.command = j.at("command").get<std::vector<std::string>>();
        for (const auto& entry : j.at("inputs")) {
            const std::string hex = entry.at("fnv1a64").get<std::string>();
            m.inputs.emplace_back(entry.at("path").get<std::string>(),
                                  std::stoull(hex, nullptr, 16));
        }
        for (const auto& [k, v] : j.at("parameters").items())
            m.parameters.emplace_back(k, v.get<std::string>());
        m.outputs = j.at("outputs").get<std::vector<std::string>>();
    } catch (const std::exception& e) {
        throw ParseError(path + ": missing or bad manifest field: " + e.what());
    }
    return m;
}

}  // namespace ngd
