// Command-line front end. Every subcommand that writes files also drops a
// manifest (argv, input hashes, output list) next to them; `rerun` replays a
// manifest and is expected to reproduce the outputs byte for byte.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ngd/analytics.hpp"
#include "ngd/compat.hpp"
#include "ngd/dynamics.hpp"
#include "ngd/errors.hpp"
#include "ngd/generators.hpp"
#include "ngd/graph.hpp"
#include "ngd/io.hpp"
#include "ngd/metrics.hpp"
#include "ngd/nonlocal.hpp"
#include "ngd/parallel.hpp"
#include "ngd/regularize.hpp"
#include "ngd/spectral.hpp"

namespace {

using ngd::Graph;
using ngd::Matrix;

int run_command(const std::vector<std::string>& args);

std::string joined(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ngd::Error(dir + ": cannot create output directory");
}

ngd::RunManifest start_manifest(const std::string& op, const std::vector<std::string>& args) {
    ngd::RunManifest m;
    m.operation = op;
    m.command = args;
    return m;
}

void add_input(ngd::RunManifest& m, const std::string& path) {
    m.inputs.emplace_back(path, ngd::fnv1a_file(path));
}

void add_param(ngd::RunManifest& m, const std::string& key, const std::string& value) {
    m.parameters.emplace_back(key, value);
}

void add_param(ngd::RunManifest& m, const std::string& key, double value) {
    m.parameters.emplace_back(key, ngd::format_double(value));
}

// "min:max:points" -> log grid parameters
void parse_t_grid(const std::string& text, double& t_min, double& t_max, int& t_points) {
    const std::size_t a = text.find(':');
    const std::size_t b = text.rfind(':');
    try {
        if (a == std::string::npos || b == a) throw ngd::Error("");
        t_min = std::stod(text.substr(0, a));
        t_max = std::stod(text.substr(a + 1, b - a - 1));
        t_points = std::stoi(text.substr(b + 1));
    } catch (...) {
        throw ngd::Error("--t-grid expects min:max:points, got '" + text + "'");
    }
}

ngd::KernelSpec make_kernel(const std::string& family, double alpha,
                            const std::string& distance) {
    const ngd::DistanceKind d = distance == "sp" ? ngd::DistanceKind::WeightedShortestPath
                                                 : ngd::DistanceKind::Combinatorial;
    if (family == "laplace") return ngd::KernelSpec::laplace(alpha, d);
    return ngd::KernelSpec::mellin(alpha, d);
}

double resolve_beta(const std::string& text, const Graph& base, const ngd::NonlocalGraph& nl) {
    if (text == "auto") return ngd::beta_heuristic(base, nl);
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw ngd::Error("");
        return v;
    } catch (...) {
        throw ngd::Error("--beta expects a positive number or 'auto', got '" + text + "'");
    }
}

void write_graph_outputs(const Graph& g, const std::string& dir, const std::string& stem,
                         ngd::RunManifest& m) {
    const std::string weights = joined(dir, stem + "_weights.csv");
    const std::string edges = joined(dir, stem + "_graph.tsv");
    ngd::write_matrix_csv(g.weights(), weights);
    ngd::write_edge_list(g, edges);
    m.outputs.push_back(weights);
    m.outputs.push_back(edges);
}

void finish_manifest(ngd::RunManifest& m, const std::string& dir, const std::string& stem) {
    const std::string path = joined(dir, stem + "_manifest.json");
    ngd::write_manifest(m, path);
}

int cmd_laplacian(const std::vector<std::string>& args, const std::string& input,
                  const std::string& dir) {
    ensure_dir(dir);
    ngd::RunManifest m = start_manifest("laplacian", args);
    add_input(m, input);
    const Graph g = ngd::load_graph(input);
    const std::string lap = joined(dir, "laplacian.csv");
    const std::string nlap = joined(dir, "laplacian_normalized.csv");
    ngd::write_matrix_csv(ngd::laplacian(g).entries, lap);
    ngd::write_matrix_csv(ngd::normalized_laplacian(g).entries, nlap);
    m.outputs = {lap, nlap};
    finish_manifest(m, dir, "laplacian");
    return 0;
}

int cmd_fractional(const std::vector<std::string>& args, const std::string& input,
                   const std::string& dir, double alpha) {
    ensure_dir(dir);
    ngd::RunManifest m = start_manifest("fractional", args);
    add_input(m, input);
    add_param(m, "alpha", alpha);
    const Graph g = ngd::load_graph(input);
    const ngd::NonlocalGraph nl = ngd::fractional_graph(g, alpha);
    write_graph_outputs(nl.graph, dir, "fractional", m);
    finish_manifest(m, dir, "fractional");
    return 0;
}

int cmd_path(const std::vector<std::string>& args, const std::string& input,
             const std::string& dir, const std::string& kernel, double alpha,
             const std::string& distance) {
    ensure_dir(dir);
    ngd::RunManifest m = start_manifest("path", args);
    add_input(m, input);
    add_param(m, "alpha", alpha);
    add_param(m, "kernel", kernel);
    add_param(m, "distance", distance);
    const Graph g = ngd::load_graph(input);
    const ngd::NonlocalGraph nl =
        ngd::path_graph(g, make_kernel(kernel, alpha, distance), ngd::distance_tables(g));
    write_graph_outputs(nl.graph, dir, "path", m);
    finish_manifest(m, dir, "path");
    return 0;
}

int cmd_regularize(const std::vector<std::string>& args, const std::string& input,
                   const std::string& dir, double alpha, const std::string& beta_text,
                   const std::string& construction, const std::string& kernel,
                   const std::string& distance) {
    ensure_dir(dir);
    ngd::RunManifest m = start_manifest("regularize", args);
    add_input(m, input);
    const Graph g = ngd::load_graph(input);
    const ngd::NonlocalGraph nl =
        construction == "path"
            ? ngd::path_graph(g, make_kernel(kernel, alpha, distance), ngd::distance_tables(g))
            : ngd::fractional_graph(g, alpha);
    const double beta = resolve_beta(beta_text, g, nl);
    add_param(m, "alpha", alpha);
    add_param(m, "beta", beta);
    add_param(m, "construction", construction);
    if (construction == "path") {
        add_param(m, "kernel", kernel);
        add_param(m, "distance", distance);
    }
    const ngd::RegularizedGraph rg = ngd::regularize(g, nl, beta);
    std::cout << "beta = " << ngd::format_double(beta) << "\n";
    write_graph_outputs(rg.graph, dir, "regularized", m);
    finish_manifest(m, dir, "regularize");
    return 0;
}

int cmd_check_compat(const std::vector<std::string>& args, const std::string& input,
                     const std::string& dir, const std::string& against, double alpha,
                     const std::string& kernel, const std::string& distance, double tolerance) {
    ensure_dir(dir);
    ngd::RunManifest m = start_manifest("check-compat", args);
    add_input(m, input);
    const Graph g = ngd::load_graph(input);

    ngd::CompatReport report;
    if (against == "fractional") {
        if (tolerance <= 0.0) tolerance = 1e-6;  // eigensolver-derived weights
        report = ngd::check_compatibility(g, ngd::fractional_graph(g, alpha).graph, {}, tolerance);
        add_param(m, "alpha", alpha);
    } else if (against == "path") {
        if (tolerance <= 0.0) tolerance = 1e-9;
        report = ngd::check_path_compatibility(g, make_kernel(kernel, alpha, distance),
                                               ngd::distance_tables(g), tolerance);
        add_param(m, "alpha", alpha);
        add_param(m, "kernel", kernel);
        add_param(m, "distance", distance);
    } else {
        if (tolerance <= 0.0) tolerance = 1e-9;
        add_input(m, against);
        report = ngd::check_compatibility(g, ngd::load_graph(against), {}, tolerance);
    }
    add_param(m, "against", against);
    add_param(m, "tolerance", tolerance);

    std::vector<std::vector<std::string>> rows;
    for (const ngd::CompatWitness& w : report.witnesses)
        rows.push_back({std::to_string(w.anchor), std::to_string(w.j), std::to_string(w.k),
                        ngd::format_double(w.base_ratio), ngd::format_double(w.super_ratio),
                        ngd::format_double(w.deviation)});
    const std::string report_path = joined(dir, "compat_report.csv");
    ngd::write_table_csv(report_path, {"anchor", "j", "k", "base_ratio", "super_ratio", "deviation"},
                         rows);
    m.outputs = {report_path};
    finish_manifest(m, dir, "compat");

    if (report.compatible)
        std::cout << "compatible (worst deviation " << ngd::format_double(report.worst_deviation)
                  << ", tolerance " << ngd::format_double(report.tolerance) << ")\n";
    else
        std::cout << "incompatible: " << report.witnesses.size()
                  << " witness triples, worst deviation "
                  << ngd::format_double(report.worst_deviation) << " (tolerance "
                  << ngd::format_double(report.tolerance) << ")\n";
    return 0;
}

int cmd_walk(const std::vector<std::string>& args, const std::string& input,
             const std::string& dir, int walks, int steps, std::uint64_t seed,
             const std::string& start, const std::string& conditioned_on, bool trajectories) {
    ensure_dir(dir);
    ngd::RunManifest m = start_manifest("walk", args);
    add_input(m, input);
    add_param(m, "walks", std::to_string(walks));
    add_param(m, "steps", std::to_string(steps));
    add_param(m, "seed", std::to_string(seed));
    add_param(m, "start", start);
    const Graph g = ngd::load_graph(input);

    Matrix p;
    if (conditioned_on.empty()) {
        p = ngd::transition_matrix(g);
    } else {
        add_input(m, conditioned_on);
        add_param(m, "conditioned_on", conditioned_on);
        p = ngd::conditioned_transition(g, ngd::EdgeSet(ngd::load_graph(conditioned_on)));
    }

    std::vector<double> nu;
    if (start == "uniform") {
        nu = ngd::uniform_distribution(g.size());
    } else {
        try {
            nu = ngd::point_mass(g.size(), std::stoi(start));
        } catch (const ngd::Error&) {
            throw;
        } catch (...) {
            throw ngd::Error("--start expects a node id or 'uniform', got '" + start + "'");
        }
    }

    const ngd::WalkEnsemble e = ngd::simulate(p, nu, walks, steps, seed);

    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < g.size(); ++i)
        rows.push_back({std::to_string(i), std::to_string(e.visits[i])});
    const std::string visits_path = joined(dir, "walk_visits.csv");
    ngd::write_table_csv(visits_path, {"node", "visits"}, rows);
    m.outputs = {visits_path};

    if (trajectories) {
        const std::string traj_path = joined(dir, "walk_trajectories.csv");
        std::vector<std::vector<std::string>> traj_rows;
        for (int w = 0; w < walks; ++w) {
            std::vector<std::string> row{std::to_string(w)};
            std::string nodes;
            for (std::size_t s = 0; s < e.trajectories[w].size(); ++s)
                nodes += (s ? " " : "") + std::to_string(e.trajectories[w][s]);
            row.push_back(nodes);
            traj_rows.push_back(std::move(row));
        }
        ngd::write_table_csv(traj_path, {"walk", "nodes"}, traj_rows);
        m.outputs.push_back(traj_path);
    }
    finish_manifest(m, dir, "walk");
    return 0;
}

int cmd_analyze(const std::vector<std::string>& args, const std::string& input,
                const std::string& dir, bool stationary, bool mfpt, bool trapping,
                bool return_prob, bool decay, double alpha, const std::string& beta_text,
                const std::string& t_grid) {
    double t_min = 1e-2, t_max = 1e3;
    int t_points = 48;
    if (!t_grid.empty()) parse_t_grid(t_grid, t_min, t_max, t_points);
    ensure_dir(dir);
    ngd::RunManifest m = start_manifest("analyze", args);
    add_input(m, input);
    if (alpha > 0.0) add_param(m, "alpha", alpha);
    if (return_prob)
        add_param(m, "t_grid", ngd::format_double(t_min) + ":" + ngd::format_double(t_max) +
                                   ":" + std::to_string(t_points));
    const Graph g = ngd::load_graph(input);

    if (stationary) {
        const std::vector<double> pi = ngd::stationary_distribution(g);
        std::vector<double> idx(pi.size());
        for (std::size_t i = 0; i < pi.size(); ++i) idx[i] = static_cast<double>(i);
        const std::string path = joined(dir, "stationary.csv");
        ngd::write_pairs_csv(path, "node", "pi", idx, pi);
        m.outputs.push_back(path);
    }

    if (mfpt || trapping) {
        const ngd::PassageTimes pt = ngd::mfpt_spectral(g);
        if (mfpt) {
            const std::string path = joined(dir, "mfpt.csv");
            ngd::write_matrix_csv(pt.mfpt, path);
            m.outputs.push_back(path);
        }
        if (trapping) {
            std::vector<double> idx(pt.trapping.size());
            for (std::size_t i = 0; i < pt.trapping.size(); ++i) idx[i] = static_cast<double>(i);
            const std::string path = joined(dir, "trapping.csv");
            ngd::write_pairs_csv(path, "node", "trapping_time", idx, pt.trapping);
            m.outputs.push_back(path);
        }
    }

    if (return_prob) {
        const std::vector<double> grid = ngd::log_time_grid(t_min, t_max, t_points);
        auto emit = [&](const Graph& h, const std::string& tag) {
            const ngd::ReturnProbabilityCurve curve =
                ngd::return_probability(ngd::normalized_laplacian_spectrum(h).eig, grid, tag);
            const std::string path = joined(dir, "return_probability_" + tag + ".csv");
            ngd::write_pairs_csv(path, "t", "p0", curve.times, curve.values);
            m.outputs.push_back(path);
        };
        emit(g, "local");
        if (alpha > 0.0) {
            const ngd::NonlocalGraph nl = ngd::fractional_graph(g, alpha);
            emit(nl.graph, "fractional");
            const double beta = resolve_beta(beta_text, g, nl);
            add_param(m, "beta", beta);
            emit(ngd::regularize(g, nl, beta).graph, "regularized");
        }
    }

    if (decay) {
        if (!(alpha > 0.0)) throw ngd::Error("--decay-audit needs --alpha");
        const ngd::NonlocalGraph nl = ngd::fractional_graph(g, alpha);
        const ngd::DecayAuditReport rep = ngd::decay_audit(g, nl.graph, alpha);
        std::vector<std::vector<std::string>> rows;
        for (const ngd::DecayBin& b : rep.bins)
            rows.push_back({std::to_string(b.distance), std::to_string(b.pairs),
                            ngd::format_double(b.max_weight), ngd::format_double(b.gap_bound)});
        const std::string path = joined(dir, "decay_audit.csv");
        ngd::write_table_csv(path, {"delta", "pairs", "max_weight", "gap_bound"}, rows);
        m.outputs.push_back(path);
        std::cout << "decay audit: rho = " << ngd::format_double(rep.rho)
                  << ", max gap ratio = " << ngd::format_double(rep.max_gap_ratio)
                  << ", max shifted ratio = " << ngd::format_double(rep.max_shift_ratio) << ", "
                  << (rep.bounded ? "bounded" : "VIOLATED") << "\n";
    }

    if (m.outputs.empty())
        throw ngd::Error("analyze: nothing to do (pass --stationary, --mfpt, --trapping, "
                         "--return-prob or --decay-audit)");
    finish_manifest(m, dir, "analyze");
    return 0;
}

int cmd_generate(const std::vector<std::string>& args, const std::string& family,
                 const std::string& dir, const std::string& out_name, int n,
                 const std::vector<double>& weights, int n0, int m_edges, double theta,
                 std::uint64_t seed) {
    ensure_dir(dir);
    ngd::RunManifest man = start_manifest("generate", args);
    add_param(man, "family", family);
    add_param(man, "n", std::to_string(n));
    if (family == "ba") {
        add_param(man, "n0", std::to_string(n0));
        add_param(man, "m", std::to_string(m_edges));
        add_param(man, "theta", theta);
        add_param(man, "seed", std::to_string(seed));
    }
    Graph g = [&]() {
        if (family == "cycle")
            return weights.empty() ? ngd::gen_cycle(n) : ngd::gen_cycle(n, weights);
        if (family == "path") return ngd::gen_path(n);
        if (family == "ba")
            return ngd::gen_barabasi_albert(ngd::BAConfig{n, n0, m_edges, theta, seed});
        throw ngd::Error("generate: unknown family '" + family + "'");
    }();
    const std::string path = joined(dir, out_name);
    ngd::write_edge_list(g, path);
    man.outputs = {path};
    finish_manifest(man, dir, "generate");
    std::cout << "wrote " << path << " (" << g.size() << " nodes, " << g.edge_count()
              << " edges)\n";
    return 0;
}

int cmd_rerun(const std::string& manifest_path) {
    const ngd::RunManifest m = ngd::read_manifest(manifest_path);
    if (m.command.empty()) throw ngd::Error(manifest_path + ": manifest records no command");
    if (m.command[0] == "rerun") throw ngd::Error("refusing to rerun a rerun manifest");
    for (const auto& [path, hash] : m.inputs)
        if (ngd::fnv1a_file(path) != hash)
            throw ngd::Error(path + ": content changed since the manifest was recorded");
    return run_command(m.command);
}

int run_command(const std::vector<std::string>& args) {
    CLI::App app{"nonlocal graph dynamics toolkit"};
    app.set_version_flag("--version", ngd::kVersion);
    app.require_subcommand(1);

    std::string input, dir = ".";
    double alpha = 0.0, tolerance = -1.0;
    std::string kernel = "mellin", distance = "comb", beta_text = "auto";
    std::string against = "fractional", start = "uniform", conditioned_on;
    int walks = 1000, steps = 100;
    std::uint64_t seed = 1;
    bool trajectories = false;
    bool f_stationary = false, f_mfpt = false, f_trapping = false, f_return = false,
         f_decay = false;
    std::string t_grid;
    std::string family, out_name = "generated.tsv";
    int n = 0, n0 = 5, m_edges = 3;
    double theta = 0.0;
    std::string manifest_path;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("input", input, "graph file (edge-list TSV or MatrixMarket)")
            ->required();
        sub->add_option("-o,--output-dir", dir, "directory for outputs");
    };

    CLI::App* lap = app.add_subcommand("laplacian", "emit the Laplacian matrices as CSV");
    add_io(lap);

    CLI::App* frac = app.add_subcommand("fractional", "build the fractional-power graph");
    add_io(frac);
    frac->add_option("--alpha", alpha, "power in (0, 1]")->required();

    CLI::App* path_cmd = app.add_subcommand("path", "build the path-kernel graph");
    add_io(path_cmd);
    path_cmd->add_option("--alpha", alpha, "kernel parameter, > 0")->required();
    path_cmd->add_option("--kernel", kernel, "mellin | laplace")
        ->check(CLI::IsMember({"mellin", "laplace"}));
    path_cmd->add_option("--distance", distance, "comb | sp")
        ->check(CLI::IsMember({"comb", "sp"}));

    CLI::App* reg = app.add_subcommand("regularize", "restore base edges on a nonlocal graph");
    add_io(reg);
    reg->add_option("--alpha", alpha, "nonlocal parameter")->required();
    reg->add_option("--beta", beta_text, "off-edge scale, number or 'auto'");
    std::string construction = "fractional";
    reg->add_option("--construction", construction, "fractional | path")
        ->check(CLI::IsMember({"fractional", "path"}));
    reg->add_option("--kernel", kernel, "mellin | laplace (path construction)")
        ->check(CLI::IsMember({"mellin", "laplace"}));
    reg->add_option("--distance", distance, "comb | sp (path construction)")
        ->check(CLI::IsMember({"comb", "sp"}));

    CLI::App* compat = app.add_subcommand("check-compat", "ratio test against a supergraph");
    add_io(compat);
    compat->add_option("--against", against, "fractional | path | FILE");
    compat->add_option("--alpha", alpha, "parameter for constructed supergraphs");
    compat->add_option("--kernel", kernel, "mellin | laplace (path target)")
        ->check(CLI::IsMember({"mellin", "laplace"}));
    compat->add_option("--distance", distance, "comb | sp (path target)")
        ->check(CLI::IsMember({"comb", "sp"}));
    compat->add_option("--tolerance", tolerance,
                       "relative ratio tolerance (default 1e-6 constructed, 1e-9 file)");

    CLI::App* walk = app.add_subcommand("walk", "simulate random-walk ensembles");
    add_io(walk);
    walk->add_option("--walks", walks, "ensemble size")->check(CLI::PositiveNumber);
    walk->add_option("--steps", steps, "transitions per walk")->check(CLI::NonNegativeNumber);
    walk->add_option("--seed", seed, "RNG seed");
    walk->add_option("--start", start, "start node id or 'uniform'");
    walk->add_option("--conditioned-on", conditioned_on,
                     "edge-list file; walk is conditioned to these edges");
    walk->add_flag("--trajectories", trajectories, "also write full trajectories");

    CLI::App* analyze = app.add_subcommand("analyze", "walk statistics and audits");
    add_io(analyze);
    analyze->add_flag("--stationary", f_stationary, "stationary distribution");
    analyze->add_flag("--mfpt", f_mfpt, "mean first-passage time matrix");
    analyze->add_flag("--trapping", f_trapping, "stationary-averaged trapping times");
    analyze->add_flag("--return-prob", f_return, "average return probability curve");
    analyze->add_flag("--decay-audit", f_decay, "check the fractional decay bound");
    analyze->add_option("--alpha", alpha, "also emit fractional/regularized variants");
    analyze->add_option("--beta", beta_text, "off-edge scale for the regularized variant");
    analyze->add_option("--t-grid", t_grid, "log time grid as min:max:points (default 0.01:1000:48)");

    CLI::App* gen = app.add_subcommand("generate", "write a generated graph as edge list");
    gen->add_option("family", family, "cycle | path | ba")->required()
        ->check(CLI::IsMember({"cycle", "path", "ba"}));
    gen->add_option("-o,--output-dir", dir, "directory for outputs");
    gen->add_option("--out", out_name, "output file name");
    gen->add_option("--n", n, "node count")->required();
    std::vector<double> weights;
    gen->add_option("--weights", weights, "cycle edge weights w(i, i+1 mod n)")
        ->delimiter(',');
    gen->add_option("--n0", n0, "seed clique size (ba)");
    gen->add_option("--m", m_edges, "edges per new node (ba)");
    gen->add_option("--theta", theta, "degree-product weight exponent (ba)");
    gen->add_option("--seed", seed, "RNG seed (ba)");

    CLI::App* rerun = app.add_subcommand("rerun", "replay a recorded run from its manifest");
    rerun->add_option("manifest", manifest_path, "manifest JSON path")->required();

    std::vector<const char*> argv;
    argv.push_back("ngd");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (lap->parsed()) return cmd_laplacian(args, input, dir);
    if (frac->parsed()) return cmd_fractional(args, input, dir, alpha);
    if (path_cmd->parsed()) return cmd_path(args, input, dir, kernel, alpha, distance);
    if (reg->parsed())
        return cmd_regularize(args, input, dir, alpha, beta_text, construction, kernel, distance);
    if (compat->parsed())
        return cmd_check_compat(args, input, dir, against, alpha, kernel, distance, tolerance);
    if (walk->parsed())
        return cmd_walk(args, input, dir, walks, steps, seed, start, conditioned_on, trajectories);
    if (analyze->parsed())
        return cmd_analyze(args, input, dir, f_stationary, f_mfpt, f_trapping, f_return, f_decay,
                           alpha, beta_text, t_grid);
    if (gen->parsed())
        return cmd_generate(args, family, dir, out_name, n, weights, n0, m_edges, theta, seed);
    if (rerun->parsed()) return cmd_rerun(manifest_path);
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    ngd::apply_thread_cap();
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run_command(args);
    } catch (const ngd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
