// Times the OpenMP kernels against their serial reference twins on one
// Barabasi-Albert instance. Usage: bench_kernels [n] [repeats].

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "ngd/analytics.hpp"
#include "ngd/compat.hpp"
#include "ngd/dynamics.hpp"
#include "ngd/generators.hpp"
#include "ngd/matrix.hpp"
#include "ngd/metrics.hpp"
#include "ngd/nonlocal.hpp"
#include "ngd/parallel.hpp"
#include "ngd/rng.hpp"

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// checksum keeps the optimizer honest
double sink = 0.0;

template <typename F>
double time_best(int repeats, F&& body) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const double t0 = now_seconds();
        sink += body();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << std::left << std::setw(28) << name << std::right << std::fixed
              << std::setprecision(4) << std::setw(10) << serial << " s" << std::setw(10)
              << parallel << " s" << std::setprecision(2) << std::setw(9)
              << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    ngd::apply_thread_cap();
    const int n = argc > 1 ? std::atoi(argv[1]) : 400;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    const ngd::Graph g = ngd::gen_barabasi_albert({n, 5, 3, 0.2, 7});
    std::cout << "graph: BA n=" << n << ", " << g.edge_count() << " edges, "
              << ngd::max_threads() << " thread(s)\n";
    std::cout << std::left << std::setw(28) << "kernel" << std::right << std::setw(12)
              << "serial" << std::setw(12) << "parallel" << std::setw(10) << "speedup\n";

    ngd::Matrix a(n, n), b(n, n);
    ngd::CounterRng rng(13, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a(i, j) = rng.next_double();
            b(i, j) = rng.next_double();
        }
    row("matrix multiply",
        time_best(repeats, [&] { return ngd::serial::multiply(a, b)(0, 0); }),
        time_best(repeats, [&] { return ngd::multiply(a, b)(0, 0); }));

    row("weighted shortest paths",
        time_best(repeats, [&] { return ngd::serial::weighted_shortest_paths(g)(0, 1); }),
        time_best(repeats, [&] { return ngd::weighted_shortest_paths(g)(0, 1); }));

    row("hop distances",
        time_best(repeats,
                  [&] { return static_cast<double>(ngd::serial::combinatorial_distances(g)[1]); }),
        time_best(repeats,
                  [&] { return static_cast<double>(ngd::combinatorial_distances(g)[1]); }));

    const ngd::NonlocalGraph nl = ngd::fractional_graph(g, 0.5);
    row("compatibility scan",
        time_best(repeats,
                  [&] { return ngd::serial::check_compatibility(g, nl.graph).worst_deviation; }),
        time_best(repeats, [&] { return ngd::check_compatibility(g, nl.graph).worst_deviation; }));

    row("first-passage solve",
        time_best(repeats, [&] { return ngd::serial::mfpt_solve(g).mfpt(0, 1); }),
        time_best(repeats, [&] { return ngd::mfpt_solve(g).mfpt(0, 1); }));

    const ngd::Matrix p = ngd::transition_matrix(g);
    const std::vector<double> start = ngd::uniform_distribution(n);
    row("walk ensemble (2e4 x 100)",
        time_best(repeats,
                  [&] {
                      return static_cast<double>(
                          ngd::serial::simulate(p, start, 20000, 100, 5).visits[0]);
                  }),
        time_best(repeats, [&] {
            return static_cast<double>(ngd::simulate(p, start, 20000, 100, 5).visits[0]);
        }));

    std::cout << "checksum " << sink << "\n";
    return 0;
}
