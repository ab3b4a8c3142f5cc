#include "ngd/generators.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ngd/errors.hpp"
#include "ngd/rng.hpp"

namespace ngd {

Graph gen_cycle(int n, const std::vector<double>& weights) {
    if (n < 3) throw Error("gen_cycle: need n >= 3");
    if (static_cast<int>(weights.size()) != n)
        throw BadWeightCount("gen_cycle: expected " + std::to_string(n) + " weights, got " +
                             std::to_string(weights.size()));
    Matrix w(n, n);
    for (int i = 0; i < n; ++i) {
        if (!(weights[i] > 0.0)) throw Error("gen_cycle: weights must be positive");
        const int j = (i + 1) % n;
        w(i, j) = weights[i];
        w(j, i) = weights[i];
    }
    return Graph::validate(std::move(w));
}

Graph gen_cycle(int n, double weight) {
    return gen_cycle(n, std::vector<double>(n, weight));
}

Graph gen_path(int n) {
    if (n < 2) throw Error("gen_path: need n >= 2");
    Matrix w(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        w(i, i + 1) = 1.0;
        w(i + 1, i) = 1.0;
    }
    return Graph::validate(std::move(w));
}

Graph gen_barabasi_albert(const BAConfig& cfg) {
    if (cfg.n0 < 2 || cfg.m < 1 || cfg.m > cfg.n0 || cfg.n <= cfg.n0)
        throw Error("gen_barabasi_albert: need n > n0 >= m >= 1 and n0 >= 2");
    if (cfg.theta < 0.0 || cfg.theta >= 1.0)
        throw Error("gen_barabasi_albert: theta must lie in [0, 1)");

    const int n = cfg.n;
    std::vector<std::vector<int>> adj(n);
    std::vector<std::int64_t> deg(n, 0);
    std::int64_t total_degree = 0;
    auto connect = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++deg[a];
        ++deg[b];
        total_degree += 2;
    };

    for (int i = 0; i < cfg.n0; ++i)
        for (int j = i + 1; j < cfg.n0; ++j) connect(i, j);

    CounterRng rng(cfg.seed, 0);
    std::vector<char> taken(n, 0);
    for (int v = cfg.n0; v < n; ++v) {
        // m distinct targets, degree-proportional, by rejection
        std::vector<int> picks;
        while (static_cast<int>(picks.size()) < cfg.m) {
            std::int64_t ticket =
                static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(total_degree)));
            int t = 0;
            while (ticket >= deg[t]) ticket -= deg[t++];
            if (taken[t]) continue;
            taken[t] = 1;
            picks.push_back(t);
        }
        for (int t : picks) {
            taken[t] = 0;
            connect(v, t);
        }
    }

    Matrix w(n, n);
    for (int i = 0; i < n; ++i)
        for (int j : adj[i])
            w(i, j) = cfg.theta == 0.0
                          ? 1.0
                          : std::pow(static_cast<double>(deg[i] * deg[j]), cfg.theta);
    return Graph::validate(std::move(w));
}

}  // namespace ngd
