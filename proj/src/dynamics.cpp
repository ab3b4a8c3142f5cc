#include "ngd/dynamics.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ngd/errors.hpp"
#include "ngd/rng.hpp"

namespace ngd {

Matrix transition_matrix(const Graph& g) {
    const int n = g.size();
    Matrix p(n, n);
    for (int i = 0; i < n; ++i) {
        const double d = g.degree(i);
        for (int j = 0; j < n; ++j) p(i, j) = g.weight(i, j) / d;
    }
    return p;
}

std::vector<double> point_mass(int n, int node) {
    if (node < 0 || node >= n) throw Error("point_mass: node out of range");
    std::vector<double> nu(n, 0.0);
    nu[node] = 1.0;
    return nu;
}

std::vector<double> uniform_distribution(int n) {
    return std::vector<double>(n, 1.0 / n);
}

namespace {

void check_stochastic(const Matrix& p) {
    if (p.rows() != p.cols()) throw Error("simulate: transition matrix not square");
    for (int i = 0; i < p.rows(); ++i) {
        double s = 0.0;
        for (int j = 0; j < p.cols(); ++j) {
            if (p(i, j) < 0.0) throw Error("simulate: negative transition probability");
            s += p(i, j);
        }
        if (std::fabs(s - 1.0) > 1e-9)
            throw Error("simulate: row " + std::to_string(i) + " sums to " + std::to_string(s));
    }
}

void check_distribution(const std::vector<double>& nu, int n) {
    if (static_cast<int>(nu.size()) != n)
        throw InvalidDistribution("start distribution has wrong length");
    double s = 0.0;
    for (double x : nu) {
        if (x < 0.0) throw InvalidDistribution("start distribution has a negative entry");
        s += x;
    }
    if (std::fabs(s - 1.0) > 1e-9)
        throw InvalidDistribution("start distribution sums to " + std::to_string(s));
}

// Inverse-CDF draw; the final index guards against roundoff in the row sum.
int sample_index(const double* weights, int n, double u) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        acc += weights[j];
        if (u < acc) return j;
    }
    for (int j = n - 1; j >= 0; --j)
        if (weights[j] > 0.0) return j;
    return n - 1;
}

void run_walk(const Matrix& p, const std::vector<double>& start, int steps, std::uint64_t seed,
              int walk, std::vector<int>& out) {
    CounterRng rng(seed, static_cast<std::uint64_t>(walk));
    const int n = p.rows();
    out.resize(steps + 1);
    out[0] = sample_index(start.data(), n, rng.next_double());
    for (int s = 1; s <= steps; ++s)
        out[s] = sample_index(p.row(out[s - 1]), n, rng.next_double());
}

WalkEnsemble run_ensemble(const Matrix& p, const std::vector<double>& start, int walks,
                          int steps, std::uint64_t seed, bool parallel) {
    if (walks < 1 || steps < 0) throw Error("simulate: need walks >= 1 and steps >= 0");
    check_stochastic(p);
    check_distribution(start, p.rows());

    WalkEnsemble e;
    e.seed = seed;
    e.steps = steps;
    e.start = start;
    e.trajectories.assign(walks, {});

#pragma omp parallel for schedule(static) if (parallel)
    for (int w = 0; w < walks; ++w) run_walk(p, start, steps, seed, w, e.trajectories[w]);

    e.visits.assign(p.rows(), 0);
    for (const auto& traj : e.trajectories)
        for (int node : traj) ++e.visits[node];
    return e;
}

}  // namespace

WalkEnsemble simulate(const Matrix& p, const std::vector<double>& start, int walks, int steps,
                      std::uint64_t seed) {
    return run_ensemble(p, start, walks, steps, seed, true);
}

namespace serial {
WalkEnsemble simulate(const Matrix& p, const std::vector<double>& start, int walks, int steps,
                      std::uint64_t seed) {
    return run_ensemble(p, start, walks, steps, seed, false);
}
}  // namespace serial

ReturnProbabilityCurve return_probability(const SymmetricEigen& spectrum,
                                          std::vector<double> times, std::string source) {
    const int n = static_cast<int>(spectrum.eigenvalues.size());
    std::vector<double> lambda(spectrum.eigenvalues);
    for (double& l : lambda) {
        if (l < -1e-9)
            throw NegativeEigenvalue("return_probability: eigenvalue " + std::to_string(l) +
                                     " below -1e-9");
        if (l < 0.0) l = 0.0;
    }
    ReturnProbabilityCurve curve;
    curve.source = std::move(source);
    curve.values.reserve(times.size());
    for (double t : times) {
        double s = 0.0;
        for (double l : lambda) s += std::exp(-l * t);
        curve.values.push_back(s / n);
    }
    curve.times = std::move(times);
    return curve;
}

std::vector<double> log_time_grid(double t_min, double t_max, int points) {
    if (!(t_min > 0.0) || !(t_max > t_min) || points < 2)
        throw Error("log_time_grid: need 0 < t_min < t_max and points >= 2");
    std::vector<double> t(points);
    const double step = (std::log(t_max) - std::log(t_min)) / (points - 1);
    for (int k = 0; k < points; ++k) t[k] = std::exp(std::log(t_min) + step * k);
    t.front() = t_min;
    t.back() = t_max;
    return t;
}

}  // namespace ngd
