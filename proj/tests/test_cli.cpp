#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef NGD_CLI_PATH
#error "NGD_CLI_PATH must point at the ngd binary"
#endif

namespace {

namespace fs = std::filesystem;

fs::path scratch_root() {
    return fs::temp_directory_path() / "ngd_cli_scratch";
}

// Fresh per-case scratch directory.
fs::path scratch(const std::string& name) {
    const fs::path dir = scratch_root() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args, const std::string& capture = "") {
    std::string cmd = std::string(NGD_CLI_PATH) + " " + args;
    if (capture.empty())
        cmd += " > /dev/null 2>&1";
    else
        cmd += " > " + capture + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("cli exit codes distinguish usage, validation and success") {
    const fs::path dir = scratch("exit_codes");
    CHECK(run_cli("") == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("fractional missing.tsv") == 2);  // --alpha is required
    CHECK(run_cli("--version") == 0);

    CHECK(run_cli("fractional --alpha 0.5 " + (dir / "missing.tsv").string()) == 1);

    const std::string graph = (dir / "generated.tsv").string();
    REQUIRE(run_cli("generate cycle --n 8 -o " + dir.string()) == 0);
    CHECK(fs::exists(graph));
    CHECK(run_cli("fractional --alpha 1.5 " + graph + " -o " + dir.string()) == 1);
    CHECK(run_cli("fractional --alpha 0.5 " + graph + " -o " + dir.string()) == 0);
    CHECK(fs::exists(dir / "fractional_graph.tsv"));
    CHECK(fs::exists(dir / "fractional_weights.csv"));
    CHECK(fs::exists(dir / "fractional_manifest.json"));
}

TEST_CASE("cli pipeline: generate, fractional, compatibility verdicts") {
    const fs::path dir = scratch("pipeline");
    REQUIRE(run_cli("generate cycle --n 8 -o " + dir.string()) == 0);
    const std::string graph = (dir / "generated.tsv").string();

    const std::string verdict = (dir / "verdict.txt").string();
    REQUIRE(run_cli("check-compat --against fractional --alpha 0.5 " + graph + " -o " +
                        dir.string(),
                    verdict) == 0);
    CHECK(slurp(verdict).find("compatible") == 0);
    CHECK(fs::exists(dir / "compat_report.csv"));

    // lopsided cycle against a shortest-path kernel: never compatible
    REQUIRE(run_cli("generate cycle --n 4 --weights 1,0.1,0.1,0.1 --out lopsided.tsv -o " +
                    dir.string()) == 0);
    REQUIRE(run_cli("check-compat --against path --alpha 1 --distance sp " +
                        (dir / "lopsided.tsv").string() + " -o " + dir.string(),
                    verdict) == 0);
    CHECK(slurp(verdict).find("incompatible") == 0);
}

TEST_CASE("cli laplacian output is exact for a single edge") {
    const fs::path dir = scratch("laplacian");
    REQUIRE(run_cli("generate path --n 2 -o " + dir.string()) == 0);
    REQUIRE(run_cli("laplacian " + (dir / "generated.tsv").string() + " -o " + dir.string()) ==
            0);
    CHECK(slurp(dir / "laplacian.csv") == "1,-1\n-1,1\n");
    CHECK(slurp(dir / "laplacian_normalized.csv") == "1,-1\n-1,1\n");
}

TEST_CASE("cli rerun reproduces outputs byte for byte across thread caps") {
    const fs::path dir = scratch("rerun");
    REQUIRE(run_cli("generate ba --n 40 --n0 5 --m 3 --theta 0.2 --seed 99 -o " +
                    dir.string()) == 0);
    const std::string graph = (dir / "generated.tsv").string();

    REQUIRE(run_cli("walk --walks 64 --steps 25 --seed 7 --start 0 --trajectories " + graph +
                    " -o " + dir.string()) == 0);
    const std::string visits = slurp(dir / "walk_visits.csv");
    const std::string traj = slurp(dir / "walk_trajectories.csv");
    REQUIRE(!visits.empty());

    // replay under a different thread cap; per-walk RNG streams keep the
    // ensemble identical
    setenv("NGD_THREADS", "4", 1);
    REQUIRE(run_cli("rerun " + (dir / "walk_manifest.json").string()) == 0);
    unsetenv("NGD_THREADS");
    CHECK(slurp(dir / "walk_visits.csv") == visits);
    CHECK(slurp(dir / "walk_trajectories.csv") == traj);

    REQUIRE(run_cli("fractional --alpha 0.5 " + graph + " -o " + dir.string()) == 0);
    const std::string weights = slurp(dir / "fractional_weights.csv");
    setenv("NGD_THREADS", "3", 1);
    REQUIRE(run_cli("rerun " + (dir / "fractional_manifest.json").string()) == 0);
    unsetenv("NGD_THREADS");
    CHECK(slurp(dir / "fractional_weights.csv") == weights);
}

TEST_CASE("cli rerun refuses stale inputs") {
    const fs::path dir = scratch("stale");
    REQUIRE(run_cli("generate cycle --n 6 -o " + dir.string()) == 0);
    const std::string graph = (dir / "generated.tsv").string();
    REQUIRE(run_cli("fractional --alpha 0.5 " + graph + " -o " + dir.string()) == 0);

    std::ofstream(graph, std::ios::app) << "# touched\n";
    CHECK(run_cli("rerun " + (dir / "fractional_manifest.json").string()) == 1);
}

TEST_CASE("cli analyze emits the requested tables") {
    const fs::path dir = scratch("analyze");
    REQUIRE(run_cli("generate cycle --n 10 -o " + dir.string()) == 0);
    const std::string graph = (dir / "generated.tsv").string();

    REQUIRE(run_cli("analyze --stationary --mfpt --trapping " + graph + " -o " + dir.string()) ==
            0);
    CHECK(fs::exists(dir / "stationary.csv"));
    CHECK(fs::exists(dir / "mfpt.csv"));
    CHECK(fs::exists(dir / "trapping.csv"));

    REQUIRE(run_cli("analyze --return-prob --decay-audit --alpha 0.5 --t-grid 0.1:100:16 " +
                    graph + " -o " + dir.string()) == 0);
    CHECK(fs::exists(dir / "return_probability_local.csv"));
    CHECK(fs::exists(dir / "return_probability_fractional.csv"));
    CHECK(fs::exists(dir / "return_probability_regularized.csv"));
    CHECK(fs::exists(dir / "decay_audit.csv"));

    CHECK(run_cli("analyze " + graph + " -o " + dir.string()) == 1);  // nothing requested
    CHECK(run_cli("analyze --return-prob --t-grid bogus " + graph + " -o " + dir.string()) == 1);
}

TEST_CASE("cli walk can be conditioned on an edge file") {
    const fs::path dir = scratch("conditioned");
    REQUIRE(run_cli("generate cycle --n 6 -o " + dir.string()) == 0);
    const std::string base = (dir / "generated.tsv").string();
    REQUIRE(run_cli("regularize --alpha 0.5 --beta auto " + base + " -o " + dir.string()) == 0);
    const std::string reg = (dir / "regularized_graph.tsv").string();

    REQUIRE(run_cli("walk --walks 20 --steps 15 --seed 3 --trajectories --conditioned-on " +
                    base + " " + reg + " -o " + dir.string()) == 0);
    const std::string conditioned = slurp(dir / "walk_trajectories.csv");

    const fs::path plain_dir = scratch("conditioned_plain");
    REQUIRE(run_cli("walk --walks 20 --steps 15 --seed 3 --trajectories " + base + " -o " +
                    plain_dir.string()) == 0);
    CHECK(conditioned == slurp(plain_dir / "walk_trajectories.csv"));
}
