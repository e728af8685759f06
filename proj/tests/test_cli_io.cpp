#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "hypstab/csv.hpp"
#include "hypstab/harness.hpp"

using namespace hypstab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t line_count(const std::string& text) {
    std::size_t n = 0;
    for (char ch : text)
        if (ch == '\n') ++n;
    return n;
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "hypstab-io-test";
    std::filesystem::create_directories(dir);
    return dir;
}

CaseResult small_case() {
    ExperimentConfig cfg;
    cfg.model = "wave";
    cfg.cfl = 0.5;
    cfg.final_time = 1.0;
    cfg.initial = InitialData::Constant;
    cfg.snapshot_every = 10;
    return run_case(cfg, 20, 0.5);
}

}  // namespace

TEST_CASE("format_number is scientific with 12 digits after the point") {
    CHECK(format_number(0.5) == "5.000000000000e-01");
    CHECK(format_number(-1.25e-7) == "-1.250000000000e-07");
}

TEST_CASE("series csv layout and determinism") {
    const auto dir = temp_dir();
    const CaseResult c = small_case();
    const std::string path = (dir / "series.csv").string();
    write_series_csv(path, c);
    const std::string text = slurp(path);
    CHECK(text.rfind("t,L,L_up_alpha_mu,L_up_eta_T,L_up_eta_N\n", 0) == 0);
    CHECK(line_count(text) == c.series.size() + 1);

    write_series_csv(path, c);
    CHECK(slurp(path) == text);
}

TEST_CASE("table csv layout") {
    const auto dir = temp_dir();
    ExperimentConfig cfg;
    cfg.model = "wave";
    cfg.cell_counts = {32, 64, 128};
    cfg.cfl = 0.95;
    cfg.final_time = 2.0;
    cfg.initial = InitialData::Constant;
    const ConvergenceReport rep = convergence_study(cfg);
    const std::string path = (dir / "table.csv").string();
    write_table_csv(path, rep, true);
    const std::string text = slurp(path);
    CHECK(text.rfind("J,sup_diff,l2_diff,alpha_mu,eta_T,eta_N,rate\n", 0) == 0);
    CHECK(line_count(text) == 4);
    CHECK(text.find("undefined") != std::string::npos);  // rows without successors
    write_report_txt((dir / "report.txt").string(), rep);
    CHECK(slurp((dir / "report.txt").string()).find("0.5000") != std::string::npos);
}

TEST_CASE("sweep csv is long format") {
    const auto dir = temp_dir();
    ExperimentConfig cfg;
    cfg.model = "wave";
    cfg.cell_counts = {16};
    cfg.mu_values = {0.25, 0.5};
    cfg.final_time = 0.5;
    cfg.initial = InitialData::Constant;
    const SweepResult sweep = mu_sweep(cfg);
    const std::string path = (dir / "sweep.csv").string();
    write_sweep_csv(path, sweep);
    const std::string text = slurp(path);
    CHECK(text.rfind("mu,t,L\n", 0) == 0);
    CHECK(line_count(text) ==
          sweep.cases[0].series.size() + sweep.cases[1].series.size() + 1);
}

TEST_CASE("condition report csv") {
    const auto dir = temp_dir();
    const Model m = make_model("wave");
    const Discretization d = build_discretization(m.spec, 100, 0.5, 0.5);
    const ConditionReport rep = verify_k_conditions(
        FeedbackMatrix::damping(0.5), m.spec, d, diffusion_coefficients(m.spec, d));
    const std::string path = (dir / "k.csv").string();
    write_conditions_csv(path, rep);
    const std::string text = slurp(path);
    CHECK(line_count(text) == 4);
    CHECK(text.find("boundary-values") != std::string::npos);
    CHECK(text.find("true") != std::string::npos);
}

TEST_CASE("snapshots in both layouts") {
    const auto dir = temp_dir();
    const CaseResult c = small_case();
    REQUIRE_FALSE(c.snapshots.empty());
    const auto long_files = write_snapshots(dir.string(), "case", c, "long");
    REQUIRE(long_files.size() == 1);
    const std::string text = slurp(long_files[0]);
    CHECK(text.rfind("t,x,u_plus,u_minus\n", 0) == 0);
    CHECK(line_count(text) == c.snapshots.size() * 20 + 1);

    const auto split_files = write_snapshots(dir.string(), "case", c, "files");
    CHECK(split_files.size() == c.snapshots.size());
}

TEST_CASE("manifest echo parses back to the same config") {
    const auto dir = temp_dir();
    RunManifest m;
    m.config = parse_config("model = euler\nJ = 64\ncfl = 0.8\nmu = 1.25\nq_star = 0.5");
    m.files = {"a.csv", "b.csv"};
    m.wall_seconds = 1.5;
    m.rate_lines = {"J=64 mu=1.25 ..."};
    const std::string path = (dir / "manifest.txt").string();
    write_manifest(path, m);
    const ExperimentConfig back = parse_config(slurp(path));
    CHECK(echo_config(back) == echo_config(m.config));
}

TEST_CASE("cli binary end to end") {
    const char* cli = std::getenv("HYPSTAB_CLI");
    if (cli == nullptr) return;  // only run when ctest provides the binary path
    const std::string base = std::string(cli);
    const auto dir = temp_dir();
    const std::string out = (dir / "cli").string();

    SUBCASE("rates prints the four-decimal values") {
        const std::string cmd =
            base + " rates --model wave --J 100 --cfl 0.5 --mu 0.5 > " + out + ".txt";
        REQUIRE(std::system(cmd.c_str()) == 0);
        const std::string text = slurp(out + ".txt");
        CHECK(text.find("alpha_mu=0.5000") != std::string::npos);
        CHECK(text.find("eta_T=0.4994") != std::string::npos);
        CHECK(text.find("eta_N=0.4969") != std::string::npos);
    }
    SUBCASE("config errors exit with code 1") {
        const std::string cmd = base + " rates --model wave --cfl 1.5 2> /dev/null";
        const int status = std::system(cmd.c_str());
        CHECK(WEXITSTATUS(status) == 1);
    }
    SUBCASE("simulate writes its series and manifest") {
        const std::string sim = (dir / "sim").string();
        const std::string cmd = base + " simulate --model wave --J 50 --cfl 0.5 --mu 0.5" +
                                " --T 1 --initial constant --out " + sim + " > /dev/null";
        REQUIRE(std::system(cmd.c_str()) == 0);
        CHECK(std::filesystem::exists(sim + "/series_wave_J50_cfl0p5_mu0p5_constant_viscous.csv"));
        const ExperimentConfig echoed = parse_config(slurp(sim + "/manifest.txt"));
        CHECK(echoed.cell_counts == std::vector<int>{50});
    }
    SUBCASE("unknown flags exit with code 1") {
        const std::string cmd = base + " simulate --frobnicate 2> /dev/null";
        const int status = std::system(cmd.c_str());
        CHECK(WEXITSTATUS(status) == 1);
    }
}
