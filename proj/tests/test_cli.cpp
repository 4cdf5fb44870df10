#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boostlab/cli.hpp"

using namespace boostlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("boostlab_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int quiet_run(const RunConfig& cfg) {
    std::ostringstream out, err;
    return cmd_run(cfg, out, err);
}

}  // namespace

TEST_CASE("cmd_run writes the analytic trace") {
    TempDir tmp;
    RunConfig cfg;
    cfg.dataset = "three-example";
    cfg.rounds = 100;
    cfg.trace_path = tmp.file("trace.csv");
    cfg.report_path = tmp.file("report.json");
    REQUIRE(quiet_run(cfg) == kExitOk);

    std::ifstream in(cfg.trace_path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,j,r,delta,alpha,loss,l1_norm,scale,loss_Z,loss_F,R,S");
    int rows = 0;
    std::string line, last;
    while (std::getline(in, line)) {
        ++rows;
        last = line;
    }
    CHECK(rows == 100);

    const auto report = nlohmann::json::parse(slurp(cfg.report_path));
    CHECK(report["rounds_run"] == 100);
    CHECK(report["status"] == "Completed");
    CHECK(report["final_loss"].get<double>() ==
          Catch::Approx((2.0 / 3.0) * std::sqrt(1.01)).margin(1e-9));
}

TEST_CASE("cmd_run scaled variant keeps scales in [0,1]") {
    TempDir tmp;
    RunConfig cfg;
    cfg.dataset = "triangular:5";
    cfg.variant = Variant::Scaled;
    cfg.rounds = 50;
    cfg.trace_path = tmp.file("tri.csv");
    REQUIRE(quiet_run(cfg) == kExitOk);
    std::ifstream in(cfg.trace_path);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream f(line);
        double t, j, r, delta, alpha, loss, n1, scale;
        f >> t >> j >> r >> delta >> alpha >> loss >> n1 >> scale;
        CHECK(scale >= 0.0);
        CHECK(scale <= 1.0);
    }
}

TEST_CASE("cmd_run reports bad input with exit 1") {
    TempDir tmp;
    const auto bad = tmp.file("bad.txt");
    std::ofstream(bad) << "2 2\n1 oops\n";
    RunConfig cfg;
    cfg.dataset = "file:" + bad;
    cfg.rounds = 5;
    std::ostringstream out, err;
    CHECK(cmd_run(cfg, out, err) == kExitError);
    CHECK(err.str().find("error") != std::string::npos);

    RunConfig unknown;
    unknown.dataset = "no-such-dataset";
    unknown.rounds = 1;
    CHECK(quiet_run(unknown) == kExitError);
}

TEST_CASE("cmd_run exits 2 on perfect separation") {
    TempDir tmp;
    const auto sep = tmp.file("sep.txt");
    std::ofstream(sep) << "2 1\n1\n1\n";
    RunConfig cfg;
    cfg.dataset = "file:" + sep;
    cfg.rounds = 5;
    CHECK(quiet_run(cfg) == kExitSeparation);
}

TEST_CASE("cmd_run with reference and distance oracle") {
    TempDir tmp;
    RunConfig cfg;
    cfg.dataset = "three-example";
    cfg.rounds = 10;
    cfg.reference = "1,1";
    cfg.s_oracle = true;
    cfg.trace_path = tmp.file("ref.csv");
    REQUIRE(quiet_run(cfg) == kExitOk);
    std::ifstream in(cfg.trace_path);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line.back() != ',');  // S column populated

    RunConfig eps;
    eps.dataset = "three-example";
    eps.rounds = 1000000;
    eps.reference = "auto:near-optimal:0.1";
    eps.target_eps = 0.1;
    eps.report_path = tmp.file("eps.json");
    REQUIRE(quiet_run(eps) == kExitOk);
    const auto rep = nlohmann::json::parse(slurp(eps.report_path));
    CHECK(rep["status"] == "TargetReached");
}

TEST_CASE("cmd_run emits plot data with an envelope when decomposed") {
    TempDir tmp;
    RunConfig cfg;
    cfg.dataset = "three-example";
    cfg.rounds = 20;
    cfg.reference = "auto:near-optimal:0.1";
    cfg.plot_path = tmp.file("plot.csv");
    REQUIRE(quiet_run(cfg) == kExitOk);
    std::ifstream in(cfg.plot_path);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "t,loss,delta,envelope");
    std::getline(in, line);
    CHECK(line.back() != ',');  // envelope present
}

TEST_CASE("cmd_decompose reports") {
    TempDir tmp;
    const auto out3 = tmp.file("three.json");
    std::ostringstream out, err;
    REQUIRE(cmd_decompose("three-example", out3, 1, out, err) == kExitOk);
    const auto j = nlohmann::json::parse(slurp(out3));
    CHECK(j["Z"] == nlohmann::json::array({"c"}));
    CHECK(j["gamma"].get<double>() == Catch::Approx(1.0).margin(1e-9));
    CHECK(j["lambda_min"].get<double>() == Catch::Approx(2.0).margin(1e-9));
    CHECK(j["K_F"].get<double>() == Catch::Approx(2.0).margin(1e-9));

    const auto outm = tmp.file("mumax.json");
    REQUIRE(cmd_decompose("mint-mumax:5", outm, 1, out, err) == kExitOk);
    const auto jm = nlohmann::json::parse(slurp(outm));
    CHECK(jm["Z"].empty());
    CHECK(jm["regime"] == "finite-optimum");

    const auto outt = tmp.file("tri.json");
    REQUIRE(cmd_decompose("triangular:5", outt, 1, out, err) == kExitOk);
    const auto jt = nlohmann::json::parse(slurp(outt));
    CHECK(jt["Z"] == nlohmann::json::array({2, 3, 4}));

    // refusals: non-integral matrices and m > 10
    CHECK(cmd_decompose("nonintegral:0.1", tmp.file("x.json"), 1, out, err) == kExitError);
    CHECK(cmd_decompose("triangular:12", tmp.file("y.json"), 1, out, err) == kExitError);
}

TEST_CASE("cmd_verify exit codes") {
    std::ostringstream out, err;
    CHECK(cmd_verify("no-such-suite", out, err) == kExitUsage);
    CHECK(err.str().find("known suites") != std::string::npos);

    std::ostringstream ok_out, ok_err;
    CHECK(cmd_verify("trace-identities", ok_out, ok_err) == kExitOk);
    CHECK(ok_out.str().find("PASS  analytic-trace-reproduction") != std::string::npos);
    CHECK(ok_out.str().find("PASS  drop-identity") != std::string::npos);
}

TEST_CASE("reruns are byte-identical") {
    TempDir tmp;
    RunConfig a;
    a.dataset = "random:6x4:ternary";
    a.seed = 11;
    a.rounds = 40;
    a.variant = Variant::Scaled;
    a.trace_path = tmp.file("a.csv");
    RunConfig b = a;
    b.trace_path = tmp.file("b.csv");
    REQUIRE(quiet_run(a) == kExitOk);
    REQUIRE(quiet_run(b) == kExitOk);
    CHECK(slurp(a.trace_path) == slurp(b.trace_path));

    const auto d1 = tmp.file("d1.json"), d2 = tmp.file("d2.json");
    std::ostringstream out, err;
    REQUIRE(cmd_decompose("random:6x4:ternary", d1, 11, out, err) == kExitOk);
    REQUIRE(cmd_decompose("random:6x4:ternary", d2, 11, out, err) == kExitOk);
    CHECK(slurp(d1) == slurp(d2));
}

TEST_CASE("BOOSTLAB_SEED overrides the configured seed") {
    TempDir tmp;
    RunConfig cfg;
    cfg.dataset = "random:5x3:ternary";
    cfg.seed = 3;
    cfg.rounds = 10;
    cfg.report_path = tmp.file("seeded.json");
    REQUIRE(quiet_run(cfg) == kExitOk);
    const auto base = nlohmann::json::parse(slurp(cfg.report_path));
    CHECK(base["seed"] == 3);

    setenv("BOOSTLAB_SEED", "17", 1);
    RunConfig over = cfg;
    over.report_path = tmp.file("override.json");
    const int rc = quiet_run(over);
    unsetenv("BOOSTLAB_SEED");
    REQUIRE(rc == kExitOk);
    const auto j = nlohmann::json::parse(slurp(over.report_path));
    CHECK(j["seed"] == 17);
    CHECK(j["dataset"] != base["dataset"]);
}

TEST_CASE("cmd_emit_dataset writes the text format plus sidecar") {
    TempDir tmp;
    const auto path = tmp.file("three.txt");
    std::ostringstream out, err;
    REQUIRE(cmd_emit_dataset("three-example", path, 1, out, err) == kExitOk);
    std::ifstream in(path);
    const auto m = parse_dataset(in);
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 2);
    const auto side = nlohmann::json::parse(slurp(path + ".expected.json"));
    CHECK(side["optimal_loss"].get<double>() == Catch::Approx(2.0 / 3.0));
    CHECK(side["zero_loss_set"] == nlohmann::json::array({2}));
}
