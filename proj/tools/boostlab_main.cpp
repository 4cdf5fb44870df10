// boostlab: batch experiment runner for coordinate-descent boosting.
//
//   boostlab run --dataset three-example --rounds 100 --trace out.csv
//   boostlab decompose --dataset triangular:5 --out report.json
//   boostlab verify trace-identities
//   boostlab emit --dataset mint-mumax:5 --out data.txt
//
// Exit codes: 0 ok, 1 error, 2 perfect separation, 64 usage.

#include <CLI11.hpp>

#include "boostlab/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"coordinate-descent boosting lab"};
    app.require_subcommand(1);

    boostlab::RunConfig cfg;
    std::string variant = "plain";
    auto* run_cmd = app.add_subcommand("run", "run a boosting experiment");
    run_cmd->add_option("--dataset", cfg.dataset, "named generator or file:PATH")->required();
    run_cmd->add_option("--variant", variant, "plain or scaled")
        ->check(CLI::IsMember({"plain", "scaled"}));
    run_cmd->add_option("--rounds", cfg.rounds, "round budget T")->required();
    double target_loss = 0, target_eps = 0;
    auto* tl = run_cmd->add_option("--target-loss", target_loss, "stop once loss <= value");
    auto* te =
        run_cmd->add_option("--target-eps", target_eps, "stop at L(reference) + eps");
    run_cmd->add_option("--reference", cfg.reference,
                        "reference combination: 'v1,v2,...' or auto:near-optimal:EPS");
    run_cmd->add_flag("--s-oracle", cfg.s_oracle,
                      "attach the grid distance oracle for the S column (N <= 3)");
    run_cmd->add_option("--trace", cfg.trace_path, "trace CSV output path");
    run_cmd->add_option("--report", cfg.report_path, "summary JSON output path");
    run_cmd->add_option("--plot", cfg.plot_path, "plot-data CSV output path");
    run_cmd->add_option("--seed", cfg.seed, "seed for random:* datasets");

    std::string ds, out_path;
    std::uint64_t seed = 1;
    auto* dec_cmd = app.add_subcommand("decompose", "write the decomposition report");
    dec_cmd->add_option("--dataset", ds, "named generator or file:PATH")->required();
    dec_cmd->add_option("--out", out_path, "report path (stdout when omitted)");
    dec_cmd->add_option("--seed", seed, "seed for random:* datasets");

    std::string suite;
    auto* ver_cmd = app.add_subcommand("verify", "run an acceptance battery");
    ver_cmd->add_option("suite", suite, "trace-identities | rate-bounds | lower-bounds | "
                                        "decomposition-consistency");

    std::string emit_ds, emit_out;
    std::uint64_t emit_seed = 1;
    auto* emit_cmd = app.add_subcommand("emit", "write a dataset file plus its facts sidecar");
    emit_cmd->add_option("--dataset", emit_ds, "named generator")->required();
    emit_cmd->add_option("--out", emit_out, "dataset text path")->required();
    emit_cmd->add_option("--seed", emit_seed, "seed for random:* datasets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return boostlab::kExitUsage;
    }

    if (run_cmd->parsed()) {
        if (*tl) cfg.target_loss = target_loss;
        if (*te) cfg.target_eps = target_eps;
        cfg.variant = variant == "scaled" ? boostlab::Variant::Scaled : boostlab::Variant::Plain;
        return boostlab::cmd_run(cfg);
    }
    if (dec_cmd->parsed()) return boostlab::cmd_decompose(ds, out_path, seed);
    if (ver_cmd->parsed()) {
        if (suite.empty()) {
            std::cerr << "usage: verify needs a suite name\n";
            return boostlab::kExitUsage;
        }
        return boostlab::cmd_verify(suite);
    }
    if (emit_cmd->parsed()) return boostlab::cmd_emit_dataset(emit_ds, emit_out, emit_seed);
    return boostlab::kExitUsage;
}
