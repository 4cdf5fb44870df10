#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boostlab/booster.hpp"
#include "boostlab/datasets.hpp"
#include "boostlab/decomposition.hpp"
#include "boostlab/verify.hpp"

namespace boostlab {

// exit-code vocabulary: 0 ok, 1 error, 2 perfect separation, 64 usage
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitSeparation = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
    std::string dataset;                  // named generator (with :params) or "file:PATH"
    Variant variant = Variant::Plain;
    int rounds = 0;
    std::optional<double> target_loss;    // absolute stop loss
    std::optional<double> target_eps;     // stop at L(reference) + eps; needs a reference
    std::string reference;                // "v1,v2,..." or "auto:near-optimal:EPS"
    bool s_oracle = false;                // attach the grid distance oracle (N <= 3)
    std::string trace_path, report_path, plot_path;
    std::uint64_t seed = 1;
};

namespace cli_detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::uint64_t effective_seed(std::uint64_t config_seed) {
    if (const char* env = std::getenv("BOOSTLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw std::invalid_argument("BOOSTLAB_SEED is not a valid integer");
        }
    }
    return config_seed;
}

inline NamedInstance load_instance(const std::string& spec, std::uint64_t seed) {
    const auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n)
            throw std::invalid_argument("dataset spec '" + spec + "': wrong parameter count");
    };
    if (kind == "three-example") {
        want(1);
        return gen_three_example();
    }
    if (kind == "triangular") {
        want(2);
        return gen_triangular(std::stoi(parts[1]));
    }
    if (kind == "nonintegral") {
        want(2);
        return gen_nonintegral(std::stod(parts[1]));
    }
    if (kind == "mint-triangular") {
        want(2);
        return gen_mint_triangular(std::stoi(parts[1]));
    }
    if (kind == "mint-mumax") {
        want(2);
        return gen_mint_mumax(std::stoi(parts[1]));
    }
    if (kind == "random") {
        // random:MxN:ternary|continuous
        want(3);
        const auto dims = split(parts[1], 'x');
        if (dims.size() != 2) throw std::invalid_argument("random dataset needs MxN dimensions");
        const Alphabet alpha = parts[2] == "ternary"
                                   ? Alphabet::Ternary
                                   : (parts[2] == "continuous"
                                          ? Alphabet::Continuous
                                          : throw std::invalid_argument(
                                                "random dataset alphabet must be ternary or continuous"));
        return gen_random(std::stoi(dims[0]), std::stoi(dims[1]), alpha, seed);
    }
    if (kind == "file") {
        if (parts.size() < 2) throw std::invalid_argument("file dataset needs a path");
        const std::string path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open dataset file: " + path);
        NamedInstance inst{"file:" + path, parse_dataset(in), {}, {}};
        return inst;
    }
    throw std::invalid_argument("unknown dataset spec: " + spec);
}

inline Combination parse_reference(const std::string& spec, const NamedInstance& inst,
                                   const Decomposition** dec_out,
                                   std::optional<Decomposition>& dec_store) {
    if (spec.rfind("auto:near-optimal:", 0) == 0) {
        const double eps = std::stod(spec.substr(std::string("auto:near-optimal:").size()));
        dec_store = decompose(inst.matrix);
        *dec_out = &*dec_store;
        return near_optimal_solution(inst.matrix, *dec_store, eps);
    }
    Combination ref;
    for (const auto& piece : split(spec, ',')) ref.push_back(std::stod(piece));
    return ref;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

}  // namespace cli_detail

/// Executes a boosting run per the config; writes trace CSV, summary JSON and
/// plot data as requested.
inline int cmd_run(const RunConfig& cfg, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    try {
        const std::uint64_t seed = cli_detail::effective_seed(cfg.seed);
        const auto inst = cli_detail::load_instance(cfg.dataset, seed);
        if (cfg.rounds < 0) throw std::invalid_argument("rounds must be >= 0");

        std::optional<Decomposition> dec_store;
        const Decomposition* dec = nullptr;
        Combination reference;
        bool has_reference = false;
        if (!cfg.reference.empty()) {
            reference = cli_detail::parse_reference(cfg.reference, inst, &dec, dec_store);
            has_reference = true;
            if (static_cast<int>(reference.size()) != inst.matrix.cols())
                throw std::invalid_argument("reference length does not match column count");
        }
        std::optional<double> stop = cfg.target_loss;
        if (cfg.target_eps) {
            if (!has_reference)
                throw std::invalid_argument("--target-eps needs --reference");
            stop = exp_loss(inst.matrix, reference) + *cfg.target_eps;
        }

        const ExampleSet* zptr = nullptr;
        const ExampleSet* fptr = nullptr;
        if (dec) {
            zptr = &dec->Z;
            fptr = &dec->F;
        }
        const auto trace = run(inst.matrix, cfg.rounds, cfg.variant, stop, zptr, fptr);

        std::optional<ReferenceTrace> ref;
        if (has_reference) {
            std::optional<GridSpec> grid;
            if (cfg.s_oracle && inst.matrix.cols() <= 3) {
                // box sized from the trace extent plus the reference
                double hi = 2.0;
                for (const auto& lam : trace.lambda_path(inst.matrix.cols()))
                    hi = std::max(hi, linf_norm(lam));
                hi = std::max(hi, linf_norm(reference)) + 2.0;
                grid = GridSpec::cube(inst.matrix.cols(), -hi, hi, 41, 4);
            }
            ref = reference_metrics(inst.matrix, trace, reference, grid ? &*grid : nullptr);
        }

        if (!cfg.trace_path.empty())
            cli_detail::write_file(cfg.trace_path, trace_to_csv(trace, ref ? &*ref : nullptr));

        if (!cfg.plot_path.empty()) {
            std::optional<RateReport> rate;
            if (dec) rate = rate_constants(*dec, inst.matrix.rows(), inst.matrix.cols());
            std::string plot = "t,loss,delta,envelope\n";
            for (const auto& rec : trace.records) {
                plot += std::to_string(rec.t) + ',' + format_g17(rec.loss) + ',' +
                        format_g17(rec.delta) + ',';
                if (rate && rate->constants && rate->constants->C3 > 0 &&
                    std::isfinite(rate->constants->C3)) {
                    const double env =
                        (dec->K_F + 1.0 / (rate->constants->C3 * rec.t)) / inst.matrix.rows();
                    plot += format_g17(env);
                }
                plot += '\n';
            }
            cli_detail::write_file(cfg.plot_path, plot);
        }

        if (!cfg.report_path.empty()) {
            nlohmann::json j;
            j["dataset"] = inst.name;
            j["variant"] = cfg.variant == Variant::Plain ? "plain" : "scaled";
            j["seed"] = seed;
            j["rounds_requested"] = cfg.rounds;
            j["rounds_run"] = trace.records.size();
            j["status"] = to_string(trace.status);
            j["final_loss"] =
                trace.records.empty() ? trace.initial_loss : trace.records.back().loss;
            j["final_l1_norm"] = trace.records.empty() ? 0.0 : trace.records.back().l1_norm;
            int scale_backs = 0;
            for (const auto& rec : trace.records)
                if (rec.scale < 1.0) ++scale_backs;
            j["scale_back_rounds"] = scale_backs;
            if (stop) j["stop_loss"] = *stop;
            if (has_reference) {
                j["reference"] = reference;
                j["reference_loss"] = exp_loss(inst.matrix, reference);
                j["B"] = l1_norm(reference);
            }
            cli_detail::write_file(cfg.report_path, j.dump(2) + "\n");
        }

        out << inst.name << ": " << trace.records.size() << " rounds, status "
            << to_string(trace.status) << ", final loss "
            << format_g17(trace.records.empty() ? trace.initial_loss : trace.records.back().loss)
            << "\n";
        return trace.status == TerminalStatus::PerfectSeparation ? kExitSeparation : kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

/// Writes the decomposition JSON report. Only integral instances at
/// certificate scale (m <= 10) are accepted; the factorial bounds behind the
/// LP box sizes and floors are meaningless beyond that.
inline int cmd_decompose(const std::string& dataset, const std::string& out_path,
                         std::uint64_t config_seed = 1, std::ostream& out = std::cout,
                         std::ostream& err = std::cerr) {
    try {
        const std::uint64_t seed = cli_detail::effective_seed(config_seed);
        const auto inst = cli_detail::load_instance(dataset, seed);
        if (!inst.matrix.integral()) {
            err << "error: decomposition reports require an integral matrix\n";
            return kExitError;
        }
        if (inst.matrix.rows() > 10) {
            err << "error: refusing m > 10 (certificate bounds grow factorially)\n";
            return kExitError;
        }
        const auto dec = decompose(inst.matrix, 1000, seed);
        const auto rate = rate_constants(dec, inst.matrix.rows(), inst.matrix.cols());
        const auto j = decomposition_report(dec, rate,
                                            inst.row_labels.empty() ? nullptr : &inst.row_labels);
        const std::string text = j.dump(2) + "\n";
        if (out_path.empty())
            out << text;
        else
            cli_detail::write_file(out_path, text);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

/// Runs a named acceptance battery and prints one pass/fail line per check.
inline int cmd_verify(const std::string& suite, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr) {
    std::vector<CheckResult> results;
    try {
        results = run_suite(suite);
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        err << "known suites:";
        for (const auto& n : suite_names()) err << " " << n;
        err << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
        all = all && r.passed;
    }
    return all ? kExitOk : kExitError;
}

/// Emits a generated dataset in the text format, with its analytic facts as
/// a JSON sidecar next to it.
inline int cmd_emit_dataset(const std::string& dataset, const std::string& out_path,
                            std::uint64_t config_seed = 1, std::ostream& /*out*/ = std::cout,
                            std::ostream& err = std::cerr) {
    try {
        const std::uint64_t seed = cli_detail::effective_seed(config_seed);
        const auto inst = cli_detail::load_instance(dataset, seed);
        cli_detail::write_file(out_path, format_dataset(inst.matrix));
        nlohmann::json j;
        j["name"] = inst.name;
        j["m"] = inst.matrix.rows();
        j["N"] = inst.matrix.cols();
        j["integral"] = inst.matrix.integral();
        if (!inst.row_labels.empty()) j["row_labels"] = inst.row_labels;
        if (inst.expected.optimal_loss) j["optimal_loss"] = *inst.expected.optimal_loss;
        if (inst.expected.zero_loss_set) j["zero_loss_set"] = *inst.expected.zero_loss_set;
        if (inst.expected.complementary_rows)
            j["complementary_rows"] = {inst.expected.complementary_rows->first,
                                       inst.expected.complementary_rows->second};
        if (!inst.expected.notes.empty()) {
            nlohmann::json notes;
            for (const auto& [k, v] : inst.expected.notes) notes[k] = v;
            j["facts"] = notes;
        }
        cli_detail::write_file(out_path + ".expected.json", j.dump(2) + "\n");
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace boostlab
