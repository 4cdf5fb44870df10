#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "boostlab/datasets.hpp"
#include "boostlab/matrix.hpp"
#include "boostlab/numerics.hpp"
#include "boostlab/oracle.hpp"

namespace boostlab {

enum class Variant { Plain, Scaled };
enum class TerminalStatus { Completed, PerfectSeparation, TargetReached };

inline const char* to_string(TerminalStatus s) {
    switch (s) {
        case TerminalStatus::Completed: return "Completed";
        case TerminalStatus::PerfectSeparation: return "PerfectSeparation";
        case TerminalStatus::TargetReached: return "TargetReached";
    }
    return "?";
}

/// Everything the rate analysis references about one round, recorded at the
/// end of the round (i.e. at lambda^t).
struct RoundRecord {
    int t = 0;
    int j = -1;
    double r = 0;       // signed correlation of the chosen column
    double delta = 0;   // |r|
    double alpha = 0;   // step along e_j
    double loss = 1;    // normalized loss at lambda^t
    double l1_norm = 0;
    double scale = 1;   // AdaBoost.S shrink factor s_t; 1 for plain runs
    std::optional<double> loss_Z, loss_F;  // unnormalized set losses, when attached
};

struct BoostTrace {
    double initial_loss = 1.0;
    std::optional<double> initial_loss_Z, initial_loss_F;
    std::vector<RoundRecord> records;
    TerminalStatus status = TerminalStatus::Completed;

    /// lambda^t for t = 0..T, replayed from the per-round updates.
    std::vector<Combination> lambda_path(int cols) const {
        std::vector<Combination> path;
        path.emplace_back(cols, 0.0);
        Combination cur(cols, 0.0);
        for (const auto& rec : records) {
            cur[rec.j] += rec.alpha;
            for (double& x : cur) x *= rec.scale;
            path.push_back(cur);
        }
        return path;
    }
};

constexpr double kSeparationTol = 1e-12;

/// alpha = (1/2) ln((1+r)/(1-r)); the exact line-search step for +-1 columns.
inline double step_size(double r) {
    if (std::fabs(r) >= 1.0 - kSeparationTol)
        throw std::domain_error("step_size: |r| too close to 1 (perfect separation)");
    return 0.5 * std::log((1.0 + r) / (1.0 - r));
}

struct ScaleResult {
    double s = 1.0;
    Combination lambda;
};

/// s* = argmin_{s in [0,1]} L(s * lambda). L along the ray is convex, so the
/// minimizer is at an endpoint whenever the endpoint derivative says so, and
/// is otherwise pinned by golden-section to interval width 1e-12. A direction
/// with all-zero margins returns s = 1 by convention.
inline ScaleResult scale_back(const FeatureMatrix& m, const Combination& lt) {
    const auto g = margins(m, lt);
    auto dG = [&](double s) {
        double d = 0;
        for (double gi : g) d += -gi * std::exp(-s * gi);
        return d / m.rows();
    };
    double s;
    if (dG(1.0) <= 0.0) {
        s = 1.0;
    } else if (dG(0.0) >= 0.0) {
        s = 0.0;
    } else {
        auto G = [&](double x) {
            double sum = 0;
            for (double gi : g) sum += std::exp(-x * gi);
            return sum / m.rows();
        };
        s = golden_section_min(G, 0.0, 1.0, 1e-12);
    }
    ScaleResult out;
    out.s = s;
    out.lambda = lt;
    for (double& x : out.lambda) x *= s;
    return out;
}

struct RoundOutcome {
    bool separated = false;  // |r| hit 1; no step was taken
    Combination lambda;
    RoundRecord record;
};

/// One coordinate-descent round: reweight, pick the best column, step, and
/// (for the Scaled variant) shrink the whole combination.
inline RoundOutcome boost_round(const FeatureMatrix& m, const Combination& prev, Variant variant,
                                int t = 1) {
    const auto d = distribution(m, prev);
    const auto be = best_edge(d, m);
    RoundOutcome out;
    out.record.t = t;
    out.record.j = be.j;
    out.record.r = be.r;
    out.record.delta = std::fabs(be.r);
    if (out.record.delta >= 1.0 - kSeparationTol) {
        out.separated = true;
        out.lambda = prev;
        return out;
    }
    out.record.alpha = step_size(be.r);
    out.lambda = prev;
    out.lambda[be.j] += out.record.alpha;
    if (variant == Variant::Scaled) {
        auto sc = scale_back(m, out.lambda);
        out.record.scale = sc.s;
        out.lambda = std::move(sc.lambda);
    }
    out.record.loss = exp_loss(m, out.lambda);
    out.record.l1_norm = l1_norm(out.lambda);
    return out;
}

/// Full run: iterates boost_round until the round budget, a perfect
/// separation, or the stop loss. Set losses on Z and F are recorded per
/// round when the two sets are supplied.
inline BoostTrace run(const FeatureMatrix& m, int max_rounds, Variant variant = Variant::Plain,
                      std::optional<double> stop_loss = std::nullopt,
                      const ExampleSet* zero_set = nullptr,
                      const ExampleSet* finite_set = nullptr) {
    if (max_rounds < 0) throw std::invalid_argument("run: negative round budget");
    BoostTrace trace;
    Combination lambda(m.cols(), 0.0);
    if (zero_set && finite_set) {
        trace.initial_loss_Z = set_loss(m, lambda, *zero_set);
        trace.initial_loss_F = set_loss(m, lambda, *finite_set);
    }
    if (stop_loss && trace.initial_loss <= *stop_loss) {
        trace.status = TerminalStatus::TargetReached;
        return trace;
    }
    for (int t = 1; t <= max_rounds; ++t) {
        auto out = boost_round(m, lambda, variant, t);
        if (out.separated) {
            trace.status = TerminalStatus::PerfectSeparation;
            return trace;
        }
        lambda = std::move(out.lambda);
        if (zero_set && finite_set) {
            out.record.loss_Z = set_loss(m, lambda, *zero_set);
            out.record.loss_F = set_loss(m, lambda, *finite_set);
        }
        trace.records.push_back(std::move(out.record));
        if (stop_loss && trace.records.back().loss <= *stop_loss) {
            trace.status = TerminalStatus::TargetReached;
            return trace;
        }
    }
    trace.status = TerminalStatus::Completed;
    return trace;
}

/// Suboptimality and distance sequences against a reference combination.
/// R[t] = ln L(lambda^t) - ln L(lambda*); S[t] is the grid-oracle l1 distance
/// to the target sublevel set, present only when a grid is supplied and the
/// oracle accepts the dimension (N <= 3).
struct ReferenceTrace {
    std::vector<double> R;      // indexed 0..T
    std::vector<double> dR;     // dR[t-1] = R_{t-1} - R_t
    bool has_S = false;
    std::vector<double> S;      // indexed 0..T when present
    std::vector<double> S_err;  // grid error bound per entry
    std::vector<double> dS;
    double B = 0;               // ||lambda*||_1
};

inline ReferenceTrace reference_metrics(const FeatureMatrix& m, const BoostTrace& trace,
                                        const Combination& lambda_star,
                                        const GridSpec* s_grid = nullptr) {
    detail::require_dims(m, lambda_star);
    ReferenceTrace ref;
    ref.B = l1_norm(lambda_star);
    const double log_target = log_exp_loss(m, lambda_star);
    const auto path = trace.lambda_path(m.cols());
    ref.R.reserve(path.size());
    for (const auto& lam : path) ref.R.push_back(log_exp_loss(m, lam) - log_target);
    for (std::size_t t = 1; t < ref.R.size(); ++t) ref.dR.push_back(ref.R[t - 1] - ref.R[t]);
    if (s_grid && m.cols() <= 3) {
        const double target = std::exp(log_target);
        ref.has_S = true;
        for (const auto& lam : path) {
            auto d = brute_distance(m, lam, target, *s_grid);
            if (!d.found) {
                // sublevel set outside the grid range; drop S rather than guess
                ref.has_S = false;
                ref.S.clear();
                ref.S_err.clear();
                break;
            }
            ref.S.push_back(d.distance);
            ref.S_err.push_back(d.error_bound);
        }
        if (ref.has_S)
            for (std::size_t t = 1; t < ref.S.size(); ++t) ref.dS.push_back(ref.S[t] - ref.S[t - 1]);
    }
    return ref;
}

/// Step-length evidence for the coordinate-descent lower bounds. When the
/// matrix has a complementary +-1 row pair, that pair's margins stay in
/// [-ln m, ln m] and every |alpha_t| <= 2 ln m; when additionally the whole
/// matrix is +-1-valued, |alpha_t| <= 1 + ln m.
struct StepBoundReport {
    std::optional<std::pair<int, int>> complementary_rows;
    double max_abs_alpha = 0;
    bool checked_pair_bound = false;    // |alpha_t| <= 2 ln m
    double pair_bound = 0;
    bool pair_bound_ok = true;
    bool margins_bounded = true;        // pair margins within [-ln m, ln m]
    std::vector<std::pair<double, double>> pair_margins;  // per round, at lambda^t
    bool checked_plusminus_bound = false;  // |alpha_t| <= 1 + ln m
    double plusminus_bound = 0;
    bool plusminus_bound_ok = true;
};

inline StepBoundReport check_step_bounds(const FeatureMatrix& m, const BoostTrace& trace) {
    StepBoundReport rep;
    for (const auto& rec : trace.records)
        rep.max_abs_alpha = std::max(rep.max_abs_alpha, std::fabs(rec.alpha));
    rep.complementary_rows = has_complementary_rows(m);
    if (!rep.complementary_rows) return rep;
    const double lnm = std::log(static_cast<double>(m.rows()));
    rep.checked_pair_bound = true;
    rep.pair_bound = 2.0 * lnm;
    rep.pair_bound_ok = rep.max_abs_alpha <= rep.pair_bound + 1e-12;
    const auto path = trace.lambda_path(m.cols());
    const auto [ri, rk] = *rep.complementary_rows;
    for (const auto& lam : path) {
        double gi = 0, gk = 0;
        for (int j = 0; j < m.cols(); ++j) {
            gi += m(ri, j) * lam[j];
            gk += m(rk, j) * lam[j];
        }
        rep.pair_margins.emplace_back(gi, gk);
        if (std::fabs(gi) > lnm + 1e-9 || std::fabs(gk) > lnm + 1e-9) rep.margins_bounded = false;
    }
    bool all_pm1 = true;
    for (double v : m.data())
        if (v != 1.0 && v != -1.0) { all_pm1 = false; break; }
    if (all_pm1) {
        // a complementary pair pins both of its examples to the finite-margin
        // set, so the all-+-1 step bound applies
        rep.checked_plusminus_bound = true;
        rep.plusminus_bound = 1.0 + lnm;
        rep.plusminus_bound_ok = rep.max_abs_alpha <= rep.plusminus_bound + 1e-12;
    }
    return rep;
}

/// CSV emission. Header is fixed; floats carry 17 significant digits; fields
/// that were not computed stay empty.
inline std::string trace_to_csv(const BoostTrace& trace, const ReferenceTrace* ref = nullptr) {
    std::string out = "t,j,r,delta,alpha,loss,l1_norm,scale,loss_Z,loss_F,R,S\n";
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
        const auto& rec = trace.records[k];
        out += std::to_string(rec.t);
        out += ',' + std::to_string(rec.j);
        out += ',' + format_g17(rec.r);
        out += ',' + format_g17(rec.delta);
        out += ',' + format_g17(rec.alpha);
        out += ',' + format_g17(rec.loss);
        out += ',' + format_g17(rec.l1_norm);
        out += ',' + format_g17(rec.scale);
        out += ',';
        if (rec.loss_Z) out += format_g17(*rec.loss_Z);
        out += ',';
        if (rec.loss_F) out += format_g17(*rec.loss_F);
        out += ',';
        if (ref && k + 1 < ref->R.size()) out += format_g17(ref->R[k + 1]);
        out += ',';
        if (ref && ref->has_S && k + 1 < ref->S.size()) out += format_g17(ref->S[k + 1]);
        out += '\n';
    }
    return out;
}

}  // namespace boostlab
