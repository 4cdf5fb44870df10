#pragma once

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "boostlab/booster.hpp"
#include "boostlab/datasets.hpp"
#include "boostlab/decomposition.hpp"
#include "boostlab/lp.hpp"
#include "boostlab/matrix.hpp"
#include "boostlab/oracle.hpp"

namespace boostlab {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

namespace verify_detail {

class Checker {
public:
    explicit Checker(std::string name) : result_{std::move(name), true, ""} {}

    void require(bool ok, const std::string& what) {
        if (ok) return;
        result_.passed = false;
        if (!failures_.empty()) failures_ += "; ";
        failures_ += what;
    }

    void note(const std::string& s) {
        if (!notes_.empty()) notes_ += "; ";
        notes_ += s;
    }

    CheckResult finish() {
        result_.detail = result_.passed ? notes_ : failures_;
        return result_;
    }

private:
    CheckResult result_;
    std::string notes_, failures_;
};

inline std::string fmt(double x) {
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

// The reference instance family shared by the rate criteria: 20 seeded
// ternary matrices (m = 6, N = 4) with their decompositions.
struct DecomposedInstance {
    NamedInstance inst;
    Decomposition dec;
};

inline const std::vector<DecomposedInstance>& ternary_instances() {
    static const std::vector<DecomposedInstance> cache = [] {
        std::vector<DecomposedInstance> out;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto inst = gen_random(6, 4, Alphabet::Ternary, seed);
            auto dec = decompose(inst.matrix, 1000, 1000 + seed);
            out.push_back({std::move(inst), std::move(dec)});
        }
        return out;
    }();
    return cache;
}

inline const std::vector<DecomposedInstance>& decomposable_instances() {
    static const std::vector<DecomposedInstance> cache = [] {
        std::vector<DecomposedInstance> out;
        for (auto inst : {gen_three_example(), gen_triangular(5), gen_mint_mumax(5)}) {
            auto dec = decompose(inst.matrix);
            out.push_back({std::move(inst), std::move(dec)});
        }
        for (const auto& ti : ternary_instances()) out.push_back(ti);
        return out;
    }();
    return cache;
}

// lambda* with ||.||_1 <= 3, deterministic per seed.
inline Combination random_reference(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    Combination v(n);
    for (double& x : v) x = rng.next_symmetric();
    const double n1 = l1_norm(v);
    const double target = 3.0 * rng.next_unit();
    if (n1 > 1e-12)
        for (double& x : v) x *= target / n1;
    return v;
}

struct TargetRun {
    bool reached = false;
    long rounds = 0;
    BoostTrace trace;
};

inline TargetRun run_to_target(const FeatureMatrix& m, Variant variant, double stop, long cap) {
    TargetRun out;
    out.trace = run(m, static_cast<int>(cap), variant, stop);
    out.reached = out.trace.status == TerminalStatus::TargetReached;
    out.rounds = static_cast<long>(out.trace.records.size());
    return out;
}

inline FeatureMatrix random_pm1(int m, int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> e(static_cast<std::size_t>(m) * n);
    for (double& x : e) x = (rng.next_u64() % 2) ? 1.0 : -1.0;
    return FeatureMatrix(m, n, std::move(e));
}

}  // namespace verify_detail

/// Criterion 1: on the 3-example instance the run is analytic: the round-t
/// edge is 1/t (t >= 2), the loss after T rounds is (2/3) sqrt(1+1/T), and
/// the first five example-weight vectors match the known table up to the
/// a<->b relabeling.
inline CheckResult criterion_analytic_trace() {
    using namespace verify_detail;
    Checker c("analytic-trace-reproduction");
    Timer timer;
    const auto inst = gen_three_example();
    const auto trace = run(inst.matrix, 200);
    c.require(trace.records.size() == 200, "run did not complete 200 rounds");
    double worst_edge = 0, worst_loss = 0;
    for (const auto& rec : trace.records) {
        if (rec.t >= 2) worst_edge = std::max(worst_edge, std::fabs(rec.delta - 1.0 / rec.t));
        worst_loss = std::max(worst_loss, std::fabs(rec.loss - three_example_loss_after(rec.t)));
    }
    c.require(worst_edge <= 1e-9, "edge 1/t deviation " + fmt(worst_edge));
    c.require(worst_loss <= 1e-9, "loss formula deviation " + fmt(worst_loss));

    const double table[5][3] = {{1.0 / 3, 1.0 / 3, 1.0 / 3},
                                {1.0 / 2, 1.0 / 4, 1.0 / 4},
                                {1.0 / 3, 1.0 / 2, 1.0 / 6},
                                {1.0 / 2, 3.0 / 8, 1.0 / 8},
                                {2.0 / 5, 1.0 / 2, 1.0 / 10}};
    const auto path = trace.lambda_path(2);
    double dev_direct = 0, dev_swapped = 0;
    for (int t = 1; t <= 5; ++t) {
        const auto d = distribution(inst.matrix, path[t - 1]);
        dev_direct = std::max({dev_direct, std::fabs(d.probs[0] - table[t - 1][0]),
                               std::fabs(d.probs[1] - table[t - 1][1]),
                               std::fabs(d.probs[2] - table[t - 1][2])});
        dev_swapped = std::max({dev_swapped, std::fabs(d.probs[0] - table[t - 1][1]),
                                std::fabs(d.probs[1] - table[t - 1][0]),
                                std::fabs(d.probs[2] - table[t - 1][2])});
    }
    c.require(std::min(dev_direct, dev_swapped) <= 1e-9,
              "weight table deviation " + fmt(std::min(dev_direct, dev_swapped)));
    c.require(timer.seconds() < 1.0, "runtime " + fmt(timer.seconds()) + "s exceeds 1s");
    c.note("edge dev " + fmt(worst_edge) + ", loss dev " + fmt(worst_loss) + ", " +
           fmt(timer.seconds()) + "s");
    return c.finish();
}

/// Criterion 2: the per-round drop is an identity L_t = L_{t-1} sqrt(1-d^2)
/// on +-1-valued matrices and an inequality (<= + 1e-12) on continuous ones.
inline CheckResult criterion_drop_identity() {
    using namespace verify_detail;
    Checker c("drop-identity");
    double worst_eq = 0;
    auto check_eq = [&](const FeatureMatrix& m) {
        const auto trace = run(m, 50);
        double prev = trace.initial_loss;
        for (const auto& rec : trace.records) {
            worst_eq = std::max(worst_eq,
                                std::fabs(rec.loss - prev * std::sqrt(1 - rec.delta * rec.delta)));
            prev = rec.loss;
        }
    };
    check_eq(gen_three_example().matrix);
    for (std::uint64_t seed = 500; seed < 510; ++seed) check_eq(random_pm1(6, 4, seed));
    c.require(worst_eq <= 1e-12, "equality deviation " + fmt(worst_eq) + " on +-1 matrix");

    double worst_ineq = -1;
    auto check_ineq = [&](const FeatureMatrix& m) {
        const auto trace = run(m, 50);
        double prev = trace.initial_loss;
        for (const auto& rec : trace.records) {
            worst_ineq = std::max(worst_ineq,
                                  rec.loss - prev * std::sqrt(1 - rec.delta * rec.delta));
            prev = rec.loss;
        }
    };
    for (std::uint64_t seed = 30; seed < 40; ++seed)
        check_ineq(gen_random(6, 4, Alphabet::Continuous, seed).matrix);
    check_ineq(gen_nonintegral(0.1).matrix);
    check_ineq(gen_nonintegral(0.2).matrix);
    c.require(worst_ineq <= 1e-12, "drop bound violated by " + fmt(worst_ineq));
    c.note("eq dev " + fmt(worst_eq) + ", ineq slack " + fmt(worst_ineq));
    return c.finish();
}

/// Criterion 3: rounds to reach L(lambda*) + eps never exceed 13 B^6 / eps^5
/// across the ternary family, for near-optimal and random references.
inline CheckResult criterion_reference_rate() {
    using namespace verify_detail;
    Checker c("reference-rate-envelope");
    Timer timer;
    long worst_rounds = 0;
    std::uint64_t ref_seed = 777;
    for (const auto& ti : ternary_instances()) {
        for (double eps : {0.1, 0.05}) {
            std::vector<Combination> refs;
            refs.push_back(near_optimal_solution(ti.inst.matrix, ti.dec, eps));
            refs.push_back(random_reference(ti.inst.matrix.cols(), ref_seed++));
            for (const auto& ref : refs) {
                const double B = l1_norm(ref);
                const double bound = 13.0 * std::pow(B, 6) / std::pow(eps, 5);
                const double target = exp_loss(ti.inst.matrix, ref) + eps;
                const long cap = static_cast<long>(std::min(bound + 1, 1.0e6));
                auto r = run_to_target(ti.inst.matrix, Variant::Plain, target, cap);
                c.require(r.reached, ti.inst.name + ": target not reached within cap");
                c.require(r.rounds <= bound, ti.inst.name + ": rounds " + std::to_string(r.rounds) +
                                                 " exceed bound " + fmt(bound));
                worst_rounds = std::max(worst_rounds, r.rounds);
            }
        }
    }
    c.require(timer.seconds() < 60.0, "runtime " + fmt(timer.seconds()) + "s exceeds 1min");
    c.note("worst rounds " + std::to_string(worst_rounds) + ", " + fmt(timer.seconds()) + "s");
    return c.finish();
}

/// Criterion 4: empirical round counts respect the lower-bound floors on the
/// triangular, non-integral and 3-example instances, and triangular steps
/// stay within 2 ln m.
inline CheckResult criterion_lower_bound_floors() {
    using namespace verify_detail;
    Checker c("lower-bound-floors");
    for (int m : {4, 5, 6}) {
        const double eps = 0.05;
        const auto inst = gen_triangular(m);
        auto r = run_to_target(inst.matrix, Variant::Plain, 2.0 / m + eps, 2000000);
        c.require(r.reached, inst.name + ": never reached 2/m+eps");
        const double floor = triangular_round_floor(m, eps);
        c.require(r.rounds >= floor, inst.name + ": rounds " + std::to_string(r.rounds) +
                                         " below floor " + fmt(floor));
        const auto rep = check_step_bounds(inst.matrix, r.trace);
        c.require(rep.checked_pair_bound && rep.pair_bound_ok,
                  inst.name + ": step exceeded 2 ln m (max " + fmt(rep.max_abs_alpha) + ")");
        c.note(inst.name + " rounds " + std::to_string(r.rounds) + " >= " + fmt(floor));
    }
    for (double nu : {0.2, 0.1}) {
        const double eps = 0.05;
        const auto inst = gen_nonintegral(nu);
        auto r = run_to_target(inst.matrix, Variant::Plain, 0.5 + eps, 4000000);
        c.require(r.reached, inst.name + ": never reached 1/2+eps");
        const double floor = nonintegral_round_floor(nu, eps);
        c.require(r.rounds >= floor, inst.name + ": rounds " + std::to_string(r.rounds) +
                                         " below floor " + fmt(floor));
        c.note(inst.name + " rounds " + std::to_string(r.rounds) + " >= " + fmt(floor));
    }
    for (double eps : {0.1, 0.02}) {
        const auto inst = gen_three_example();
        auto r = run_to_target(inst.matrix, Variant::Plain, 2.0 / 3.0 + eps, 1000000);
        c.require(r.reached, "three-example: never reached 2/3+eps");
        const double floor = three_example_round_floor(eps);
        c.require(r.rounds >= floor, "three-example eps=" + fmt(eps) + ": rounds " +
                                         std::to_string(r.rounds) + " below floor " + fmt(floor));
    }
    return c.finish();
}

/// Criterion 5: the scaled variant reaches L(lambda*) + eps within 3 B^2/eps
/// rounds, with the per-round edge at least R_{t-1}/B.
inline CheckResult criterion_scaled_rate() {
    using namespace verify_detail;
    Checker c("scaled-variant-rate");
    long worst_rounds = 0;
    std::uint64_t ref_seed = 777;  // same reference family as the plain-variant criterion
    for (const auto& ti : ternary_instances()) {
        for (double eps : {0.1, 0.05}) {
            std::vector<Combination> refs;
            refs.push_back(near_optimal_solution(ti.inst.matrix, ti.dec, eps));
            refs.push_back(random_reference(ti.inst.matrix.cols(), ref_seed++));
            for (const auto& ref : refs) {
                const double B = l1_norm(ref);
                if (B <= 1e-12) continue;
                const double log_target = log_exp_loss(ti.inst.matrix, ref);
                const double target = std::exp(log_target) + eps;
                const double bound = 3.0 * B * B / eps;
                const long cap = static_cast<long>(std::min(bound + 1, 1.0e6));
                auto r = run_to_target(ti.inst.matrix, Variant::Scaled, target, cap);
                c.require(r.reached && r.rounds <= bound,
                          ti.inst.name + ": " + std::to_string(r.rounds) +
                              " rounds vs bound " + fmt(bound));
                double prev_loss = r.trace.initial_loss;
                for (const auto& rec : r.trace.records) {
                    const double R_prev = std::log(prev_loss) - log_target;
                    c.require(rec.delta >= R_prev / B - 1e-9,
                              ti.inst.name + ": edge " + fmt(rec.delta) + " below R/B " +
                                  fmt(R_prev / B) + " at t=" + std::to_string(rec.t));
                    prev_loss = rec.loss;
                }
                worst_rounds = std::max(worst_rounds, r.rounds);
            }
        }
    }
    c.note("worst rounds " + std::to_string(worst_rounds));
    return c.finish();
}

/// Criterion 6: with the grid oracle for S_t on the 3-example instance and
/// lambda* = (1,1): delta_t >= R_{t-1}/S_{t-1} up to grid error, and R^2 S is
/// non-increasing up to grid error, over 30 rounds.
inline CheckResult criterion_distance_bounds() {
    using namespace verify_detail;
    Checker c("distance-oracle-bounds");
    const auto inst = gen_three_example();
    const Combination lambda_star{1.0, 1.0};
    const auto trace = run(inst.matrix, 30);
    const auto grid = GridSpec::cube(2, -2.0, 8.0, 41, 4);
    const auto ref = reference_metrics(inst.matrix, trace, lambda_star, &grid);
    c.require(ref.has_S, "distance oracle produced no S sequence");
    if (!ref.has_S) return c.finish();
    c.require(std::fabs(ref.B - 2.0) <= 1e-12, "B should be 2");
    c.require(ref.S[0] <= ref.B + ref.S_err[0] + 1e-9, "S_0 exceeds B beyond grid error");
    int edge_checks = 0, mono_checks = 0;
    for (std::size_t t = 1; t < ref.R.size(); ++t) {
        const double d = trace.records[t - 1].delta;
        if (ref.R[t - 1] > 0 && ref.S[t - 1] > ref.S_err[t - 1]) {
            ++edge_checks;
            c.require(d >= ref.R[t - 1] / ref.S[t - 1] - 1e-9,
                      "edge below R/S at t=" + std::to_string(t));
        }
        if (ref.R[t] > 0 && ref.R[t - 1] > 0) {
            ++mono_checks;
            const double lhs = ref.R[t] * ref.R[t] * ref.S[t];
            const double rhs = ref.R[t - 1] * ref.R[t - 1] * ref.S[t - 1];
            const double slack =
                ref.R[t] * ref.R[t] * ref.S_err[t] + ref.R[t - 1] * ref.R[t - 1] * ref.S_err[t - 1];
            c.require(lhs <= rhs + slack + 1e-12, "R^2 S increased at t=" + std::to_string(t));
        }
    }
    c.require(edge_checks > 0 && mono_checks > 0, "no rounds in the positive-R regime");
    c.note(std::to_string(edge_checks) + " edge checks, " + std::to_string(mono_checks) +
           " monotonicity checks");
    return c.finish();
}

/// Criterion 7: decomposition consistency across the named instances and the
/// ternary family: witness margins, certificate margins, separating vector,
/// integral floors, and 1000 bounded-loss probes inside the margin interval.
inline CheckResult criterion_decomposition_consistency() {
    using namespace verify_detail;
    Checker c("decomposition-consistency");
    std::uint64_t probe_seed = 5000;
    for (const auto& di : decomposable_instances()) {
        const auto& M = di.inst.matrix;
        const auto& d = di.dec;
        const std::string& nm = di.inst.name;
        const auto wit = margins(M, d.witness);
        for (int i : d.Z.indices)
            c.require(wit[i] >= 1e-7, nm + ": witness margin not positive on Z");
        for (double g : wit) c.require(g >= -1e-8, nm + ": witness margin below -1e-8");
        if (!d.Z.empty()) {
            c.require(std::fabs(l1_norm(d.eta_dagger) - 1.0) <= 1e-10, nm + ": ||eta+||_1 != 1");
            const auto gm = margins(M, d.eta_dagger);
            for (int i : d.Z.indices)
                c.require(gm[i] >= *d.gamma - 1e-8, nm + ": certificate margin below gamma on Z");
            for (int i : d.F.indices)
                c.require(std::fabs(gm[i]) <= 1e-8, nm + ": certificate margin nonzero on F");
        }
        const auto y = separating_vector(M, d.F);
        if (!d.F.empty()) {
            double worst = 0;
            for (int j = 0; j < M.cols(); ++j) {
                double s = 0;
                for (int r = 0; r < d.F.size(); ++r) s += M(d.F.indices[r], j) * y[r];
                worst = std::max(worst, std::fabs(s));
            }
            c.require(worst <= 1e-8, nm + ": ||M_F^T y||_inf = " + fmt(worst));
            for (double v : y) c.require(v >= 1.0 - 1e-9, nm + ": separating vector entry below 1");
        }
        if (M.integral()) {
            const auto floors = worst_case_bounds(M.rows(), M.cols());
            if (d.gamma)
                c.require(*d.gamma >= floors.gamma_floor - 1e-15, nm + ": gamma below its floor");
            if (d.lambda_min)
                c.require(*d.lambda_min >= floors.lambda_floor - 1e-15,
                          nm + ": lambda_min below its floor");
        }
        const auto probes = probe_finite_margins(M, d.F, d.mu_max_bound, 1000, probe_seed++);
        c.require(probes.within_bounds, nm + ": probe margin left the bounded interval");
    }
    c.note(std::to_string(decomposable_instances().size()) + " instances");
    return c.finish();
}

/// Criterion 8: with the decomposition attached, every round's edge is at
/// least gamma * loss_Z / (loss_Z + loss_F) at the start of the round.
inline CheckResult criterion_edge_from_zero_loss() {
    using namespace verify_detail;
    Checker c("edge-from-zero-loss");
    for (const auto& di : decomposable_instances()) {
        const auto& M = di.inst.matrix;
        const auto trace = run(M, 50, Variant::Plain, std::nullopt, &di.dec.Z, &di.dec.F);
        if (trace.records.empty()) continue;
        const double gamma = di.dec.gamma.value_or(0.0);
        double lz = *trace.initial_loss_Z, lf = *trace.initial_loss_F;
        for (const auto& rec : trace.records) {
            const double bound = gamma * lz / (lz + lf);
            c.require(rec.delta >= bound - 1e-9,
                      di.inst.name + ": edge " + fmt(rec.delta) + " below " + fmt(bound) +
                          " at t=" + std::to_string(rec.t));
            lz = *rec.loss_Z;
            lf = *rec.loss_F;
        }
    }
    c.note(std::to_string(decomposable_instances().size()) + " instances, 50 rounds each");
    return c.finish();
}

/// Criterion 9: the near-optimal construction lands within eps of K_F/m.
inline CheckResult criterion_near_optimal() {
    using namespace verify_detail;
    Checker c("near-optimal-construction");
    double worst = -1e300;
    for (const auto& di : decomposable_instances()) {
        for (double eps : {0.1, 0.01}) {
            const auto lam = near_optimal_solution(di.inst.matrix, di.dec, eps);
            const double loss = exp_loss(di.inst.matrix, lam);
            const double target = di.dec.K_F / di.inst.matrix.rows() + eps;
            worst = std::max(worst, loss - target);
            c.require(loss <= target + 1e-9,
                      di.inst.name + " eps=" + fmt(eps) + ": loss " + fmt(loss) + " above " +
                          fmt(target));
        }
    }
    c.note("worst slack " + fmt(worst));
    return c.finish();
}

/// Criterion 10: lp::solve against vertex enumeration on 200 seeded
/// instances; brute-force optimal losses on the two analytic instances; the
/// Jacobi lambda_min against the closed-form 2x2 eigenvalue oracle.
inline CheckResult criterion_oracle_equivalences() {
    using namespace verify_detail;
    Checker c("oracle-equivalences");
    int optimal = 0, infeasible = 0;
    for (int k = 0; k < 200; ++k) {
        SplitMix64 rng(9000 + k);
        const int n = 1 + k % 8;
        const int max_rows = n <= 4 ? 6 : (n <= 6 ? 5 : 4);
        const int rows = 1 + static_cast<int>(rng.next_below(max_rows));
        LpProblem p;
        p.objective.resize(n);
        for (double& x : p.objective) x = 2 * rng.next_symmetric();
        p.lower.resize(n);
        p.upper.resize(n);
        for (int j = 0; j < n; ++j) {
            p.lower[j] = -3 * rng.next_unit();
            p.upper[j] = p.lower[j] + 0.5 + 3.5 * rng.next_unit();
        }
        for (int r = 0; r < rows; ++r) {
            LpConstraint con;
            con.coeffs.resize(n);
            for (double& x : con.coeffs) x = 2 * rng.next_symmetric();
            const int pick = static_cast<int>(rng.next_below(k % 3 == 0 ? 3 : 2));
            con.rel = pick == 0 ? Relation::LessEq
                                : (pick == 1 ? Relation::GreaterEq : Relation::Equal);
            con.rhs = 2 * rng.next_symmetric();
            p.constraints.push_back(std::move(con));
        }
        const auto sol = solve(p);
        const auto ve = vertex_enumerate_lp(p);
        c.require(sol.status == ve.status,
                  "lp status mismatch on instance " + std::to_string(k));
        if (sol.status == LpStatus::Optimal && ve.status == LpStatus::Optimal) {
            ++optimal;
            c.require(std::fabs(sol.value - ve.value) <= 1e-7,
                      "lp value mismatch " + fmt(sol.value) + " vs " + fmt(ve.value) +
                          " on instance " + std::to_string(k));
            c.require(lp_feasible(p, sol.x), "lp solution infeasible on instance " +
                                                 std::to_string(k));
        } else {
            ++infeasible;
        }
    }
    c.require(optimal >= 50 && infeasible >= 20, "instance mix too one-sided");

    const auto three = gen_three_example();
    const auto ml3 = brute_min_loss(three.matrix, GridSpec::cube(2, -8, 8, 33, 3));
    c.require(std::fabs(ml3.value - 2.0 / 3.0) <= 1e-3,
              "three-example brute min loss " + fmt(ml3.value));
    const auto noni = gen_nonintegral(0.1);
    const auto mln = brute_min_loss(noni.matrix, GridSpec::cube(2, -128, 128, 33, 4));
    c.require(std::fabs(mln.value - 0.5) <= 1e-3, "nonintegral brute min loss " + fmt(mln.value));

    // closed-form 2x2 eigenvalue oracle vs the Jacobi path
    for (std::uint64_t seed = 40; seed < 60; ++seed) {
        const auto inst = gen_random(4, 2, Alphabet::Ternary, seed);
        const auto F = ExampleSet::full(4);
        double g00 = 0, g01 = 0, g11 = 0;
        for (int i = 0; i < 4; ++i) {
            g00 += inst.matrix(i, 0) * inst.matrix(i, 0);
            g01 += inst.matrix(i, 0) * inst.matrix(i, 1);
            g11 += inst.matrix(i, 1) * inst.matrix(i, 1);
        }
        const double tr = g00 + g11, det = g00 * g11 - g01 * g01;
        const double disc = std::sqrt(std::max(0.0, tr * tr - 4 * det));
        const double lo = (tr - disc) / 2, hi = (tr + disc) / 2;
        std::optional<double> expect;
        if (lo > 1e-9 * std::max(hi, 1e-300)) expect = std::sqrt(lo);
        else if (hi > 0) expect = std::sqrt(hi);
        const auto got = lambda_min(inst.matrix, F);
        c.require(expect.has_value() == got.has_value(), "lambda_min presence mismatch");
        if (expect && got)
            c.require(std::fabs(*expect - *got) <= 1e-9,
                      "lambda_min " + fmt(*got) + " vs oracle " + fmt(*expect));
    }
    c.note(std::to_string(optimal) + " optimal / " + std::to_string(infeasible) +
           " infeasible LP instances");
    return c.finish();
}

inline std::vector<CheckResult> run_all_criteria() {
    return {
        criterion_analytic_trace(),
        criterion_drop_identity(),
        criterion_reference_rate(),
        criterion_lower_bound_floors(),
        criterion_scaled_rate(),
        criterion_distance_bounds(),
        criterion_decomposition_consistency(),
        criterion_edge_from_zero_loss(),
        criterion_near_optimal(),
        criterion_oracle_equivalences(),
    };
}

inline std::vector<std::string> suite_names() {
    return {"trace-identities", "rate-bounds", "lower-bounds", "decomposition-consistency"};
}

/// Named acceptance batteries for the command-line verify subcommand.
inline std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "trace-identities")
        return {criterion_analytic_trace(), criterion_drop_identity()};
    if (name == "rate-bounds")
        return {criterion_reference_rate(), criterion_scaled_rate(), criterion_distance_bounds(),
                criterion_edge_from_zero_loss()};
    if (name == "lower-bounds") return {criterion_lower_bound_floors()};
    if (name == "decomposition-consistency")
        return {criterion_decomposition_consistency(), criterion_near_optimal(),
                criterion_oracle_equivalences()};
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace boostlab
