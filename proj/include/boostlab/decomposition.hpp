#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "boostlab/lp.hpp"
#include "boostlab/matrix.hpp"
#include "boostlab/numerics.hpp"

namespace boostlab {

/// Partition of the examples into the zero-loss set Z (margins can be driven
/// to +inf) and the finite-margin set F, plus all the certificate objects the
/// C/eps rate constant is built from.
struct Decomposition {
    ExampleSet Z, F;
    Combination witness;                 // strictly positive margins on Z, >= 0 on F
    Combination eta_dagger;              // unit-l1 certificate; zero margins on F
    std::optional<double> gamma;         // min margin of eta_dagger on Z; absent when Z empty
    Combination eta_star;                // finite optimum of the loss restricted to F
    double K_F = 0;                      // optimal unnormalized loss on F
    std::optional<double> lambda_min;    // sqrt of smallest positive eigenvalue of M_F^T M_F
    double mu_max_bound = 0;             // ln m * |F|^1.5 * |F|!
    double empirical_mu = 0;             // largest F-margin seen across bounded-loss probes
};

struct RateConstants {
    double C0 = 0;  // 2 lambda_min^2 / (N m e^mu)
    double C1 = 0;  // min(1/2, (1/4) sqrt(C0/(2m)))
    double C2 = 0;  // C0 / (4m)
    double C3 = 0;  // min(C2/m, (gamma C1 / m)^2 / 2); gamma branch dropped when Z is empty
    double C = 0;   // 32 m^3 N e^mu / (gamma^2 lambda_min^2), or 1/C3 in the Z-empty regime
    double mu_used = 0;
    // The same constants in log10. e^mu leaves double range already for
    // modest |F| (mu grows like ln m * f^1.5 * f!), which turns C0..C3 into
    // 0 and C into inf above; the log forms stay exact at any scale.
    double log10_C0 = 0, log10_C1 = 0, log10_C2 = 0, log10_C3 = 0, log10_C = 0;
};

enum class Regime {
    General,        // Z and F both nonempty: C/eps applies with the full constant
    WeakLearnable,  // F empty: every round has edge >= gamma, loss <= (1-gamma^2)^{t/2}
    FiniteOptimum,  // Z empty: a finite combination attains the optimum
};

inline const char* to_string(Regime r) {
    switch (r) {
        case Regime::General: return "general";
        case Regime::WeakLearnable: return "weak-learnable";
        case Regime::FiniteOptimum: return "finite-optimum";
    }
    return "?";
}

struct RateReport {
    Regime regime = Regime::General;
    std::optional<RateConstants> constants;  // absent in the weak-learnable regime
};

struct ZeroLossSplit {
    ExampleSet Z, F;
    Combination witness;
};

namespace detail {

inline double certificate_big_m(int m) { return m * factorial_as_double(m) + 1.0; }

}  // namespace detail

/// Z is the unique maximal set of examples that can simultaneously get
/// strictly positive margin while every other example stays non-negative.
/// Positive-margin certificates add, so one LP finds it: split lambda into
/// positive parts bounded by m*m!+1 (large enough that no valid certificate
/// of an integral instance is cut off), give each example a slack in [0,1]
/// capped below its margin, and maximize the slack total. Optimal slacks sit
/// at 1 on Z and 0 on F; 1e-7 separates them from pivot noise.
inline ZeroLossSplit zero_loss_set(const FeatureMatrix& mat) {
    const int m = mat.rows(), n = mat.cols();
    const double big = detail::certificate_big_m(m);
    LpProblem p;
    const int nv = 2 * n + m;  // lambda+ , lambda- , slacks
    p.objective.assign(nv, 0.0);
    for (int i = 0; i < m; ++i) p.objective[2 * n + i] = 1.0;
    p.lower.assign(nv, 0.0);
    p.upper.assign(nv, big);
    for (int i = 0; i < m; ++i) p.upper[2 * n + i] = 1.0;
    for (int i = 0; i < m; ++i) {
        LpConstraint c;
        c.coeffs.assign(nv, 0.0);
        for (int j = 0; j < n; ++j) {
            c.coeffs[j] = mat(i, j);
            c.coeffs[n + j] = -mat(i, j);
        }
        c.coeffs[2 * n + i] = -1.0;  // (M lambda)_i - s_i >= 0
        c.rel = Relation::GreaterEq;
        c.rhs = 0.0;
        p.constraints.push_back(c);
        c.coeffs[2 * n + i] = 0.0;   // (M lambda)_i >= 0
        p.constraints.push_back(std::move(c));
    }
    auto sol = solve(p);
    if (sol.status != LpStatus::Optimal)
        throw std::runtime_error("zero_loss_set: slack LP unexpectedly infeasible");
    std::vector<int> z, f;
    for (int i = 0; i < m; ++i)
        (sol.x[2 * n + i] >= 1e-7 ? z : f).push_back(i);
    Combination witness(n);
    for (int j = 0; j < n; ++j) witness[j] = sol.x[j] - sol.x[n + j];
    return ZeroLossSplit{ExampleSet::of(std::move(z), m), ExampleSet::of(std::move(f), m),
                         std::move(witness)};
}

struct GammaCertificate {
    Combination eta_dagger;  // unit l1-norm
    double gamma = 0;        // min margin over Z; margins on F are exactly 0
};

/// Max-min-margin certificate: maximize g subject to (M eta)_i >= g on Z,
/// (M eta)_i = 0 on F and ||eta||_1 <= 1. Returns the optimizer renormalized
/// to unit l1-norm with gamma recomputed from its margins. Z empty -> no
/// certificate is needed and none is returned.
inline std::optional<GammaCertificate> gamma_certificate(const FeatureMatrix& mat,
                                                         const ExampleSet& Z,
                                                         const ExampleSet& F) {
    if (Z.empty()) return std::nullopt;
    const int n = mat.cols();
    const int nv = 2 * n + 1;  // eta+, eta-, gamma
    LpProblem p;
    p.objective.assign(nv, 0.0);
    p.objective[2 * n] = 1.0;
    p.lower.assign(nv, 0.0);
    p.upper.assign(nv, 1.0);
    for (int i : Z.indices) {
        LpConstraint c;
        c.coeffs.assign(nv, 0.0);
        for (int j = 0; j < n; ++j) {
            c.coeffs[j] = mat(i, j);
            c.coeffs[n + j] = -mat(i, j);
        }
        c.coeffs[2 * n] = -1.0;
        c.rel = Relation::GreaterEq;
        c.rhs = 0.0;
        p.constraints.push_back(std::move(c));
    }
    for (int i : F.indices) {
        LpConstraint c;
        c.coeffs.assign(nv, 0.0);
        for (int j = 0; j < n; ++j) {
            c.coeffs[j] = mat(i, j);
            c.coeffs[n + j] = -mat(i, j);
        }
        c.rel = Relation::Equal;
        c.rhs = 0.0;
        p.constraints.push_back(std::move(c));
    }
    {
        LpConstraint norm;
        norm.coeffs.assign(nv, 0.0);
        for (int j = 0; j < 2 * n; ++j) norm.coeffs[j] = 1.0;
        norm.rel = Relation::LessEq;
        norm.rhs = 1.0;
        p.constraints.push_back(std::move(norm));
    }
    auto sol = solve(p);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("gamma_certificate: infeasible LP; Z/F split is inconsistent");
    Combination eta(n);
    for (int j = 0; j < n; ++j) eta[j] = sol.x[j] - sol.x[n + j];
    const double n1 = l1_norm(eta);
    if (n1 <= 0) throw std::logic_error("gamma_certificate: zero certificate for nonempty Z");
    for (double& x : eta) x /= n1;
    double g = std::numeric_limits<double>::infinity();
    const auto gm = margins(mat, eta);
    for (int i : Z.indices) g = std::min(g, gm[i]);
    return GammaCertificate{std::move(eta), g};
}

struct FiniteOptimumResult {
    Combination eta_star;
    double K_F = 0;
};

/// Minimizes sum_{i in F} exp(-(M eta)_i) by damped Newton restricted to the
/// orthogonal complement of the null space of M_F (basis from the Jacobi
/// eigendecomposition of M_F^T M_F; eigenvalues below 1e-9 of the largest are
/// treated as zero). Stops when the gradient inf-norm falls below 1e-10.
inline FiniteOptimumResult finite_optimum(const FeatureMatrix& mat, const ExampleSet& F) {
    const int n = mat.cols();
    FiniteOptimumResult out;
    out.eta_star.assign(n, 0.0);
    if (F.empty()) return out;
    const int f = F.size();

    // Gram matrix of the F-rows
    std::vector<double> gram(static_cast<std::size_t>(n) * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double s = 0;
            for (int i : F.indices) s += mat(i, a) * mat(i, b);
            gram[static_cast<std::size_t>(a) * n + b] = s;
        }
    const auto eig = jacobi_eigen_symmetric(gram, n);
    const double lam_max = eig.values.back();
    std::vector<int> keep;
    for (int k = 0; k < n; ++k)
        if (eig.values[k] > 1e-9 * std::max(lam_max, 1e-300)) keep.push_back(k);
    if (keep.empty()) {  // M_F is identically zero
        out.K_F = f;
        return out;
    }
    const int kdim = static_cast<int>(keep.size());
    // A = M_F * V_keep, f x kdim
    std::vector<double> a(static_cast<std::size_t>(f) * kdim, 0.0);
    for (int r = 0; r < f; ++r) {
        const int i = F.indices[r];
        for (int c = 0; c < kdim; ++c) {
            double s = 0;
            for (int j = 0; j < n; ++j)
                s += mat(i, j) * eig.vectors[static_cast<std::size_t>(j) * n + keep[c]];
            a[static_cast<std::size_t>(r) * kdim + c] = s;
        }
    }

    std::vector<double> z(kdim, 0.0);
    auto objective = [&](const std::vector<double>& zz) {
        double s = 0;
        for (int r = 0; r < f; ++r) {
            double g = 0;
            for (int c = 0; c < kdim; ++c) g += a[static_cast<std::size_t>(r) * kdim + c] * zz[c];
            s += std::exp(-g);
        }
        return s;
    };

    bool converged = false;
    for (int it = 0; it < 10000; ++it) {
        std::vector<double> w(f);
        double fz = 0;
        for (int r = 0; r < f; ++r) {
            double g = 0;
            for (int c = 0; c < kdim; ++c) g += a[static_cast<std::size_t>(r) * kdim + c] * z[c];
            w[r] = std::exp(-g);
            fz += w[r];
        }
        // full-space gradient: -M_F^T w, representable in the kept subspace
        double ginf = 0;
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int r = 0; r < f; ++r) s += mat(F.indices[r], j) * w[r];
            ginf = std::max(ginf, std::fabs(s));
        }
        if (ginf <= 1e-10) { converged = true; break; }
        std::vector<double> grad(kdim, 0.0);
        for (int c = 0; c < kdim; ++c)
            for (int r = 0; r < f; ++r) grad[c] -= a[static_cast<std::size_t>(r) * kdim + c] * w[r];
        std::vector<double> hess(static_cast<std::size_t>(kdim) * kdim, 0.0);
        for (int r = 0; r < f; ++r)
            for (int c1 = 0; c1 < kdim; ++c1)
                for (int c2 = 0; c2 < kdim; ++c2)
                    hess[static_cast<std::size_t>(c1) * kdim + c2] +=
                        w[r] * a[static_cast<std::size_t>(r) * kdim + c1] *
                        a[static_cast<std::size_t>(r) * kdim + c2];
        std::vector<double> neg(kdim);
        for (int c = 0; c < kdim; ++c) neg[c] = -grad[c];
        const auto dir = solve_spd(hess, neg, kdim);
        double gd = 0;
        for (int c = 0; c < kdim; ++c) gd += grad[c] * dir[c];
        double step = 1.0;
        std::vector<double> zt(kdim);
        for (int back = 0; back < 80; ++back) {
            for (int c = 0; c < kdim; ++c) zt[c] = z[c] + step * dir[c];
            if (objective(zt) <= fz + 1e-4 * step * gd) break;
            step /= 2;
        }
        z = zt;
        if (it + 1 == 10000)
            throw std::runtime_error("finite_optimum: Newton iteration cap exceeded");
    }
    (void)converged;
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int c = 0; c < kdim; ++c)
            s += eig.vectors[static_cast<std::size_t>(j) * n + keep[c]] * z[c];
        out.eta_star[j] = s;
    }
    out.K_F = set_loss(mat, out.eta_star, F);
    return out;
}

/// sqrt of the smallest positive eigenvalue of M_F^T M_F, by cyclic Jacobi.
/// Absent when there is no positive eigenvalue (F empty or M_F = 0).
inline std::optional<double> lambda_min(const FeatureMatrix& mat, const ExampleSet& F) {
    const int n = mat.cols();
    if (F.empty()) return std::nullopt;
    std::vector<double> gram(static_cast<std::size_t>(n) * n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double s = 0;
            for (int i : F.indices) s += mat(i, a) * mat(i, b);
            gram[static_cast<std::size_t>(a) * n + b] = s;
        }
    const auto eig = jacobi_eigen_symmetric(gram, n);
    const double lam_max = eig.values.back();
    for (double v : eig.values)
        if (v > 1e-9 * std::max(lam_max, 1e-300)) return std::sqrt(v);
    return std::nullopt;
}

/// Upper bound ln(m) * f^1.5 * f! on the largest F-margin any bounded-loss
/// combination can produce. Factorial growth: +inf marker beyond f = 20.
inline double mu_max_bound(int m, int f) {
    if (m < 2) throw std::invalid_argument("mu_max_bound: need m >= 2");
    if (f < 0) throw std::invalid_argument("mu_max_bound: need f >= 0");
    if (f == 0) return 0.0;
    if (f > 20) return std::numeric_limits<double>::infinity();
    return std::log(static_cast<double>(m)) * std::pow(static_cast<double>(f), 1.5) *
           factorial_as_double(f);
}

/// Positive combination y of the F-rows with M_F^T y = 0, found as an LP
/// feasibility problem with y_i in [1, 1 + f*f!]. Existence is guaranteed for
/// any F produced by zero_loss_set; infeasibility means the split is wrong
/// and is surfaced loudly.
inline std::vector<double> separating_vector(const FeatureMatrix& mat, const ExampleSet& F) {
    if (F.empty()) return {};
    const int f = F.size();
    LpProblem p;
    p.objective.assign(f, 0.0);
    p.lower.assign(f, 1.0);
    p.upper.assign(f, 1.0 + f * factorial_as_double(f));
    for (int j = 0; j < mat.cols(); ++j) {
        LpConstraint c;
        c.coeffs.resize(f);
        for (int r = 0; r < f; ++r) c.coeffs[r] = mat(F.indices[r], j);
        c.rel = Relation::Equal;
        c.rhs = 0.0;
        p.constraints.push_back(std::move(c));
    }
    auto sol = solve(p);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("separating_vector: infeasible; Z/F split is inconsistent");
    return sol.x;
}

struct ProbeReport {
    double empirical_mu = 0;    // largest F-margin observed
    double min_margin = 0;      // smallest F-margin observed
    bool within_bounds = true;  // margins stayed in [-ln m - 1e-9, mu_max_bound]
    int samples = 0;
};

/// Random bounded-loss probes of the F-margin interval: each probe scales a
/// random unit-l1 direction to the boundary of {loss on F <= m} by bisection
/// and records the margins there.
inline ProbeReport probe_finite_margins(const FeatureMatrix& mat, const ExampleSet& F,
                                        double mu_bound, int n_probes = 1000,
                                        std::uint64_t seed = 0x9D1CE5) {
    ProbeReport rep;
    if (F.empty()) return rep;
    const int m = mat.rows(), n = mat.cols();
    SplitMix64 rng(seed);
    auto loss_at = [&](const Combination& eta) { return set_loss(mat, eta, F); };
    rep.empirical_mu = -std::numeric_limits<double>::infinity();
    rep.min_margin = std::numeric_limits<double>::infinity();
    for (int pidx = 0; pidx < n_probes; ++pidx) {
        Combination u(n);
        for (int j = 0; j < n; ++j) u[j] = rng.next_symmetric();
        const double n1 = l1_norm(u);
        if (n1 < 1e-12) continue;
        for (double& x : u) x /= n1;
        // largest t with loss(t*u) <= m, by doubling then bisection
        double t_lo = 0.0, t_hi = 1.0;
        bool grew = false;
        while (t_hi < 1.1e12) {
            Combination eta(n);
            for (int j = 0; j < n; ++j) eta[j] = t_hi * u[j];
            if (loss_at(eta) > m) { grew = true; break; }
            t_lo = t_hi;
            t_hi *= 2;
        }
        if (grew) {
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (t_lo + t_hi);
                Combination eta(n);
                for (int j = 0; j < n; ++j) eta[j] = mid * u[j];
                (loss_at(eta) <= m ? t_lo : t_hi) = mid;
            }
        }
        Combination eta(n);
        for (int j = 0; j < n; ++j) eta[j] = t_lo * u[j];
        const auto g = margins(mat, eta);
        for (int i : F.indices) {
            rep.empirical_mu = std::max(rep.empirical_mu, g[i]);
            rep.min_margin = std::min(rep.min_margin, g[i]);
            if (g[i] > mu_bound || g[i] < -std::log(static_cast<double>(m)) - 1e-9)
                rep.within_bounds = false;
        }
        ++rep.samples;
    }
    if (rep.samples == 0) {
        rep.empirical_mu = 0;
        rep.min_margin = 0;
    }
    return rep;
}

/// Full decomposition of an instance.
inline Decomposition decompose(const FeatureMatrix& mat, int probes = 1000,
                               std::uint64_t probe_seed = 0x9D1CE5) {
    Decomposition d;
    auto split = zero_loss_set(mat);
    d.Z = std::move(split.Z);
    d.F = std::move(split.F);
    d.witness = std::move(split.witness);
    if (auto cert = gamma_certificate(mat, d.Z, d.F)) {
        d.eta_dagger = std::move(cert->eta_dagger);
        d.gamma = cert->gamma;
    } else {
        d.eta_dagger.assign(mat.cols(), 0.0);
    }
    auto fo = finite_optimum(mat, d.F);
    d.eta_star = std::move(fo.eta_star);
    d.K_F = fo.K_F;
    d.lambda_min = lambda_min(mat, d.F);
    d.mu_max_bound = mu_max_bound(std::max(mat.rows(), 2), d.F.size());
    d.empirical_mu = probe_finite_margins(mat, d.F, d.mu_max_bound, probes, probe_seed).empirical_mu;
    return d;
}

/// Worst-case certificate floors for integral matrices:
/// gamma >= 1/(sqrt(N) m m!) and lambda_min >= 1/m!. Factorials overflow the
/// useful range past m = 20; the floors collapse to the trivial 0 marker.
struct WorstCaseBounds {
    double gamma_floor = 0;
    double lambda_floor = 0;
};

inline WorstCaseBounds worst_case_bounds(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("worst_case_bounds: need m,N >= 1");
    if (m > 20) return {0.0, 0.0};
    const double mf = factorial_as_double(m);
    return {1.0 / (std::sqrt(static_cast<double>(n)) * m * mf), 1.0 / mf};
}

/// The per-round progress constants and the C/eps rate constant, evaluated
/// from the stored certificate quantities with mu at its upper bound.
inline RateReport rate_constants(const Decomposition& d, int m, int n) {
    RateReport rep;
    if (d.F.empty()) {
        rep.regime = Regime::WeakLearnable;
        return rep;  // edge >= gamma every round; no C needed
    }
    if (!d.lambda_min)
        throw std::logic_error("rate_constants: lambda_min undefined for nonempty F");
    RateConstants c;
    c.mu_used = d.mu_max_bound;
    const double l2 = *d.lambda_min * *d.lambda_min;
    const double mu_log10 = c.mu_used / std::log(10.0);
    c.C0 = 2.0 * l2 * std::exp(-c.mu_used) / (static_cast<double>(n) * m);
    c.log10_C0 = std::log10(2.0 * l2 / (static_cast<double>(n) * m)) - mu_log10;
    c.C1 = std::min(0.5, 0.25 * std::sqrt(c.C0 / (2.0 * m)));
    c.log10_C1 = std::min(std::log10(0.5), 0.5 * (c.log10_C0 - std::log10(32.0 * m)));
    c.C2 = c.C0 / (4.0 * m);
    c.log10_C2 = c.log10_C0 - std::log10(4.0 * m);
    if (d.Z.empty()) {
        rep.regime = Regime::FiniteOptimum;
        c.C3 = c.C2 / m;
        c.log10_C3 = c.log10_C2 - std::log10(static_cast<double>(m));
        c.C = 1.0 / c.C3;
        c.log10_C = -c.log10_C3;
    } else {
        rep.regime = Regime::General;
        const double g = *d.gamma;
        c.C3 = std::min(c.C2 / m, 0.5 * (g * c.C1 / m) * (g * c.C1 / m));
        c.log10_C3 = std::min(c.log10_C2 - std::log10(static_cast<double>(m)),
                              2.0 * std::log10(g) + 2.0 * c.log10_C1 -
                                  std::log10(2.0 * m * static_cast<double>(m)));
        c.C = 32.0 * std::pow(static_cast<double>(m), 3) * n * std::exp(c.mu_used) / (g * g * l2);
        c.log10_C = std::log10(32.0 * std::pow(static_cast<double>(m), 3) * n / (g * g * l2)) +
                    mu_log10;
    }
    rep.constants = c;
    return rep;
}

/// lambda* = eta* + (ln(1/eps)/gamma - c) eta_dagger with c the smallest
/// Z-margin of eta*. Drives every Z-margin to at least ln(1/eps) while
/// keeping the optimal margins on F, so the loss lands within eps of the
/// infimum. A negative c with gamma < 1 can erode the margin guarantee; in
/// that case the coefficient is raised to (ln(1/eps) - c)/gamma, which
/// restores it. eps >= 1 is a no-op target. Z empty returns eta* itself.
inline Combination near_optimal_solution(const FeatureMatrix& mat, const Decomposition& d,
                                         double eps) {
    if (!(eps > 0)) throw std::invalid_argument("near_optimal_solution: need eps > 0");
    eps = std::min(eps, 1.0);
    if (d.Z.empty()) return d.eta_star;
    const double g = *d.gamma;
    const auto ms = margins(mat, d.eta_star);
    double c = std::numeric_limits<double>::infinity();
    for (int i : d.Z.indices) c = std::min(c, ms[i]);
    double t = std::log(1.0 / eps) / g - c;
    if (c < 0) t = (std::log(1.0 / eps) - c) / g;
    Combination out = d.eta_star;
    for (int j = 0; j < mat.cols(); ++j) out[j] += t * d.eta_dagger[j];
    return out;
}

/// JSON report with every decomposition quantity. Example sets are emitted
/// as row labels when the instance carries them, as indices otherwise.
inline nlohmann::json decomposition_report(const Decomposition& d, const RateReport& rate,
                                           const std::vector<std::string>* row_labels = nullptr) {
    nlohmann::json j;
    auto set_json = [&](const ExampleSet& s) {
        nlohmann::json arr = nlohmann::json::array();
        for (int i : s.indices) {
            if (row_labels && i < static_cast<int>(row_labels->size()))
                arr.push_back((*row_labels)[i]);
            else
                arr.push_back(i);
        }
        return arr;
    };
    j["Z"] = set_json(d.Z);
    j["F"] = set_json(d.F);
    j["eta_dagger"] = d.eta_dagger;
    j["gamma"] = d.gamma ? nlohmann::json(*d.gamma) : nlohmann::json(nullptr);
    j["eta_star"] = d.eta_star;
    j["K_F"] = d.K_F;
    j["lambda_min"] = d.lambda_min ? nlohmann::json(*d.lambda_min) : nlohmann::json(nullptr);
    j["mu_max_bound"] = d.mu_max_bound;
    j["empirical_mu"] = d.empirical_mu;
    j["regime"] = to_string(rate.regime);
    if (rate.constants) {
        // non-representable values (underflow to 0, overflow to inf) keep
        // their exact magnitude in the log10 companions
        auto put = [&](const char* key, double v, double lg) {
            j[key] = (v > 0 && std::isfinite(v)) ? nlohmann::json(v) : nlohmann::json(nullptr);
            j[std::string("log10_") + key] = lg;
        };
        put("C0", rate.constants->C0, rate.constants->log10_C0);
        put("C1", rate.constants->C1, rate.constants->log10_C1);
        put("C2", rate.constants->C2, rate.constants->log10_C2);
        put("C3", rate.constants->C3, rate.constants->log10_C3);
        put("C", rate.constants->C, rate.constants->log10_C);
    } else {
        j["C0"] = nullptr;
        j["C1"] = nullptr;
        j["C2"] = nullptr;
        j["C3"] = nullptr;
        j["C"] = nullptr;
    }
    return j;
}

}  // namespace boostlab
