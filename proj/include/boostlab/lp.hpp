#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace boostlab {

enum class Relation { LessEq, Equal, GreaterEq };

struct LpConstraint {
    std::vector<double> coeffs;
    Relation rel;
    double rhs;
};

/// maximize objective . x  subject to the constraints and finite per-variable
/// bounds. Finite bounds are mandatory: callers size them from certificate
/// bounds so that boundedness never cuts off a valid solution.
struct LpProblem {
    std::vector<double> objective;
    std::vector<LpConstraint> constraints;
    std::vector<double> lower, upper;
};

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double value = 0.0;
};

/// Constraint/bound satisfaction check, shared by tests and the vertex
/// enumeration oracle.
inline bool lp_feasible(const LpProblem& p, const std::vector<double>& x,
                        double con_tol = 1e-8, double bound_tol = 1e-10) {
    const int n = static_cast<int>(p.objective.size());
    for (int j = 0; j < n; ++j)
        if (x[j] < p.lower[j] - bound_tol || x[j] > p.upper[j] + bound_tol) return false;
    for (const auto& c : p.constraints) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += c.coeffs[j] * x[j];
        switch (c.rel) {
            case Relation::LessEq:
                if (s > c.rhs + con_tol) return false;
                break;
            case Relation::GreaterEq:
                if (s < c.rhs - con_tol) return false;
                break;
            case Relation::Equal:
                if (std::fabs(s - c.rhs) > con_tol) return false;
                break;
        }
    }
    return true;
}

namespace detail {

// Bounded-variable primal simplex on the full tableau, two phases, Bland's
// rule throughout. Sizes here are tiny (tens of columns), so the dense
// tableau and from-scratch value recomputation each iteration are fine.
class BoundedSimplex {
public:
    BoundedSimplex(const LpProblem& p) : n_(static_cast<int>(p.objective.size())) {
        const double inf = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n_; ++j) {
            if (!(p.lower[j] <= p.upper[j]))
                throw std::invalid_argument("lp: lower bound exceeds upper bound");
            if (!std::isfinite(p.lower[j]) || !std::isfinite(p.upper[j]))
                throw std::invalid_argument("lp: all variable bounds must be finite");
        }
        m_ = static_cast<int>(p.constraints.size());
        lo_ = p.lower;
        // columns: n structural (shifted to [0, u]), m slacks, m artificials
        ncols_ = n_ + m_;
        nall_ = ncols_ + m_;
        ub_.assign(nall_, inf);
        for (int j = 0; j < n_; ++j) ub_[j] = p.upper[j] - p.lower[j];
        t_.assign(static_cast<std::size_t>(m_) * nall_, 0.0);
        tb_.assign(m_, 0.0);
        for (int i = 0; i < m_; ++i) {
            const auto& c = p.constraints[i];
            if (static_cast<int>(c.coeffs.size()) != n_)
                throw std::invalid_argument("lp: constraint dimension mismatch");
            double rhs = c.rhs;
            double sign = 1.0;
            if (c.rel == Relation::GreaterEq) sign = -1.0;  // flip to <=
            for (int j = 0; j < n_; ++j) {
                at(i, j) = sign * c.coeffs[j];
                rhs -= c.coeffs[j] * lo_[j];
            }
            rhs *= sign;
            at(i, n_ + i) = 1.0;                                  // slack
            if (c.rel == Relation::Equal) ub_[n_ + i] = 0.0;      // fixed slack
            if (rhs < 0) {                                        // keep rhs >= 0
                for (int j = 0; j < ncols_; ++j) at(i, j) = -at(i, j);
                rhs = -rhs;
            }
            at(i, ncols_ + i) = 1.0;  // artificial
            tb_[i] = rhs;
        }
        basis_.resize(m_);
        in_basis_.assign(nall_, false);
        at_upper_.assign(nall_, false);
        for (int i = 0; i < m_; ++i) {
            basis_[i] = ncols_ + i;
            in_basis_[ncols_ + i] = true;
        }
    }

    LpSolution solve(const LpProblem& p) {
        // phase 1: drive artificials to zero
        std::vector<double> cost(nall_, 0.0);
        for (int j = ncols_; j < nall_; ++j) cost[j] = 1.0;
        iterate(cost);
        auto v = values();
        double infeas = 0;
        for (int j = ncols_; j < nall_; ++j) infeas += v[j];
        if (infeas > 1e-7) return {LpStatus::Infeasible, {}, 0.0};
        for (int j = ncols_; j < nall_; ++j) ub_[j] = 0.0;  // artificials may not return

        // phase 2: the real objective (maximize -> minimize negated)
        std::fill(cost.begin(), cost.end(), 0.0);
        for (int j = 0; j < n_; ++j) cost[j] = -p.objective[j];
        iterate(cost);
        v = values();

        LpSolution sol;
        sol.status = LpStatus::Optimal;
        sol.x.resize(n_);
        sol.value = 0;
        for (int j = 0; j < n_; ++j) {
            sol.x[j] = v[j] + lo_[j];
            sol.value += p.objective[j] * sol.x[j];
        }
        return sol;
    }

private:
    double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * nall_ + j]; }
    double atc(int i, int j) const { return t_[static_cast<std::size_t>(i) * nall_ + j]; }

    std::vector<double> values() const {
        std::vector<double> v(nall_, 0.0);
        for (int j = 0; j < nall_; ++j)
            if (!in_basis_[j] && at_upper_[j]) v[j] = ub_[j];
        for (int i = 0; i < m_; ++i) {
            double x = tb_[i];
            for (int j = 0; j < nall_; ++j)
                if (!in_basis_[j] && at_upper_[j] && atc(i, j) != 0.0) x -= atc(i, j) * ub_[j];
            v[basis_[i]] = x;
        }
        return v;
    }

    void iterate(const std::vector<double>& cost) {
        const double inf = std::numeric_limits<double>::infinity();
        // reduced costs for the current basis
        std::vector<double> d = cost;
        for (int i = 0; i < m_; ++i) {
            const double cb = cost[basis_[i]];
            if (cb != 0.0)
                for (int j = 0; j < nall_; ++j) d[j] -= cb * atc(i, j);
        }
        for (long iter = 0; iter < kMaxPivots; ++iter) {
            const auto v = values();
            // entering variable: Bland, skipping fixed columns
            int e = -1;
            double sigma = 0;
            for (int j = 0; j < nall_; ++j) {
                if (in_basis_[j] || ub_[j] <= 0.0) continue;
                if (!at_upper_[j] && d[j] < -kTol) { e = j; sigma = 1.0; break; }
                if (at_upper_[j] && d[j] > kTol) { e = j; sigma = -1.0; break; }
            }
            if (e < 0) return;  // optimal for this phase

            // ratio test: entering moves by t in direction sigma, basics by -sigma*T[:,e]
            double tstar = ub_[e];
            int leave = -1;
            bool leave_at_upper = false;
            for (int i = 0; i < m_; ++i) {
                const double coef = sigma * atc(i, e);
                const int bj = basis_[i];
                if (coef > kTol) {
                    const double ti = v[bj] / coef;  // basic falls to its lower bound 0
                    if (ti < tstar - kTieTol ||
                        (ti < tstar + kTieTol && (leave < 0 || bj < basis_[leave]))) {
                        tstar = std::min(tstar, std::max(ti, 0.0));
                        leave = i;
                        leave_at_upper = false;
                    }
                } else if (coef < -kTol && ub_[bj] < inf) {
                    const double ti = (ub_[bj] - v[bj]) / (-coef);  // basic rises to upper
                    if (ti < tstar - kTieTol ||
                        (ti < tstar + kTieTol && (leave < 0 || bj < basis_[leave]))) {
                        tstar = std::min(tstar, std::max(ti, 0.0));
                        leave = i;
                        leave_at_upper = true;
                    }
                }
            }
            if (leave < 0) {
                if (tstar == inf) throw std::runtime_error("lp: unbounded direction");
                at_upper_[e] = !at_upper_[e];  // bound flip, no basis change
                continue;
            }
            // pivot on (leave, e)
            const double piv = atc(leave, e);
            const double inv = 1.0 / piv;
            for (int j = 0; j < nall_; ++j) at(leave, j) *= inv;
            tb_[leave] *= inv;
            for (int i = 0; i < m_; ++i) {
                if (i == leave) continue;
                const double f = atc(i, e);
                if (f == 0.0) continue;
                for (int j = 0; j < nall_; ++j) at(i, j) -= f * atc(leave, j);
                tb_[i] -= f * tb_[leave];
            }
            const double fd = d[e];
            if (fd != 0.0)
                for (int j = 0; j < nall_; ++j) d[j] -= fd * atc(leave, j);
            const int lv = basis_[leave];
            in_basis_[lv] = false;
            at_upper_[lv] = leave_at_upper;
            basis_[leave] = e;
            in_basis_[e] = true;
            at_upper_[e] = false;
        }
        throw std::runtime_error("lp: pivot cap exceeded (malformed instance?)");
    }

    static constexpr double kTol = 1e-9;
    static constexpr double kTieTol = 1e-12;
    static constexpr long kMaxPivots = 1000000;

    int n_, m_, ncols_, nall_;
    std::vector<double> lo_, ub_;
    std::vector<double> t_, tb_;
    std::vector<int> basis_;
    std::vector<bool> in_basis_;
    std::vector<bool> at_upper_;
};

}  // namespace detail

/// Two-phase bounded-variable simplex with Bland's anti-cycling rule.
/// Returns an optimal basic solution or Infeasible. Unboundedness cannot
/// occur because every variable carries finite bounds.
inline LpSolution solve(const LpProblem& p) {
    if (p.lower.size() != p.objective.size() || p.upper.size() != p.objective.size())
        throw std::invalid_argument("lp: bound vectors must match objective length");
    detail::BoundedSimplex s(p);
    return s.solve(p);
}

}  // namespace boostlab
