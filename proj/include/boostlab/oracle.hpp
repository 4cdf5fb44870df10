#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "boostlab/lp.hpp"
#include "boostlab/matrix.hpp"
#include "boostlab/numerics.hpp"

namespace boostlab {

/// Axis-aligned search grid with multi-level refinement around the incumbent.
/// Capped at 3 coordinates: these oracles exist to validate claims on the
/// fully-analyzed small instances, and an honest refusal beats a silently
/// coarse answer in higher dimension.
struct GridSpec {
    std::vector<std::array<double, 2>> ranges;  // per-coordinate [lo, hi]
    int resolution = 33;                        // points per axis
    int levels = 3;

    void validate() const {
        if (ranges.empty() || ranges.size() > 3)
            throw std::invalid_argument("GridSpec: 1 to 3 coordinates supported");
        if (resolution < 3) throw std::invalid_argument("GridSpec: resolution must be >= 3");
        if (levels < 1) throw std::invalid_argument("GridSpec: need at least one level");
        for (auto [lo, hi] : ranges)
            if (!(lo < hi)) throw std::invalid_argument("GridSpec: need lo < hi");
    }

    static GridSpec cube(int dims, double lo, double hi, int resolution = 33, int levels = 3) {
        GridSpec g;
        g.ranges.assign(dims, {lo, hi});
        g.resolution = resolution;
        g.levels = levels;
        return g;
    }
};

namespace detail {

inline void check_oracle_dims(const FeatureMatrix& m, const GridSpec& grid) {
    grid.validate();
    if (m.cols() > 3) throw std::invalid_argument("grid oracle: refused for N > 3");
    if (static_cast<int>(grid.ranges.size()) != m.cols())
        throw std::invalid_argument("grid oracle: grid dimension must equal N");
}

// Sweeps every point of every refinement level. visit(point, half_cell_l1)
// is called per point; refine_center() supplies the zoom target after each
// level (return false to stop refining).
template <typename Visit, typename Center>
inline double grid_sweep(const GridSpec& grid, Visit&& visit, Center&& refine_center) {
    const int n = static_cast<int>(grid.ranges.size());
    auto ranges = grid.ranges;
    double half_cell = 0;
    for (int level = 0; level < grid.levels; ++level) {
        std::vector<double> step(n);
        half_cell = 0;
        for (int k = 0; k < n; ++k) {
            step[k] = (ranges[k][1] - ranges[k][0]) / (grid.resolution - 1);
            half_cell += step[k] / 2;
        }
        std::vector<int> idx(n, 0);
        std::vector<double> pt(n);
        while (true) {
            for (int k = 0; k < n; ++k) pt[k] = ranges[k][0] + idx[k] * step[k];
            visit(pt, half_cell);
            int k = 0;
            while (k < n && ++idx[k] == grid.resolution) idx[k++] = 0;
            if (k == n) break;
        }
        if (level + 1 == grid.levels) break;
        std::vector<double> center(n);
        if (!refine_center(center)) break;
        for (int k = 0; k < n; ++k) {
            const double w = 2 * step[k];
            const double lo = std::max(grid.ranges[k][0], center[k] - w);
            const double hi = std::min(grid.ranges[k][1], center[k] + w);
            ranges[k] = {lo, hi};
        }
    }
    return half_cell;
}

}  // namespace detail

struct MinLossResult {
    double value = std::numeric_limits<double>::infinity();
    Combination argmin;
    double error_bound = 0;  // Lipschitz slack: the loss is 1-Lipschitz in l1
                             // on its unit sublevel set, so the true infimum
                             // over the box is >= value - error_bound
};

/// Grid approximation of inf_lambda L(lambda) over the given box.
inline MinLossResult brute_min_loss(const FeatureMatrix& m, const GridSpec& grid) {
    detail::check_oracle_dims(m, grid);
    MinLossResult best;
    detail::grid_sweep(
        grid,
        [&](const std::vector<double>& pt, double half_cell) {
            const double l = exp_loss(m, pt);
            if (l < best.value) {
                best.value = l;
                best.argmin = pt;
                best.error_bound = half_cell;
            }
        },
        [&](std::vector<double>& center) {
            if (best.argmin.empty()) return false;
            center = best.argmin;
            return true;
        });
    return best;
}

struct MinNormResult {
    bool found = false;
    double norm = std::numeric_limits<double>::infinity();
    Combination argmin;
    double error_bound = 0;
};

/// Minimum l1-norm over grid points whose loss meets the target. Feasibility
/// is strict, so the reported norm never undercuts the true infimum; the
/// error bound covers how far above it the grid answer may sit.
inline MinNormResult brute_min_norm(const FeatureMatrix& m, double target_loss,
                                    const GridSpec& grid) {
    detail::check_oracle_dims(m, grid);
    MinNormResult best;
    detail::grid_sweep(
        grid,
        [&](const std::vector<double>& pt, double half_cell) {
            if (exp_loss(m, pt) > target_loss) return;
            const double n1 = l1_norm(pt);
            if (n1 < best.norm) {
                best.found = true;
                best.norm = n1;
                best.argmin = pt;
                best.error_bound = 2 * half_cell;
            }
        },
        [&](std::vector<double>& center) {
            if (!best.found) return false;
            center = best.argmin;
            return true;
        });
    return best;
}

struct DistanceResult {
    bool found = false;
    double distance = std::numeric_limits<double>::infinity();
    double error_bound = 0;
    Combination closest;
};

/// Minimum l1 distance from the anchor to the target-loss sublevel set,
/// over strictly feasible grid points. An anchor already at the target
/// returns distance 0 exactly.
inline DistanceResult brute_distance(const FeatureMatrix& m, const Combination& anchor,
                                     double target_loss, const GridSpec& grid) {
    detail::check_oracle_dims(m, grid);
    DistanceResult best;
    if (exp_loss(m, anchor) <= target_loss) {
        best.found = true;
        best.distance = 0;
        best.closest = anchor;
        return best;
    }
    detail::grid_sweep(
        grid,
        [&](const std::vector<double>& pt, double half_cell) {
            if (exp_loss(m, pt) > target_loss) return;
            double d = 0;
            for (std::size_t k = 0; k < pt.size(); ++k) d += std::fabs(pt[k] - anchor[k]);
            if (d < best.distance) {
                best.found = true;
                best.distance = d;
                best.error_bound = 2 * half_cell;
                best.closest = pt;
            }
        },
        [&](std::vector<double>& center) {
            if (!best.found) return false;
            center = best.closest;
            return true;
        });
    return best;
}

struct VertexEnumResult {
    LpStatus status = LpStatus::Infeasible;
    double value = 0;
};

/// Exact LP oracle: enumerates candidate basic points as intersections of n
/// active hyperplanes drawn from constraints-as-equalities and bound faces,
/// keeps the feasible ones, and maximizes. For cross-checking lp::solve only.
inline VertexEnumResult vertex_enumerate_lp(const LpProblem& p) {
    const int n = static_cast<int>(p.objective.size());
    if (n > 8) throw std::invalid_argument("vertex_enumerate_lp: refused above 8 variables");
    std::vector<std::vector<double>> planes;
    std::vector<double> rhs;
    for (const auto& c : p.constraints) {
        planes.push_back(c.coeffs);
        rhs.push_back(c.rhs);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        planes.push_back(e);
        rhs.push_back(p.lower[j]);
        planes.push_back(e);
        rhs.push_back(p.upper[j]);
    }
    const int total = static_cast<int>(planes.size());
    VertexEnumResult best;

    std::vector<int> comb(n);
    std::vector<double> a(static_cast<std::size_t>(n) * n), b(n), x(n);
    auto try_comb = [&]() {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = planes[comb[i]][j];
            b[i] = rhs[comb[i]];
        }
        // Gaussian elimination with partial pivoting
        std::vector<double> w = a, y = b;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::fabs(w[static_cast<std::size_t>(r) * n + col]) >
                    std::fabs(w[static_cast<std::size_t>(piv) * n + col]))
                    piv = r;
            if (std::fabs(w[static_cast<std::size_t>(piv) * n + col]) < 1e-10) return;  // singular
            if (piv != col) {
                for (int j = 0; j < n; ++j)
                    std::swap(w[static_cast<std::size_t>(piv) * n + j],
                              w[static_cast<std::size_t>(col) * n + j]);
                std::swap(y[piv], y[col]);
            }
            const double inv = 1.0 / w[static_cast<std::size_t>(col) * n + col];
            for (int r = col + 1; r < n; ++r) {
                const double f = w[static_cast<std::size_t>(r) * n + col] * inv;
                if (f == 0.0) continue;
                for (int j = col; j < n; ++j)
                    w[static_cast<std::size_t>(r) * n + j] -= f * w[static_cast<std::size_t>(col) * n + j];
                y[r] -= f * y[col];
            }
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int j = i + 1; j < n; ++j) s -= w[static_cast<std::size_t>(i) * n + j] * x[j];
            x[i] = s / w[static_cast<std::size_t>(i) * n + i];
        }
        if (!lp_feasible(p, x, 1e-7, 1e-7)) return;
        double val = 0;
        for (int j = 0; j < n; ++j) val += p.objective[j] * x[j];
        if (best.status == LpStatus::Infeasible || val > best.value) {
            best.status = LpStatus::Optimal;
            best.value = val;
        }
    };

    // iterate over all n-subsets of the planes
    for (int i = 0; i < n; ++i) comb[i] = i;
    if (total < n) return best;
    while (true) {
        try_comb();
        int k = n - 1;
        while (k >= 0 && comb[k] == total - n + k) --k;
        if (k < 0) break;
        ++comb[k];
        for (int j = k + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
    }
    return best;
}

}  // namespace boostlab
