#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace boostlab {

// Deterministic 64-bit generator (splitmix64). Used everywhere a seed
// appears so that identical configs reproduce bit-identical outputs on
// any platform, which std::uniform_* does not guarantee.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // uniform in [-1,1)
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

inline double l1_norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += std::fabs(x);
    return s;
}

inline double linf_norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s = std::max(s, std::fabs(x));
    return s;
}

inline double l2_norm(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline double factorial_as_double(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Shortest decimal with 17 significant digits; round-trips a double.
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct SymmetricEigen {
    int n = 0;
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major; column k is the k-th eigenvector
};

// Cyclic Jacobi for small dense symmetric matrices (row-major input).
// Sweeps until the off-diagonal Frobenius norm drops below 1e-12 times
// the matrix scale.
inline SymmetricEigen jacobi_eigen_symmetric(std::vector<double> a, int n) {
    if (n == 0) return {0, {}, {}};
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<std::size_t>(i) * n + j];
    };

    double scale = 0;
    for (double x : a) scale += x * x;
    scale = std::sqrt(scale);
    const double stop = 1e-12 * std::max(scale, 1e-300);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2 * at(a, p, q) * at(a, p, q);
        if (std::sqrt(off) <= stop) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(a, p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                const double theta = (at(a, q, q) - at(a, p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(a, k, p), akq = at(a, k, q);
                    at(a, k, p) = c * akp - s * akq;
                    at(a, k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(a, p, k), aqk = at(a, q, k);
                    at(a, p, k) = c * apk - s * aqk;
                    at(a, q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = at(v, k, p), vkq = at(v, k, q);
                    at(v, k, p) = c * vkp - s * vkq;
                    at(v, k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    SymmetricEigen out;
    out.n = n;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a[static_cast<std::size_t>(i) * n + i];
    // sort ascending, permuting columns of v alongside
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (out.values[order[j]] < out.values[order[i]]) std::swap(order[i], order[j]);
    std::vector<double> values(n);
    std::vector<double> vectors(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        values[k] = out.values[order[k]];
        for (int i = 0; i < n; ++i)
            vectors[static_cast<std::size_t>(i) * n + k] = v[static_cast<std::size_t>(i) * n + order[k]];
    }
    out.values = std::move(values);
    out.vectors = std::move(vectors);
    return out;
}

// Solves A x = b for symmetric positive definite A (row-major), in place
// Cholesky with a ridge retry for near-singular systems.
inline std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    double trace = 0;
    for (int i = 0; i < n; ++i) trace += at(i, i);
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<double> l = a;
        auto lat = [&](int i, int j) -> double& { return l[static_cast<std::size_t>(i) * n + j]; };
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            for (int j = 0; j <= i; ++j) {
                double s = lat(i, j);
                for (int k = 0; k < j; ++k) s -= lat(i, k) * lat(j, k);
                if (i == j) {
                    if (s <= 0) { ok = false; break; }
                    lat(i, i) = std::sqrt(s);
                } else {
                    lat(i, j) = s / lat(j, j);
                }
            }
        }
        if (ok) {
            std::vector<double> y(n), x(n);
            for (int i = 0; i < n; ++i) {
                double s = b[i];
                for (int k = 0; k < i; ++k) s -= lat(i, k) * y[k];
                y[i] = s / lat(i, i);
            }
            for (int i = n - 1; i >= 0; --i) {
                double s = y[i];
                for (int k = i + 1; k < n; ++k) s -= lat(k, i) * x[k];
                x[i] = s / lat(i, i);
            }
            return x;
        }
        const double ridge = std::max(trace, 1.0) * std::pow(10.0, attempt - 12);
        for (int i = 0; i < n; ++i) at(i, i) += ridge;
    }
    throw std::runtime_error("solve_spd: matrix not positive definite");
}

// Golden-section minimizer for a convex f on [a,b]; shrinks the bracket
// to the requested width and returns its midpoint.
inline double golden_section_min(const std::function<double(double)>& f, double a, double b,
                                 double tol = 1e-12) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace boostlab
