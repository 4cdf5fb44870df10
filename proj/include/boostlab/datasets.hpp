#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boostlab/matrix.hpp"
#include "boostlab/numerics.hpp"

namespace boostlab {

/// Analytic facts attached to a generated instance. Tests re-derive these
/// from the closed forms below instead of trusting the stored numbers.
struct ExpectedFacts {
    std::optional<double> optimal_loss;                       // normalized infimum
    std::optional<std::vector<int>> zero_loss_set;
    std::optional<std::pair<int, int>> complementary_rows;
    std::vector<std::pair<std::string, std::string>> notes;   // formula name -> description
};

struct NamedInstance {
    std::string name;
    FeatureMatrix matrix;
    std::vector<std::string> row_labels;  // empty -> numeric labels
    ExpectedFacts expected;
};

// --- closed forms attached to the generated families -----------------------

/// Loss of the 3-example instance after T rounds: (2/3) sqrt(1 + 1/T).
inline double three_example_loss_after(int t) {
    return (2.0 / 3.0) * std::sqrt(1.0 + 1.0 / t);
}

/// Round floor for reaching loss 2/3 + eps on the 3-example instance.
inline double three_example_round_floor(double eps) { return 2.0 / (9.0 * eps); }

/// Combination ln(1/eps) * (2^{m-2}-1, 2^{m-3}, ..., 1) achieving loss
/// (2 + (m-2) eps) / m on the triangular instance.
inline Combination triangular_achiever(int m, double eps) {
    Combination lambda(m - 1);
    lambda[0] = std::pow(2.0, m - 2) - 1.0;
    for (int k = 1; k < m - 1; ++k) lambda[k] = std::pow(2.0, m - 2 - k);
    const double c = std::log(1.0 / eps);
    for (double& x : lambda) x *= c;
    return lambda;
}

inline double triangular_achieved_loss(int m, double eps) { return (2.0 + (m - 2) * eps) / m; }

/// l1-norm floor for loss <= 2/m + eps on the triangular instance.
inline double triangular_norm_floor(int m, double eps) {
    return (std::pow(2.0, m - 2) - 1.0) * std::log(1.0 / (3.0 * eps));
}

inline double triangular_round_floor(int m, double eps) {
    return triangular_norm_floor(m, eps) / (2.0 * std::log(static_cast<double>(m)));
}

/// Combination (c,c) with c = ln(1/(2 eps))/nu achieving loss 1/2 + eps on
/// the non-integral instance.
inline Combination nonintegral_achiever(double nu, double eps) {
    const double c = std::log(1.0 / (2.0 * eps)) / nu;
    return Combination{c, c};
}

inline double nonintegral_norm_floor(double nu, double eps) {
    return 2.0 * std::log(1.0 / (2.0 * eps)) / nu;
}

inline double nonintegral_round_floor(double nu, double eps) {
    return std::log(1.0 / (2.0 * eps)) / nu / std::log(4.0);
}

/// y with M y = (1,...,1) for the integral triangular instance: (2^{m-1},...,2,1).
inline Combination mint_triangular_solution(int m) {
    Combination y(m);
    for (int k = 0; k < m; ++k) y[k] = std::pow(2.0, m - 1 - k);
    return y;
}

/// Left null vector y > 0 with y^T M = 0 for the mint-mumax instance:
/// (2^{m-2}, ..., 2, 1, 1).
inline std::vector<double> mint_mumax_left_null(int m) {
    std::vector<double> y(m);
    for (int k = 0; k + 1 < m; ++k) y[k] = std::pow(2.0, m - 2 - k);
    y[m - 1] = 1.0;
    return y;
}

/// Probe x = (1, 2, 4, ..., 2^{m-2}) whose margins on the mint-mumax instance
/// are (-1, ..., -1, 2^{m-1}-1).
inline Combination mint_mumax_probe(int m) {
    Combination x(m - 1);
    for (int k = 0; k < m - 1; ++k) x[k] = std::pow(2.0, k);
    return x;
}

// --- generators -------------------------------------------------------------

/// Rows a,b,c = (+1,-1), (-1,+1), (+1,+1). Optimal loss 2/3, approached but
/// never attained; the round-t edge is exactly 1/t for t >= 2.
inline NamedInstance gen_three_example() {
    NamedInstance inst{
        "three-example",
        FeatureMatrix::from_rows({{+1, -1}, {-1, +1}, {+1, +1}}),
        {"a", "b", "c"},
        {}};
    inst.expected.optimal_loss = 2.0 / 3.0;
    inst.expected.zero_loss_set = std::vector<int>{2};
    inst.expected.complementary_rows = std::make_pair(0, 1);
    inst.expected.notes = {
        {"loss_after_T", "(2/3)*sqrt(1+1/T)"},
        {"edge_at_round_t", "1/t for t >= 2"},
        {"round_floor", "2/(9*eps) to reach 2/3 + eps"},
    };
    return inst;
}

/// m rows, m-1 columns. Rows 1..m-1 form an upper triangular block with +1
/// on the diagonal, -1 above, 0 below; row 0 is the complement of row 1.
/// Driving the loss to 2/m + eps requires l1-norm (2^{m-2}-1) ln(1/(3 eps)).
inline NamedInstance gen_triangular(int m) {
    if (m < 3) throw std::invalid_argument("gen_triangular: need m >= 3");
    std::vector<std::vector<double>> rows(m, std::vector<double>(m - 1, 0.0));
    for (int i = 1; i < m; ++i) {
        for (int c = 0; c < m - 1; ++c) {
            const int j = c + 1;  // columns are labeled 1..m-1
            if (j == i) rows[i][c] = +1;
            else if (j > i) rows[i][c] = -1;
        }
    }
    for (int c = 0; c < m - 1; ++c) rows[0][c] = -rows[1][c];
    NamedInstance inst{"triangular:" + std::to_string(m), FeatureMatrix::from_rows(rows), {}, {}};
    inst.expected.optimal_loss = 2.0 / m;
    inst.expected.complementary_rows = std::make_pair(0, 1);
    inst.expected.notes = {
        {"achievable_loss", "(2+(m-2)*eps)/m via ln(1/eps)*(2^{m-2}-1,2^{m-3},...,1)"},
        {"norm_floor", "(2^{m-2}-1)*ln(1/(3*eps)) for loss <= 2/m + eps"},
        {"round_floor", "norm_floor / (2 ln m)"},
        {"margin_recursion", "(M l)_i = l_i - (l_{i+1}+...+l_{m-1}), (M l)_{m-1} = l_{m-1}"},
    };
    return inst;
}

/// 4 examples, 2 confidence-rated columns; rows (-1,+1), (+1,-1), (-1+nu,+1),
/// (+1,-1+nu). Loss 1/2 + eps needs l1-norm 2 ln(1/(2 eps))/nu, so the rate
/// degrades without bound as nu -> 0.
inline NamedInstance gen_nonintegral(double nu) {
    if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("gen_nonintegral: need 0 < nu < 1");
    char nu_short[32];
    std::snprintf(nu_short, sizeof(nu_short), "%g", nu);
    NamedInstance inst{
        std::string("nonintegral:") + nu_short,
        FeatureMatrix::from_rows({{-1, +1}, {+1, -1}, {-1 + nu, +1}, {+1, -1 + nu}}),
        {},
        {}};
    inst.expected.optimal_loss = 0.5;
    inst.expected.complementary_rows = std::make_pair(0, 1);
    inst.expected.notes = {
        {"achievable_loss", "1/2+eps via (c,c), c = ln(1/(2 eps))/nu"},
        {"norm_floor", "2*ln(1/(2*eps))/nu"},
        {"round_floor", "ln(1/(2*eps))/(nu ln m)"},
    };
    return inst;
}

/// m x m upper triangular with +1 diagonal and -1 above: the solution of
/// M y = (1,...,1) is y = (2^{m-1},...,2,1), so the certificate scale blows
/// up like 2^m while the data stays ternary.
inline NamedInstance gen_mint_triangular(int m) {
    if (m < 3) throw std::invalid_argument("gen_mint_triangular: need m >= 3");
    std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
        rows[i][i] = +1;
        for (int j = i + 1; j < m; ++j) rows[i][j] = -1;
    }
    NamedInstance inst{"mint-triangular:" + std::to_string(m), FeatureMatrix::from_rows(rows), {}, {}};
    inst.expected.zero_loss_set = [m] {
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        return all;
    }();
    inst.expected.notes = {{"solution", "M*(2^{m-1},...,2,1) = ones"}};
    return inst;
}

/// m x (m-1): all-+1 bottom row above a lower triangular block with -1
/// diagonal and +1 below. y = (2^{m-2},...,1,1) satisfies y^T M = 0, so no
/// example can be driven to zero loss, yet bounded-loss combinations reach
/// margins of order 2^m/m.
inline NamedInstance gen_mint_mumax(int m) {
    if (m < 3) throw std::invalid_argument("gen_mint_mumax: need m >= 3");
    std::vector<std::vector<double>> rows(m, std::vector<double>(m - 1, 0.0));
    for (int i = 0; i < m - 1; ++i) {
        rows[i][i] = -1;
        for (int j = 0; j < i; ++j) rows[i][j] = +1;
    }
    for (int j = 0; j < m - 1; ++j) rows[m - 1][j] = +1;
    NamedInstance inst{"mint-mumax:" + std::to_string(m), FeatureMatrix::from_rows(rows), {}, {}};
    inst.expected.zero_loss_set = std::vector<int>{};
    inst.expected.notes = {
        {"left_null", "(2^{m-2},...,1,1)^T M = 0"},
        {"probe", "x=(1,2,...,2^{m-2}) has margins (-1,...,-1,2^{m-1}-1)"},
    };
    return inst;
}

/// First lexicographic pair of +-1-valued rows summing to zero, if any.
inline std::optional<std::pair<int, int>> has_complementary_rows(const FeatureMatrix& m) {
    auto pm1 = [&](int i) {
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 1.0 && m(i, j) != -1.0) return false;
        return true;
    };
    for (int i = 0; i < m.rows(); ++i) {
        if (!pm1(i)) continue;
        for (int k = i + 1; k < m.rows(); ++k) {
            if (!pm1(k)) continue;
            bool comp = true;
            for (int j = 0; j < m.cols(); ++j)
                if (m(i, j) + m(k, j) != 0.0) { comp = false; break; }
            if (comp) return std::make_pair(i, k);
        }
    }
    return std::nullopt;
}

enum class Alphabet { Ternary, Continuous };

/// Seeded pseudo-random matrix; ternary draws from {-1,0,+1}, continuous
/// from [-1,1]. Same seed, same matrix, on every platform.
inline NamedInstance gen_random(int m, int n, Alphabet alphabet, std::uint64_t seed) {
    if (m < 1 || n < 1) throw std::invalid_argument("gen_random: need m,N >= 1");
    SplitMix64 rng(seed);
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m * n; ++i) {
        if (alphabet == Alphabet::Ternary)
            entries.push_back(static_cast<double>(rng.next_below(3)) - 1.0);
        else
            entries.push_back(rng.next_symmetric());
    }
    const char* kind = alphabet == Alphabet::Ternary ? "ternary" : "continuous";
    return NamedInstance{
        "random:" + std::to_string(m) + "x" + std::to_string(n) + ":" + kind + ":" + std::to_string(seed),
        FeatureMatrix(m, n, std::move(entries)),
        {},
        {}};
}

}  // namespace boostlab
