#pragma once

#include <algorithm>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boostlab/numerics.hpp"

namespace boostlab {

/// A weight vector over the columns (weak hypotheses) of a feature matrix.
using Combination = std::vector<double>;

/// The m x N matrix whose (i,j) entry is the signed prediction of column j
/// on example i: +1 correct, -1 wrong, values in between for confidence-rated
/// columns. This is the entire problem instance; margins are M*lambda.
class FeatureMatrix {
public:
    FeatureMatrix(int rows, int cols, std::vector<double> entries)
        : m_(rows), n_(cols), e_(std::move(entries)) {
        if (m_ < 1 || n_ < 1) throw std::invalid_argument("FeatureMatrix: need m >= 1 and N >= 1");
        if (e_.size() != static_cast<std::size_t>(m_) * n_)
            throw std::invalid_argument("FeatureMatrix: entry count does not match m*N");
        integral_ = true;
        for (double v : e_) {
            if (!(v >= -1.0 && v <= 1.0))
                throw std::invalid_argument("FeatureMatrix: entries must lie in [-1,+1]");
            if (v != -1.0 && v != 0.0 && v != 1.0) integral_ = false;
        }
    }

    static FeatureMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("FeatureMatrix: empty row set");
        const int n = static_cast<int>(rows.front().size());
        std::vector<double> flat;
        flat.reserve(rows.size() * n);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n)
                throw std::invalid_argument("FeatureMatrix: ragged rows");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return FeatureMatrix(static_cast<int>(rows.size()), n, std::move(flat));
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    bool integral() const { return integral_; }
    double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return e_; }

    std::vector<double> row(int i) const {
        return std::vector<double>(e_.begin() + static_cast<std::size_t>(i) * n_,
                                   e_.begin() + static_cast<std::size_t>(i + 1) * n_);
    }

private:
    int m_, n_;
    std::vector<double> e_;
    bool integral_;
};

/// Sorted, duplicate-free subset of example indices {0,...,m-1}.
struct ExampleSet {
    std::vector<int> indices;

    static ExampleSet of(std::vector<int> idx, int m) {
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        for (int i : idx)
            if (i < 0 || i >= m) throw std::invalid_argument("ExampleSet: index out of range");
        return ExampleSet{std::move(idx)};
    }

    static ExampleSet full(int m) {
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        return ExampleSet{std::move(idx)};
    }

    ExampleSet complement(int m) const {
        std::vector<int> idx;
        std::size_t k = 0;
        for (int i = 0; i < m; ++i) {
            if (k < indices.size() && indices[k] == i) { ++k; continue; }
            idx.push_back(i);
        }
        return ExampleSet{std::move(idx)};
    }

    bool contains(int i) const { return std::binary_search(indices.begin(), indices.end(), i); }
    int size() const { return static_cast<int>(indices.size()); }
    bool empty() const { return indices.empty(); }
};

/// Probability weights over examples; entries are non-negative and sum to 1.
struct ExampleDistribution {
    std::vector<double> probs;
};

namespace detail {
inline void require_dims(const FeatureMatrix& m, const Combination& lambda) {
    if (static_cast<int>(lambda.size()) != m.cols())
        throw std::invalid_argument("combination length does not match column count");
}
inline void require_set(const FeatureMatrix& m, const ExampleSet& s) {
    if (!s.indices.empty() && (s.indices.front() < 0 || s.indices.back() >= m.rows()))
        throw std::invalid_argument("example set index out of range");
}
}  // namespace detail

/// Margin vector M*lambda; component i is the signed confidence on example i.
inline std::vector<double> margins(const FeatureMatrix& m, const Combination& lambda) {
    detail::require_dims(m, lambda);
    std::vector<double> g(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i) {
        double s = 0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * lambda[j];
        g[i] = s;
    }
    return g;
}

/// ln of the normalized exponential loss, accumulated in the log domain so
/// that margins far beyond double range never overflow intermediates.
inline double log_exp_loss(const FeatureMatrix& m, const Combination& lambda) {
    const auto g = margins(m, lambda);
    double gmin = g[0];
    for (double v : g) {
        if (!std::isfinite(v)) throw std::overflow_error("log_exp_loss: non-finite margin");
        gmin = std::min(gmin, v);
    }
    double s = 0;
    for (double v : g) s += std::exp(-(v - gmin));
    return -gmin + std::log(s / m.rows());
}

/// Normalized loss (1/m) sum_i exp(-(M lambda)_i).
inline double exp_loss(const FeatureMatrix& m, const Combination& lambda) {
    const double v = std::exp(log_exp_loss(m, lambda));
    if (!std::isfinite(v)) throw std::overflow_error("exp_loss: loss exceeds double range");
    return v;
}

/// Unnormalized loss restricted to a set: sum_{i in S} exp(-(M lambda)_i).
inline double set_loss(const FeatureMatrix& m, const Combination& lambda, const ExampleSet& s) {
    detail::require_dims(m, lambda);
    detail::require_set(m, s);
    const auto g = margins(m, lambda);
    double sum = 0;
    for (int i : s.indices) sum += std::exp(-g[i]);
    return sum;
}

/// Loss-proportional example weights, exp(-(M lambda)_i) normalized. Margins
/// are shifted by their minimum before exponentiation; the result is invariant
/// under that shift and never overflows.
inline ExampleDistribution distribution(const FeatureMatrix& m, const Combination& lambda) {
    const auto g = margins(m, lambda);
    const double gmin = *std::min_element(g.begin(), g.end());
    std::vector<double> w(m.rows());
    double total = 0;
    for (int i = 0; i < m.rows(); ++i) {
        w[i] = std::exp(-(g[i] - gmin));
        total += w[i];
    }
    for (double& x : w) x /= total;
    return ExampleDistribution{std::move(w)};
}

/// Absolute correlation of column j under the loss weights restricted to S.
inline double edge(const FeatureMatrix& m, const Combination& lambda, int j, const ExampleSet& s) {
    detail::require_dims(m, lambda);
    detail::require_set(m, s);
    if (j < 0 || j >= m.cols()) throw std::invalid_argument("edge: column out of range");
    if (s.empty()) throw std::invalid_argument("edge: empty example set");
    const auto g = margins(m, lambda);
    double gmin = std::numeric_limits<double>::infinity();
    for (int i : s.indices) gmin = std::min(gmin, g[i]);
    double num = 0, den = 0;
    for (int i : s.indices) {
        const double w = std::exp(-(g[i] - gmin));
        num += w * m(i, j);
        den += w;
    }
    if (den <= 0) throw std::invalid_argument("edge: zero loss on set");
    return std::fabs(num / den);
}

struct BestEdge {
    int j;     // lowest-index maximizer
    double r;  // signed correlation; edge is |r|
};

/// argmax_j |sum_i D_i M_ij|, ties broken to the lowest column index.
inline BestEdge best_edge(const ExampleDistribution& d, const FeatureMatrix& m) {
    if (static_cast<int>(d.probs.size()) != m.rows())
        throw std::invalid_argument("best_edge: distribution size does not match row count");
    int best = 0;
    double best_r = 0, best_abs = -1;
    for (int j = 0; j < m.cols(); ++j) {
        double c = 0;
        for (int i = 0; i < m.rows(); ++i) c += d.probs[i] * m(i, j);
        if (std::fabs(c) > best_abs) {
            best_abs = std::fabs(c);
            best_r = c;
            best = j;
        }
    }
    return BestEdge{best, best_r};
}

// --- dataset text format ---------------------------------------------------
// line 1: "m N"; then m lines of N whitespace-separated entries in [-1,1].
// Lines starting with '#' are comments.

inline FeatureMatrix parse_dataset(std::istream& in) {
    std::vector<double> numbers;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        double v;
        while (ls >> v) numbers.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("dataset: malformed numeric field");
    }
    if (numbers.size() < 2) throw std::invalid_argument("dataset: missing header");
    const double md = numbers[0], nd = numbers[1];
    const int m = static_cast<int>(md), n = static_cast<int>(nd);
    if (md != m || nd != n || m < 1 || n < 1)
        throw std::invalid_argument("dataset: header must be two positive integers");
    if (numbers.size() != 2 + static_cast<std::size_t>(m) * n)
        throw std::invalid_argument("dataset: entry count does not match header");
    return FeatureMatrix(m, n, std::vector<double>(numbers.begin() + 2, numbers.end()));
}

inline std::string format_dataset(const FeatureMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += format_g17(m(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace boostlab
