#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "boostlab/datasets.hpp"
#include "boostlab/matrix.hpp"

using namespace boostlab;

namespace {
const FeatureMatrix& three() {
    static const FeatureMatrix m = gen_three_example().matrix;
    return m;
}
}  // namespace

TEST_CASE("FeatureMatrix validates entries and flags integrality") {
    CHECK(three().integral());
    CHECK(three().rows() == 3);
    CHECK(three().cols() == 2);
    CHECK_FALSE(gen_nonintegral(0.25).matrix.integral());
    CHECK_THROWS_AS(FeatureMatrix(1, 1, {1.5}), std::invalid_argument);
    CHECK_THROWS_AS(FeatureMatrix(0, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(FeatureMatrix(2, 1, {1.0}), std::invalid_argument);
    // exact test: 0.5 is in range but not in {-1,0,+1}
    CHECK_FALSE(FeatureMatrix(1, 2, {0.5, 1.0}).integral());
}

TEST_CASE("margins") {
    CHECK(margins(three(), {0.0, 0.0}) == std::vector<double>{0, 0, 0});
    const auto g = margins(three(), {1.0, 1.0});
    CHECK(g[0] == 0.0);
    CHECK(g[1] == 0.0);
    CHECK(g[2] == 2.0);
    CHECK_THROWS_AS(margins(three(), {1.0}), std::invalid_argument);

    // last triangular row sees only the last coordinate
    const auto tri = gen_triangular(6).matrix;
    SplitMix64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        Combination lam(5);
        for (double& x : lam) x = 4 * rng.next_symmetric();
        CHECK(margins(tri, lam)[5] == Catch::Approx(lam[4]).margin(1e-12));
    }
}

TEST_CASE("exp_loss") {
    CHECK(exp_loss(three(), {0.0, 0.0}) == 1.0);
    CHECK(exp_loss(three(), {1.0, 1.0}) ==
          Catch::Approx((2.0 + std::exp(-2.0)) / 3.0).margin(1e-15));
    const double ln10 = std::log(10.0);
    const auto tri5 = gen_triangular(5).matrix;
    CHECK(exp_loss(tri5, {7 * ln10, 4 * ln10, 2 * ln10, ln10}) ==
          Catch::Approx(0.46).margin(1e-12));
    CHECK_THROWS_AS(exp_loss(three(), {1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("exp_loss stays stable for huge margins") {
    // margins (0, 0, 1e4): representable loss, log must match the closed form
    const Combination big{5000.0, 5000.0};
    const double loss = exp_loss(three(), big);
    CHECK(std::isfinite(loss));
    CHECK(std::log(loss) == Catch::Approx(std::log(2.0 / 3.0)).margin(1e-9));
    CHECK(log_exp_loss(three(), big) == Catch::Approx(std::log(2.0 / 3.0)).margin(1e-9));

    // margins (-500, 500, 0): loss ~ e^500/3, still finite
    const Combination skew{-250.0, 250.0};
    CHECK(log_exp_loss(three(), skew) ==
          Catch::Approx(500.0 - std::log(3.0)).margin(1e-9));
    CHECK(std::isfinite(exp_loss(three(), skew)));

    // margins (-800, 800, 0): the value itself exceeds double range
    const Combination huge{-400.0, 400.0};
    CHECK(log_exp_loss(three(), huge) == Catch::Approx(800.0 - std::log(3.0)).margin(1e-9));
    CHECK_THROWS_AS(exp_loss(three(), huge), std::overflow_error);
}

TEST_CASE("set_loss") {
    const auto X = ExampleSet::full(3);
    CHECK(set_loss(three(), {1.0, 1.0}, ExampleSet::of({}, 3)) == 0.0);
    CHECK(set_loss(three(), {0.0, 0.0}, ExampleSet::of({0, 1}, 3)) == 2.0);
    CHECK(set_loss(three(), {1.0, 1.0}, ExampleSet::of({2}, 3)) ==
          Catch::Approx(std::exp(-2.0)).margin(1e-15));
    SplitMix64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        Combination lam{3 * rng.next_symmetric(), 3 * rng.next_symmetric()};
        const double full = set_loss(three(), lam, X);
        CHECK(full == Catch::Approx(3.0 * exp_loss(three(), lam)).epsilon(1e-12));
    }
}

TEST_CASE("distribution") {
    const auto u = distribution(three(), {0.0, 0.0});
    for (double p : u.probs) CHECK(p == Catch::Approx(1.0 / 3).margin(1e-15));

    // one step on column 2 with alpha = (1/2) ln 2
    const auto d = distribution(three(), {0.0, 0.5 * std::log(2.0)});
    CHECK(d.probs[0] == Catch::Approx(0.5).margin(1e-12));
    CHECK(d.probs[1] == Catch::Approx(0.25).margin(1e-12));
    CHECK(d.probs[2] == Catch::Approx(0.25).margin(1e-12));

    const auto e = distribution(three(), {1.0, 1.0});
    const double z = 2.0 + std::exp(-2.0);
    CHECK(e.probs[0] == Catch::Approx(1.0 / z).margin(1e-12));
    CHECK(e.probs[2] == Catch::Approx(std::exp(-2.0) / z).margin(1e-12));

    SplitMix64 rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        Combination lam{9000 * rng.next_symmetric(), 9000 * rng.next_symmetric()};
        const auto p = distribution(three(), lam);
        double sum = 0;
        for (double v : p.probs) sum += v;
        CHECK(sum == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("distribution ignores null-space directions") {
    // duplicated column: u = (1,-1) never changes the margins
    const auto m = FeatureMatrix::from_rows({{1, 1}, {-1, -1}, {1, 1}, {0, 0}});
    SplitMix64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        Combination lam{2 * rng.next_symmetric(), 2 * rng.next_symmetric()};
        const double c = 10 * rng.next_symmetric();
        Combination shifted{lam[0] + c, lam[1] - c};
        const auto a = distribution(m, lam), b = distribution(m, shifted);
        for (int i = 0; i < 4; ++i) CHECK(a.probs[i] == Catch::Approx(b.probs[i]).margin(1e-10));
    }
}

TEST_CASE("edge") {
    const auto X = ExampleSet::full(3);
    CHECK(edge(three(), {0.0, 0.0}, 0, X) == Catch::Approx(1.0 / 3).margin(1e-15));
    // weights (1/2, 1/4, 1/4) on column 1 (0-based 0)
    CHECK(edge(three(), {0.0, 0.5 * std::log(2.0)}, 0, X) == Catch::Approx(0.5).margin(1e-12));
    const auto with_zero_col = FeatureMatrix::from_rows({{1, 0}, {-1, 0}});
    CHECK(edge(with_zero_col, {0.3, 0.7}, 1, ExampleSet::full(2)) == 0.0);
    CHECK_THROWS_AS(edge(three(), {0.0, 0.0}, 0, ExampleSet::of({}, 3)), std::invalid_argument);
    CHECK_THROWS_AS(edge(three(), {0.0, 0.0}, 5, X), std::invalid_argument);

    // edge over the full set equals the distribution correlation
    SplitMix64 rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        Combination lam{2 * rng.next_symmetric(), 2 * rng.next_symmetric()};
        const auto d = distribution(three(), lam);
        for (int j = 0; j < 2; ++j) {
            double c = 0;
            for (int i = 0; i < 3; ++i) c += d.probs[i] * three()(i, j);
            CHECK(edge(three(), lam, j, X) == Catch::Approx(std::fabs(c)).margin(1e-12));
        }
    }
}

TEST_CASE("best_edge") {
    const auto u = distribution(three(), {0.0, 0.0});
    const auto b1 = best_edge(u, three());
    CHECK(b1.j == 0);  // tie between the columns breaks to the lowest index
    CHECK(b1.r == Catch::Approx(1.0 / 3).margin(1e-15));

    const auto d = distribution(three(), {0.0, 0.5 * std::log(2.0)});
    const auto b2 = best_edge(d, three());
    CHECK(b2.j == 0);
    CHECK(b2.r == Catch::Approx(0.5).margin(1e-12));

    const auto single = FeatureMatrix::from_rows({{1.0}});
    const auto b3 = best_edge(distribution(single, {0.0}), single);
    CHECK(b3.j == 0);
    CHECK(b3.r == 1.0);

    // brute-force rescan agrees on random instances
    SplitMix64 rng(15);
    for (int rep = 0; rep < 25; ++rep) {
        const auto inst = gen_random(5, 4, Alphabet::Continuous, 100 + rep);
        Combination lam(4);
        for (double& x : lam) x = rng.next_symmetric();
        const auto dist = distribution(inst.matrix, lam);
        const auto got = best_edge(dist, inst.matrix);
        double best_abs = -1;
        int best_j = -1;
        for (int j = 0; j < 4; ++j) {
            double c = 0;
            for (int i = 0; i < 5; ++i) c += dist.probs[i] * inst.matrix(i, j);
            if (std::fabs(c) > best_abs) {
                best_abs = std::fabs(c);
                best_j = j;
            }
        }
        CHECK(got.j == best_j);
        CHECK(std::fabs(got.r) == Catch::Approx(best_abs).margin(1e-15));
    }
}

TEST_CASE("dataset text format round-trips") {
    const auto tri = gen_triangular(5).matrix;
    std::istringstream in(format_dataset(tri));
    const auto back = parse_dataset(in);
    CHECK(back.rows() == tri.rows());
    CHECK(back.cols() == tri.cols());
    CHECK(back.data() == tri.data());

    std::istringstream commented("# instance\n2 2\n# row a\n1 -1\n0.5 0.25\n");
    const auto m = parse_dataset(commented);
    CHECK(m.rows() == 2);
    CHECK(m(1, 0) == 0.5);
    CHECK_FALSE(m.integral());

    std::istringstream bad_header("x 2\n1 1\n");
    CHECK_THROWS_AS(parse_dataset(bad_header), std::invalid_argument);
    std::istringstream missing("2 2\n1 1\n1\n");
    CHECK_THROWS_AS(parse_dataset(missing), std::invalid_argument);
    std::istringstream range("1 1\n7\n");
    CHECK_THROWS_AS(parse_dataset(range), std::invalid_argument);
}
