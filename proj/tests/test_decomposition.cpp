#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "boostlab/datasets.hpp"
#include "boostlab/decomposition.hpp"

using namespace boostlab;

namespace {
const FeatureMatrix& three() {
    static const FeatureMatrix m = gen_three_example().matrix;
    return m;
}
double mu32() { return std::log(3.0) * std::pow(2.0, 1.5) * 2.0; }
}  // namespace

TEST_CASE("zero_loss_set on the analyzed instances") {
    const auto s3 = zero_loss_set(three());
    CHECK(s3.Z.indices == std::vector<int>{2});
    CHECK(s3.F.indices == std::vector<int>{0, 1});
    const auto wit3 = margins(three(), s3.witness);
    CHECK(wit3[2] >= 1e-7);
    CHECK(wit3[0] >= -1e-8);
    CHECK(wit3[1] >= -1e-8);

    const auto mumax = gen_mint_mumax(5).matrix;
    CHECK(zero_loss_set(mumax).Z.empty());

    const auto tri = gen_triangular(5).matrix;
    const auto s5 = zero_loss_set(tri);
    CHECK(s5.Z.indices == std::vector<int>{2, 3, 4});
    CHECK(s5.F.indices == std::vector<int>{0, 1});

    // every example separable: Z is everything
    const auto mtri = gen_mint_triangular(4).matrix;
    CHECK(zero_loss_set(mtri).Z.indices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("gamma_certificate") {
    const auto s3 = zero_loss_set(three());
    const auto cert = gamma_certificate(three(), s3.Z, s3.F);
    REQUIRE(cert.has_value());
    CHECK(cert->gamma == Catch::Approx(1.0).margin(1e-9));
    CHECK(cert->eta_dagger[0] == Catch::Approx(0.5).margin(1e-9));
    CHECK(cert->eta_dagger[1] == Catch::Approx(0.5).margin(1e-9));

    CHECK_FALSE(gamma_certificate(three(), ExampleSet::of({}, 3), ExampleSet::full(3)).has_value());

    const auto unit = FeatureMatrix::from_rows({{1.0}});
    const auto cu = gamma_certificate(unit, ExampleSet::full(1), ExampleSet::of({}, 1));
    REQUIRE(cu.has_value());
    CHECK(cu->gamma == Catch::Approx(1.0).margin(1e-9));
    CHECK(cu->eta_dagger[0] == Catch::Approx(1.0).margin(1e-9));

    // triangular m=5 certificate: gamma = 1/14 with eta = (1/2, 2/7, 1/7, 1/14)
    const auto tri = gen_triangular(5).matrix;
    const auto s5 = zero_loss_set(tri);
    const auto c5 = gamma_certificate(tri, s5.Z, s5.F);
    REQUIRE(c5.has_value());
    CHECK(c5->gamma == Catch::Approx(1.0 / 14.0).margin(1e-9));
}

TEST_CASE("finite_optimum") {
    const auto F3 = ExampleSet::of({0, 1}, 3);
    const auto fo = finite_optimum(three(), F3);
    CHECK(fo.eta_star[0] == Catch::Approx(0.0).margin(1e-9));
    CHECK(fo.eta_star[1] == Catch::Approx(0.0).margin(1e-9));
    CHECK(fo.K_F == Catch::Approx(2.0).margin(1e-10));

    const auto fe = finite_optimum(three(), ExampleSet::of({}, 3));
    CHECK(fe.K_F == 0.0);
    CHECK(l1_norm(fe.eta_star) == 0.0);

    // an opposed pair pins the optimum margins at zero, at any entry scale
    for (double s : {1.0, 0.5, 0.125}) {
        const auto pair = FeatureMatrix::from_rows({{s, -s}, {-s, s}});
        const auto fp = finite_optimum(pair, ExampleSet::full(2));
        const auto g = margins(pair, fp.eta_star);
        CHECK(g[0] == Catch::Approx(0.0).margin(1e-9));
        CHECK(g[1] == Catch::Approx(0.0).margin(1e-9));
        CHECK(fp.K_F == Catch::Approx(2.0).margin(1e-10));
    }

    // the mint-mumax optimum has a genuinely nonzero eta*
    const auto mumax = gen_mint_mumax(5).matrix;
    const auto fm = finite_optimum(mumax, ExampleSet::full(5));
    CHECK(l1_norm(fm.eta_star) > 0.5);
    // stationarity: gradient inf-norm at the optimum
    const auto gm = margins(mumax, fm.eta_star);
    for (int j = 0; j < mumax.cols(); ++j) {
        double grad = 0;
        for (int i = 0; i < 5; ++i) grad -= mumax(i, j) * std::exp(-gm[i]);
        CHECK(std::fabs(grad) <= 1e-8);
    }
}

TEST_CASE("lambda_min") {
    CHECK(*lambda_min(three(), ExampleSet::of({0, 1}, 3)) == Catch::Approx(2.0).margin(1e-10));
    const auto unit = FeatureMatrix::from_rows({{1.0}});
    CHECK(*lambda_min(unit, ExampleSet::full(1)) == Catch::Approx(1.0).margin(1e-12));
    const auto zero = FeatureMatrix::from_rows({{0.0, 0.0}, {0.0, 0.0}});
    CHECK_FALSE(lambda_min(zero, ExampleSet::full(2)).has_value());
    CHECK_FALSE(lambda_min(three(), ExampleSet::of({}, 3)).has_value());

    // characteristic-polynomial oracle on random Gram matrices
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        const auto inst = gen_random(5, 3, Alphabet::Ternary, seed);
        const auto F = ExampleSet::full(5);
        std::vector<double> gram(9, 0.0);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int i = 0; i < 5; ++i)
                    gram[a * 3 + b] += inst.matrix(i, a) * inst.matrix(i, b);
        const auto eig = jacobi_eigen_symmetric(gram, 3);
        // each eigenvalue annihilates det(G - v I); trace and det match
        double tr = gram[0] + gram[4] + gram[8];
        double det = gram[0] * (gram[4] * gram[8] - gram[5] * gram[7]) -
                     gram[1] * (gram[3] * gram[8] - gram[5] * gram[6]) +
                     gram[2] * (gram[3] * gram[7] - gram[4] * gram[6]);
        double sum = 0, prod = 1;
        for (double v : eig.values) {
            sum += v;
            prod *= v;
            const double a0 = gram[0] - v, a4 = gram[4] - v, a8 = gram[8] - v;
            const double dv = a0 * (a4 * a8 - gram[5] * gram[7]) -
                              gram[1] * (gram[3] * a8 - gram[5] * gram[6]) +
                              gram[2] * (gram[3] * gram[7] - a4 * gram[6]);
            CHECK(std::fabs(dv) <= 1e-9 * std::max(1.0, std::fabs(det) + v * v * v));
        }
        CHECK(sum == Catch::Approx(tr).margin(1e-9));
        CHECK(prod == Catch::Approx(det).margin(1e-8));
        const auto lm = lambda_min(inst.matrix, F);
        if (lm) {
            double smallest_pos = 1e300;
            for (double v : eig.values)
                if (v > 1e-9 * eig.values.back()) smallest_pos = std::min(smallest_pos, v);
            CHECK(*lm == Catch::Approx(std::sqrt(smallest_pos)).margin(1e-9));
        }
    }
}

TEST_CASE("mu_max_bound") {
    CHECK(mu_max_bound(3, 2) == Catch::Approx(mu32()).epsilon(1e-14));
    CHECK(mu_max_bound(3, 0) == 0.0);
    CHECK(mu_max_bound(5, 2) ==
          Catch::Approx(std::log(5.0) * std::pow(2.0, 1.5) * 2.0).epsilon(1e-14));
    CHECK(std::isinf(mu_max_bound(30, 21)));
    CHECK_THROWS_AS(mu_max_bound(1, 2), std::invalid_argument);
}

TEST_CASE("separating_vector") {
    const auto y3 = separating_vector(three(), ExampleSet::of({0, 1}, 3));
    REQUIRE(y3.size() == 2);
    CHECK(y3[0] == Catch::Approx(y3[1]).margin(1e-10));
    CHECK(y3[0] >= 1.0 - 1e-10);

    CHECK(separating_vector(three(), ExampleSet::of({}, 3)).empty());

    // mint-mumax m=4: the feasible ray is unique, proportional to (4,2,1,1)
    const auto mm4 = gen_mint_mumax(4).matrix;
    const auto y = separating_vector(mm4, ExampleSet::full(4));
    REQUIRE(y.size() == 4);
    const double base = y[3];
    CHECK(y[0] / base == Catch::Approx(4.0).margin(1e-8));
    CHECK(y[1] / base == Catch::Approx(2.0).margin(1e-8));
    CHECK(y[2] / base == Catch::Approx(1.0).margin(1e-8));
    for (int j = 0; j < mm4.cols(); ++j) {
        double s = 0;
        for (int i = 0; i < 4; ++i) s += y[i] * mm4(i, j);
        CHECK(std::fabs(s) <= 1e-8);
    }
}

TEST_CASE("rate_constants") {
    const auto dec = decompose(three());
    const auto rep = rate_constants(dec, 3, 2);
    REQUIRE(rep.regime == Regime::General);
    REQUIRE(rep.constants.has_value());
    const auto& c = *rep.constants;
    const double mu = mu32();
    CHECK(c.mu_used == Catch::Approx(mu).epsilon(1e-14));
    CHECK(c.C0 == Catch::Approx(2.0 * 4.0 * 0.5 * (1.0 / 3.0) * std::exp(-mu)).epsilon(1e-12));
    CHECK(c.C == Catch::Approx(32.0 * 27.0 * 2.0 * std::exp(mu) / 4.0).epsilon(1e-12));
    CHECK(c.C1 == Catch::Approx(std::min(0.5, 0.25 * std::sqrt(c.C0 / 6.0))).epsilon(1e-12));
    CHECK(c.C2 == Catch::Approx(c.C0 / 12.0).epsilon(1e-12));

    // hand-assembled decomposition: gamma=1, lambda_min=1, mu=0, m=2, N=1
    Decomposition hand;
    hand.Z = ExampleSet::of({0}, 2);
    hand.F = ExampleSet::of({1}, 2);
    hand.gamma = 1.0;
    hand.lambda_min = 1.0;
    hand.mu_max_bound = 0.0;
    const auto hrep = rate_constants(hand, 2, 1);
    REQUIRE(hrep.constants.has_value());
    CHECK(hrep.constants->C == Catch::Approx(256.0).epsilon(1e-12));

    // doubling gamma divides C by 4
    hand.gamma = 2.0;
    CHECK(rate_constants(hand, 2, 1).constants->C == Catch::Approx(64.0).epsilon(1e-12));

    // degenerate regimes
    Decomposition weak;
    weak.Z = ExampleSet::full(2);
    weak.F = ExampleSet::of({}, 2);
    weak.gamma = 0.5;
    CHECK(rate_constants(weak, 2, 1).regime == Regime::WeakLearnable);
    CHECK_FALSE(rate_constants(weak, 2, 1).constants.has_value());

    const auto mm = decompose(gen_mint_mumax(5).matrix);
    const auto mrep = rate_constants(mm, 5, 4);
    CHECK(mrep.regime == Regime::FiniteOptimum);
    REQUIRE(mrep.constants.has_value());
    // e^mu is far beyond double range here; the log10 companions carry the
    // magnitudes (mu ~ 2159, so C ~ 10^940)
    CHECK(mrep.constants->C0 == 0.0);
    CHECK(std::isfinite(mrep.constants->log10_C3));
    CHECK(mrep.constants->log10_C == Catch::Approx(-mrep.constants->log10_C3).epsilon(1e-12));

    // log10 companions agree with the direct values when representable
    CHECK(std::pow(10.0, c.log10_C0) == Catch::Approx(c.C0).epsilon(1e-9));
    CHECK(std::pow(10.0, c.log10_C1) == Catch::Approx(c.C1).epsilon(1e-9));
    CHECK(std::pow(10.0, c.log10_C2) == Catch::Approx(c.C2).epsilon(1e-9));
    CHECK(std::pow(10.0, c.log10_C3) == Catch::Approx(c.C3).epsilon(1e-9));
    CHECK(std::pow(10.0, c.log10_C) == Catch::Approx(c.C).epsilon(1e-9));
}

TEST_CASE("worst_case_bounds") {
    const auto b32 = worst_case_bounds(3, 2);
    CHECK(b32.gamma_floor == Catch::Approx(1.0 / (std::sqrt(2.0) * 18.0)).epsilon(1e-14));
    CHECK(b32.lambda_floor == Catch::Approx(1.0 / 6.0).epsilon(1e-14));
    const auto b11 = worst_case_bounds(1, 1);
    CHECK(b11.gamma_floor == 1.0);
    CHECK(b11.lambda_floor == 1.0);
    const auto b54 = worst_case_bounds(5, 4);
    CHECK(b54.gamma_floor == Catch::Approx(1.0 / 1200.0).epsilon(1e-14));
    CHECK(b54.lambda_floor == Catch::Approx(1.0 / 120.0).epsilon(1e-14));
    const auto big = worst_case_bounds(21, 4);
    CHECK(big.gamma_floor == 0.0);  // factorial overflow marker
    CHECK(big.lambda_floor == 0.0);
}

TEST_CASE("near_optimal_solution") {
    const auto dec = decompose(three());
    const auto lam = near_optimal_solution(three(), dec, 0.1);
    CHECK(lam[0] == Catch::Approx(0.5 * std::log(10.0)).margin(1e-9));
    CHECK(lam[1] == Catch::Approx(0.5 * std::log(10.0)).margin(1e-9));
    CHECK(exp_loss(three(), lam) == Catch::Approx(0.7).margin(1e-12));

    // eps >= 1 collapses to the no-op target
    const auto lam1 = near_optimal_solution(three(), dec, 5.0);
    CHECK(exp_loss(three(), lam1) <= dec.K_F / 3.0 + 1.0 + 1e-12);

    const auto tri = gen_triangular(5).matrix;
    const auto dtri = decompose(tri);
    const auto ltri = near_optimal_solution(tri, dtri, 0.1);
    CHECK(exp_loss(tri, ltri) <= 2.0 / 5.0 + 0.1 + 1e-12);

    CHECK_THROWS_AS(near_optimal_solution(three(), dec, 0.0), std::invalid_argument);
}

TEST_CASE("certificate directions leave the F-loss unchanged") {
    for (const auto& inst :
         {gen_three_example(), gen_triangular(5), gen_random(6, 4, Alphabet::Ternary, 1)}) {
        const auto dec = decompose(inst.matrix);
        if (dec.Z.empty()) continue;
        for (double t : {1.0, 10.0, 100.0}) {
            Combination shifted = dec.eta_star;
            for (int j = 0; j < inst.matrix.cols(); ++j) shifted[j] += t * dec.eta_dagger[j];
            CHECK(set_loss(inst.matrix, shifted, dec.F) == Catch::Approx(dec.K_F).margin(1e-8));
        }
    }
}

TEST_CASE("bounded-loss probes stay inside the margin interval") {
    const auto dec = decompose(three());
    const auto rep = probe_finite_margins(three(), dec.F, dec.mu_max_bound, 200, 99);
    CHECK(rep.within_bounds);
    CHECK(rep.empirical_mu <= dec.mu_max_bound);
    CHECK(rep.min_margin >= -std::log(3.0) - 1e-9);
    CHECK(rep.samples == 200);
}

namespace {

// Independent zero-loss-set oracle for N = 2. The feasible directions
// {lambda : M lambda >= 0} form a planar cone whose extreme rays are
// perpendicular to rows, so scanning +-rows, +-perpendiculars, the axes and
// pairwise sums of the feasible ones reaches every strict-positivity pattern.
std::vector<int> zero_loss_oracle_2d(const FeatureMatrix& m) {
    std::vector<std::array<double, 2>> cand;
    for (int i = 0; i < m.rows(); ++i) {
        const double a = m(i, 0), b = m(i, 1);
        cand.push_back({a, b});
        cand.push_back({-a, -b});
        cand.push_back({-b, a});
        cand.push_back({b, -a});
    }
    cand.push_back({1, 0});
    cand.push_back({-1, 0});
    cand.push_back({0, 1});
    cand.push_back({0, -1});
    auto feasible = [&](const std::array<double, 2>& v) {
        for (int i = 0; i < m.rows(); ++i)
            if (m(i, 0) * v[0] + m(i, 1) * v[1] < -1e-12) return false;
        return true;
    };
    std::vector<std::array<double, 2>> feas;
    for (const auto& v : cand)
        if (feasible(v)) feas.push_back(v);
    const std::size_t base = feas.size();
    for (std::size_t a = 0; a < base; ++a)
        for (std::size_t b = a + 1; b < base; ++b)
            feas.push_back({feas[a][0] + feas[b][0], feas[a][1] + feas[b][1]});
    std::vector<int> z;
    for (int i = 0; i < m.rows(); ++i) {
        for (const auto& v : feas) {
            if (!feasible(v)) continue;
            if (m(i, 0) * v[0] + m(i, 1) * v[1] > 1e-9) {
                z.push_back(i);
                break;
            }
        }
    }
    return z;
}

void check_split_against_oracle(const FeatureMatrix& m) {
    const auto split = zero_loss_set(m);
    // the witness certifies every index the LP put into Z...
    const auto wit = margins(m, split.witness);
    for (int i : split.Z.indices) REQUIRE(wit[i] >= 1e-7);
    for (double g : wit) REQUIRE(g >= -1e-8);
    // ...and the directional oracle certifies maximality
    for (int i : zero_loss_oracle_2d(m)) REQUIRE(split.Z.contains(i));
}

}  // namespace

TEST_CASE("zero_loss_set is exact on every small two-column ternary matrix") {
    for (int code = 0; code < 729; ++code) {  // all 3x2 ternary matrices
        int c = code;
        std::vector<double> entries(6);
        for (double& e : entries) {
            e = static_cast<double>(c % 3) - 1.0;
            c /= 3;
        }
        check_split_against_oracle(FeatureMatrix(3, 2, entries));
    }
    for (int code = 0; code < 6561; ++code) {  // all 4x2 ternary matrices
        int c = code;
        std::vector<double> entries(8);
        for (double& e : entries) {
            e = static_cast<double>(c % 3) - 1.0;
            c /= 3;
        }
        check_split_against_oracle(FeatureMatrix(4, 2, entries));
    }
}

TEST_CASE("integral floors hold on random ternary instances") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto inst = gen_random(5, 3, Alphabet::Ternary, seed);
        const auto dec = decompose(inst.matrix, 100, seed);
        const auto floors = worst_case_bounds(5, 3);
        if (dec.gamma) CHECK(*dec.gamma >= floors.gamma_floor - 1e-15);
        if (dec.lambda_min) CHECK(*dec.lambda_min >= floors.lambda_floor - 1e-15);
    }
}

TEST_CASE("decomposition report JSON") {
    const auto inst = gen_three_example();
    const auto dec = decompose(inst.matrix);
    const auto rate = rate_constants(dec, 3, 2);
    const auto j = decomposition_report(dec, rate, &inst.row_labels);
    CHECK(j["Z"] == nlohmann::json::array({"c"}));
    CHECK(j["F"] == nlohmann::json::array({"a", "b"}));
    CHECK(j["gamma"].get<double>() == Catch::Approx(1.0).margin(1e-9));
    CHECK(j["lambda_min"].get<double>() == Catch::Approx(2.0).margin(1e-9));
    CHECK(j["K_F"].get<double>() == Catch::Approx(2.0).margin(1e-9));
    CHECK(j["regime"] == "general");
    CHECK(j.contains("C"));
    CHECK(j.contains("empirical_mu"));

    const auto no_labels = decomposition_report(dec, rate, nullptr);
    CHECK(no_labels["Z"] == nlohmann::json::array({2}));
}
