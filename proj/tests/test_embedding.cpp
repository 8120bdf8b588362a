// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "localize/embedding.hpp"
#include "localize/rng.hpp"

using namespace localize;

namespace {

ChartPoint ball_point(std::initializer_list<std::complex<double>> xs) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v(i++) = x;
    return make_chart_point(Manifold::CQ, v);
}

}  // namespace

TEST_CASE("embed materializes scalar powers at N=1") {
    const TruncatedEmbedding e = embed(ball_point({0.5}), 3);
    REQUIRE(e.levels.size() == 3);
    CHECK(std::abs(e.levels[0](0) - 0.5) < 1e-15);
    CHECK(std::abs(e.levels[1](0) - 0.25) < 1e-15);
    CHECK(std::abs(e.levels[2](0) - 0.125) < 1e-15);
}

TEST_CASE("embed level-2 is the literal tensor square") {
    const std::complex<double> a{0.3, 0.1}, b{-0.2, 0.4};
    const TruncatedEmbedding e = embed(ball_point({a, b}), 2);
    REQUIRE(e.levels[1].size() == 4);
    CHECK(std::abs(e.levels[1](0) - a * a) < 1e-15);
    CHECK(std::abs(e.levels[1](1) - a * b) < 1e-15);
    CHECK(std::abs(e.levels[1](2) - b * a) < 1e-15);
    CHECK(std::abs(e.levels[1](3) - b * b) < 1e-15);
}

TEST_CASE("embed at the origin is the zero tower") {
    const TruncatedEmbedding e = embed(ball_point({0.0, 0.0}), 4);
    for (const auto& lvl : e.levels) CHECK(lvl.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed enforces the storage budget") {
    CHECK_THROWS_AS(embed(ball_point({0.3, 0.3}), 40), BudgetExhausted);
    CHECK_THROWS_AS(embed(ball_point({0.5}), 0), BudgetExhausted);
    // Level dimensions: dim(level n) = N^n.
    const TruncatedEmbedding e = embed(ball_point({0.2, 0.2, 0.2}), 5);
    for (int n = 1; n <= 5; ++n)
        CHECK(e.levels[n - 1].size() == static_cast<Eigen::Index>(std::pow(3, n)));
}

TEST_CASE("norm identity: truncation gap is exactly the geometric tail") {
    const TruncatedEmbedding e = embed(ball_point({std::sqrt(0.5)}), 10);
    const NormIdentity ni = embed_norm_residual(e);
    CHECK(ni.truncated == doctest::Approx(1.0 - std::pow(2.0, -10)).epsilon(1e-12));
    CHECK(ni.exact == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(std::abs(ni.exact - ni.truncated) - ni.tail_bound) < 1e-14);

    const NormIdentity zero = embed_norm_residual(embed(ball_point({0.0}), 5));
    CHECK(zero.truncated == 0.0);
    CHECK(zero.exact == 0.0);

    // s = 0.9, n_max = 5: gap = 0.9^6 / 0.1 exactly.
    Eigen::VectorXcd v(1);
    v << std::complex<double>(std::sqrt(0.9), 0.0);
    const NormIdentity big =
        embed_norm_residual(embed(make_chart_point(Manifold::CQ, v), 5));
    CHECK(std::abs(big.exact - big.truncated) ==
          doctest::Approx(std::pow(0.9, 6) / 0.1).epsilon(1e-12));
}

TEST_CASE("universal energy: examples and certified truncation") {
    const Spectrum cq21 = validate_spectrum(Manifold::CQ, {2, 1}, 1.0);

    const EnergySplit at_origin =
        universal_energy(embed(ball_point({0.0}), 3), cq21);
    CHECK(at_origin.truncated == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(at_origin.exact == doctest::Approx(2.0).epsilon(1e-15));

    double prev_gap = 1e300;
    for (int n_max : {2, 5, 10, 20}) {
        const EnergySplit en = universal_energy(embed(ball_point({0.5}), n_max), cq21);
        CHECK(en.exact == doctest::Approx(7.0 / 3.0).epsilon(1e-14));
        const double gap = std::abs(en.exact - en.truncated);
        CHECK(gap <= en.tail_bound);
        CHECK(gap <= prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("universal energy exact equals the projector trace everywhere") {
    CounterRng rng(31, 0);
    for (int n = 1; n <= 3; ++n) {
        std::vector<double> theta;
        for (int a = 0; a <= n; ++a) theta.push_back(n + 1.0 - a);
        const Spectrum spectrum = validate_spectrum(Manifold::CQ, theta, 1.0);
        for (int i = 0; i < 20; ++i) {
            Eigen::VectorXcd dir(n);
            for (int k = 0; k < n; ++k) dir(k) = rng.next_complex_gaussian();
            dir.normalize();
            const ChartPoint p =
                make_chart_point(Manifold::CQ, std::sqrt(0.7 * rng.next_double()) * dir);
            const EnergySplit en = universal_energy(embed(p, 4), spectrum);
            CHECK(std::abs(en.exact - hamiltonian_trace(p, spectrum)) < 1e-12);
        }
    }
}

TEST_CASE("pullback metric converges to the analytic CQ metric") {
    // Origin: only the level-1 Jacobian contributes.
    const MetricCoefficients origin = pullback_metric(embed(ball_point({0.0, 0.0}), 3));
    CHECK((origin.g - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);

    // N=1, xi=1/2, n_max=20: within 1e-4 of 16/9 and inside the tail bound.
    const TruncatedEmbedding e = embed(ball_point({0.5}), 20);
    const double g = pullback_metric(e).g(0, 0).real();
    CHECK(std::abs(g - 16.0 / 9.0) < 1e-4);
    CHECK(std::abs(g - 16.0 / 9.0) <= pullback_metric_tail_bound(e) + 1e-13);

    // Monotone convergence from some n0 on.
    double prev = 1e300;
    for (int n_max : {5, 10, 15, 20}) {
        const double d = std::abs(
            pullback_metric(embed(ball_point({0.5}), n_max)).g(0, 0).real() -
            16.0 / 9.0);
        CHECK(d < prev);
        prev = d;
    }

    CHECK_THROWS_AS(pullback_metric(embed(ball_point({0.5}), 1)), BudgetExhausted);
}

TEST_CASE("pullback metric at N=2 random points") {
    CounterRng rng(32, 0);
    for (int i = 0; i < 8; ++i) {
        Eigen::VectorXcd dir(2);
        dir << rng.next_complex_gaussian(), rng.next_complex_gaussian();
        dir.normalize();
        const double s = 0.5 * rng.next_double();
        const ChartPoint p = make_chart_point(Manifold::CQ, std::sqrt(s) * dir);
        const TruncatedEmbedding e = embed(p, 15);
        const double diff =
            (pullback_metric(e).g - metric_analytic(p).g).cwiseAbs().maxCoeff();
        // At s near 0.5 the 15-level tail is a few 1e-3; the certified bound
        // is the sharp statement, the 1e-3 figure holds on s <= 0.4.
        CHECK(diff <= pullback_metric_tail_bound(e) + 1e-13);
        if (s <= 0.4) CHECK(diff < 1e-3);
    }
}

TEST_CASE("embed rejects non-CQ points") {
    Eigen::VectorXcd v(1);
    v << std::complex<double>(0.5, 0.0);
    const ChartPoint p = make_chart_point(Manifold::CP, v);
    CHECK_THROWS_AS(embed(p, 3), KindMismatch);
}
