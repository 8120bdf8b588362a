// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "localize/geometry.hpp"
#include "localize/rng.hpp"

using namespace localize;

namespace {

ChartPoint point(Manifold kind, std::initializer_list<std::complex<double>> xs) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs) v(i++) = x;
    return make_chart_point(kind, v);
}

ChartPoint random_point(Manifold kind, int n, CounterRng& rng, double s_max) {
    Eigen::VectorXcd dir(n);
    for (int i = 0; i < n; ++i) dir(i) = rng.next_complex_gaussian();
    dir.normalize();
    return make_chart_point(kind, std::sqrt(s_max * rng.next_double()) * dir);
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("projector_cp at the origin and at xi = 1") {
    const Projector origin = projector_cp(point(Manifold::CP, {0.0}));
    CHECK(std::abs(origin.mat(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(origin.mat(1, 1)) < 1e-15);

    const Projector p1 = projector_cp(point(Manifold::CP, {1.0}));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) CHECK(std::abs(p1.mat(r, c) - 0.5) < 1e-15);
}

TEST_CASE("projector_cq at xi = 1/2 matches the chart formula") {
    const Projector q = projector_cq(point(Manifold::CQ, {0.5}));
    const double f = 4.0 / 3.0;
    CHECK(std::abs(q.mat(0, 0) - f) < 1e-14);
    CHECK(std::abs(q.mat(0, 1) + f * 0.5) < 1e-14);
    CHECK(std::abs(q.mat(1, 0) - f * 0.5) < 1e-14);
    CHECK(std::abs(q.mat(1, 1) + f * 0.25) < 1e-14);
}

TEST_CASE("projector identities hold at random points") {
    CounterRng rng(21, 0);
    for (Manifold kind : {Manifold::CP, Manifold::CQ}) {
        const double s_max = kind == Manifold::CP ? 4.0 : 0.9;
        for (int n = 1; n <= 4; ++n) {
            for (int i = 0; i < 100; ++i) {
                const Projector p = projector(random_point(kind, n, rng, s_max));
                CHECK(projector_idempotency_defect(p) < 1e-12);
                CHECK(projector_symmetry_defect(p) < 1e-12);
                CHECK(projector_trace_defect(p) < 1e-12);
            }
        }
    }
}

TEST_CASE("metric_analytic pinned chart values") {
    const MetricCoefficients origin = metric_analytic(point(Manifold::CP, {0.0, 0.0}));
    CHECK(max_abs(origin.g - Eigen::MatrixXcd::Identity(2, 2)) < 1e-15);

    CHECK(metric_analytic(point(Manifold::CP, {1.0})).g(0, 0).real() ==
          doctest::Approx(0.25).epsilon(1e-14));
    CHECK(metric_analytic(point(Manifold::CQ, {0.5})).g(0, 0).real() ==
          doctest::Approx(16.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("metric_fd matches metric_analytic") {
    const ChartPoint origin = point(Manifold::CP, {0.0, 0.0});
    const MetricCoefficients fd0 = metric_fd(origin, 1e-5);
    CHECK(max_abs(fd0.g - Eigen::MatrixXcd::Identity(2, 2)) < 1e-9);
    CHECK(fd0.spurious < 1e-8);

    CounterRng rng(22, 0);
    for (int i = 0; i < 10; ++i) {
        const ChartPoint p = random_point(Manifold::CP, 2, rng, 2.0);
        CHECK(max_abs(metric_fd(p, 1e-5).g - metric_analytic(p).g) < 1e-6);
    }
    for (int i = 0; i < 10; ++i) {
        Eigen::VectorXcd dir(2);
        dir << rng.next_complex_gaussian(), rng.next_complex_gaussian();
        dir.normalize();
        const ChartPoint p = make_chart_point(Manifold::CQ, std::sqrt(0.9) * dir);
        CHECK(max_abs(metric_fd(p, 1e-5).g - metric_analytic(p).g) < 1e-5);
    }
}

TEST_CASE("metric_fd convergence order is ~2 in h") {
    CounterRng rng(23, 0);
    for (Manifold kind : {Manifold::CP, Manifold::CQ}) {
        for (int i = 0; i < 3; ++i) {
            Eigen::VectorXcd dir(2);
            dir << rng.next_complex_gaussian(), rng.next_complex_gaussian();
            dir.normalize();
            const double s = 0.2 + 0.4 * rng.next_double();
            const ChartPoint p = make_chart_point(kind, std::sqrt(s) * dir);
            const auto err = [&](double h) {
                return max_abs(metric_fd(p, h).g - metric_analytic(p).g);
            };
            const double slope = 0.5 * (std::log10(err(1e-3)) - std::log10(err(1e-5)));
            CHECK(slope >= 1.8);
            CHECK(slope <= 2.2);
        }
    }
}

TEST_CASE("metric_fd step handling") {
    const ChartPoint p = point(Manifold::CQ, {0.5});
    CHECK_THROWS_AS(metric_fd(p, 1e-2), StepTooLarge);
    CHECK_THROWS_AS(metric_fd(p, 1e-8), StepTooLarge);

    Eigen::VectorXcd near(1);
    near << std::complex<double>(std::sqrt(0.995), 0.0);
    CHECK_THROWS_AS(metric_fd(make_chart_point(Manifold::CQ, near), 1e-5),
                    StepTooLarge);
}

TEST_CASE("volume_density closed forms") {
    CHECK(volume_density(point(Manifold::CP, {0.0})) == doctest::Approx(1.0));
    // CP, N=2, s=1: (1+1)^{-3}
    CHECK(volume_density(point(Manifold::CP, {1.0, 0.0})) ==
          doctest::Approx(1.0 / 8.0).epsilon(1e-13));
    // CQ, N=2, s=1/2: (1/2)^{-3}
    CHECK(volume_density(point(Manifold::CQ, {std::sqrt(0.5), 0.0})) ==
          doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("volume density blows up monotonically toward the CQ boundary") {
    Eigen::VectorXcd dir(2);
    dir << std::complex<double>(0.6, 0.3), std::complex<double>(-0.2, 0.7);
    dir.normalize();
    double prev = 0.0;
    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9, 0.97}) {
        const double v =
            volume_density(make_chart_point(Manifold::CQ, std::sqrt(s) * dir));
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("kahler closedness residual vanishes to FD accuracy") {
    CHECK(kahler_closedness_residual(point(Manifold::CP, {0.0, 0.0}), 1e-4) < 1e-9);
    CHECK(kahler_closedness_residual(point(Manifold::CQ, {0.0, 0.0}), 1e-4) < 1e-9);

    CounterRng rng(24, 0);
    for (int i = 0; i < 5; ++i) {
        const ChartPoint p = random_point(Manifold::CP, 3, rng, 2.0);
        CHECK(kahler_closedness_residual(p, 1e-4) < 1e-6);
    }
    for (int i = 0; i < 5; ++i) {
        Eigen::VectorXcd dir(3);
        for (int k = 0; k < 3; ++k) dir(k) = rng.next_complex_gaussian();
        dir.normalize();
        const ChartPoint p = make_chart_point(Manifold::CQ, std::sqrt(0.8) * dir);
        // The FD constant grows like (1-s)^{-5}; s = 0.8 needs the finer step.
        CHECK(kahler_closedness_residual(p, 3e-5) < 1e-5);
    }
}

TEST_CASE("hamiltonian_trace examples and kind checks") {
    const Spectrum cp12 = validate_spectrum(Manifold::CP, {1, 2}, 1.0);
    const Spectrum cq21 = validate_spectrum(Manifold::CQ, {2, 1}, 1.0);

    CHECK(hamiltonian_trace(point(Manifold::CP, {0.0}), cp12) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(hamiltonian_trace(point(Manifold::CQ, {0.0}), cq21) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(hamiltonian_trace(point(Manifold::CP, {1.0}), cp12) ==
          doctest::Approx(1.5).epsilon(1e-14));
    CHECK(hamiltonian_trace(point(Manifold::CQ, {0.5}), cq21) ==
          doctest::Approx(7.0 / 3.0).epsilon(1e-14));

    CHECK_THROWS_AS(hamiltonian_trace(point(Manifold::CP, {0.5}), cq21), KindMismatch);
}

TEST_CASE("spurious (2,0)/(0,2) components stay at the FD noise floor") {
    CounterRng rng(25, 0);
    for (int i = 0; i < 20; ++i) {
        const ChartPoint p = random_point(Manifold::CP, 3, rng, 4.0);
        CHECK(metric_fd(p, 1e-5).spurious < 1e-8);
    }
    for (int i = 0; i < 20; ++i) {
        Eigen::VectorXcd dir(3);
        for (int k = 0; k < 3; ++k) dir(k) = rng.next_complex_gaussian();
        dir.normalize();
        const ChartPoint p =
            make_chart_point(Manifold::CQ, std::sqrt(0.9 * rng.next_double()) * dir);
        CHECK(metric_fd(p, 1e-5).spurious < 1e-6);
    }
}

TEST_CASE("metric_fd distinguishes out-of-chart from step trouble") {
    ChartPoint outside;  // bypasses make_chart_point on purpose
    outside.kind = Manifold::CQ;
    outside.xi = Eigen::VectorXcd::Constant(1, std::complex<double>(1.2, 0.0));
    CHECK_THROWS_AS(metric_fd(outside, 1e-5), OutOfChart);
    CHECK_THROWS_AS(kahler_closedness_residual(outside, 1e-5), OutOfChart);
}
