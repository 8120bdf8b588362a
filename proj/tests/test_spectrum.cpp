// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "localize/rng.hpp"
#include "localize/spectrum.hpp"

using namespace localize;

TEST_CASE("validate_spectrum accepts ordered CP input") {
    const Spectrum s = validate_spectrum(Manifold::CP, {1, 2, 3}, 1.0);
    CHECK(s.rank() == 2);
    CHECK(!s.conditioning_warning);
}

TEST_CASE("validate_spectrum rejects CP input on a CQ manifold") {
    CHECK_THROWS_AS(validate_spectrum(Manifold::CQ, {1, 2, 3}, 1.0), OrderingViolation);
}

TEST_CASE("validate_spectrum flags near-degenerate spectra") {
    const Spectrum s = validate_spectrum(Manifold::CP, {1, 1 + 1e-9, 2}, 1.0);
    CHECK(s.conditioning_warning);
}

TEST_CASE("validate_spectrum hard errors") {
    CHECK_THROWS_AS(validate_spectrum(Manifold::CP, {1, 1, 2}, 1.0), DegenerateSpectrum);
    CHECK_THROWS_AS(validate_spectrum(Manifold::CP, {0, 1, 2}, 1.0), OrderingViolation);
    CHECK_THROWS_AS(validate_spectrum(Manifold::CP, {-1, 1, 2}, 1.0), OrderingViolation);
    CHECK_THROWS_AS(validate_spectrum(Manifold::CP, {1, 2}, 0.0), NonPositiveRho);
    CHECK_THROWS_AS(validate_spectrum(Manifold::CP, {1, 2}, -2.0), NonPositiveRho);
    CHECK_THROWS_AS(validate_spectrum(Manifold::CP, {1}, 1.0), OrderingViolation);
    CHECK_THROWS_AS(validate_spectrum(Manifold::CQ, {2, 1, 0}, 1.0), OrderingViolation);
}

TEST_CASE("validate_spectrum is idempotent") {
    const Spectrum a = validate_spectrum(Manifold::CQ, {3, 2, 1}, 2.0);
    const Spectrum b = validate_spectrum(a.kind, a.theta, a.rho);
    CHECK(a.theta == b.theta);
    CHECK(a.conditioning_warning == b.conditioning_warning);
}

TEST_CASE("valid CQ spectra have theta_0 - theta_a > 0") {
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 4);
        std::vector<double> theta;
        double t = 5.0 + rng.next_double();
        for (int a = 0; a <= n; ++a) {
            theta.push_back(t);
            t -= 0.1 + rng.next_double();
        }
        if (theta.back() <= 0.0) continue;
        const Spectrum s = validate_spectrum(Manifold::CQ, theta, 1.0);
        for (int a = 1; a <= n; ++a) CHECK(s.theta[0] - s.theta[a] > 0.0);
    }
}

TEST_CASE("mu_vector adds the last coupling") {
    CHECK(mu_vector(make_quantum_params(1, 2, {1, 0}, {0, -1})) ==
          std::vector<double>{1});
    CHECK(mu_vector(make_quantum_params(2, 2, {1, 2, 3}, {0, -1})) ==
          std::vector<double>{4, 5});
    // mu = 0 is outside the convergent regime but the map itself is defined
    CHECK(mu_vector(QuantumParams{1, 2, {0, 0}, {0, -1}}) == std::vector<double>{0});
}

TEST_CASE("convergent_regime means mu * Im(T) < 0 for every mode") {
    CHECK(convergent_regime(make_quantum_params(1, 2, {1, 0}, {0.0, -1.0})));
    CHECK(!convergent_regime(make_quantum_params(1, 2, {1, 0}, {1.0, 0.0})));
    CHECK(!convergent_regime(make_quantum_params(2, 2, {1, -5, 2}, {0.0, -1.0})));
    CHECK(convergent_regime(make_quantum_params(2, 2, {-3, -4, 2}, {0.0, 1.0})));
}

TEST_CASE("chart points enforce the CQ ball constraint") {
    Eigen::VectorXcd in(2);
    in << std::complex<double>(0.5, 0.2), std::complex<double>(0.0, 0.6);
    CHECK_NOTHROW(make_chart_point(Manifold::CQ, in));

    Eigen::VectorXcd out(2);
    out << std::complex<double>(0.9, 0.0), std::complex<double>(0.9, 0.0);
    CHECK_THROWS_AS(make_chart_point(Manifold::CQ, out), OutOfChart);
    CHECK_NOTHROW(make_chart_point(Manifold::CP, out));  // CP chart covers all of C^N

    Eigen::VectorXcd boundary(1);
    boundary << std::complex<double>(1.0, 0.0);
    CHECK_THROWS_AS(make_chart_point(Manifold::CQ, boundary), OutOfChart);
}

TEST_CASE("quantum parameter validation") {
    CHECK_THROWS_AS(make_quantum_params(0, 1, {1}, {0, -1}), ParseError);
    CHECK_THROWS_AS(make_quantum_params(2, 1, {1, 2, 3}, {0, -1}), ParseError);
    CHECK_THROWS_AS(make_quantum_params(2, 2, {1, 2}, {0, -1}), ParseError);
}
