// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <complex>

#include "localize/closed_forms.hpp"
#include "localize/quantum.hpp"

using namespace localize;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const std::complex<double> kMinusI{0.0, -1.0};

// Independent oracle: the N-mode truncated trace summed over the full
// occupation grid, not via the per-mode product.
std::complex<double> grid_trace(const QuantumParams& qp, int m_max) {
    const std::complex<double> i{0.0, 1.0};
    const std::vector<double> mu = mu_vector(qp);
    std::complex<double> sum{0.0, 0.0};
    std::vector<int> occ(qp.n, 0);
    while (true) {
        double energy = static_cast<double>(qp.k) * qp.c[qp.n];
        for (int a = 0; a < qp.n; ++a) energy += mu[a] * occ[a];
        sum += std::exp(-i * energy * qp.t);
        int pos = 0;
        while (pos < qp.n && ++occ[pos] > m_max) occ[pos++] = 0;
        if (pos == qp.n) break;
    }
    return sum;
}

}  // namespace

TEST_CASE("fock trace: geometric tail at N=1") {
    const auto qp = make_quantum_params(1, 2, {1, 0}, kMinusI);
    const std::complex<double> closed = quantum_trace_closed(qp).value;

    // At m_max = 20 the single-mode gap e^{-21}/(1-e^{-1}) is far above
    // roundoff and must be matched exactly.
    const TruncatedTrace t20 = fock_trace_truncated(qp, {20, 1});
    const double gap20 = std::exp(-21.0) / (1.0 - std::exp(-1.0));
    CHECK(std::abs(t20.value - closed) == doctest::Approx(gap20).epsilon(1e-10));
    CHECK(t20.tail_bound >= gap20);

    // At m_max = 40 the analytic tail e^{-41}/(1-e^{-1}) sits below one ulp
    // of the value; the bound can only be certified up to roundoff.
    const TruncatedTrace t40 = fock_trace_truncated(qp, {40, 1});
    const double gap40 = std::exp(-41.0) / (1.0 - std::exp(-1.0));
    CHECK(t40.tail_bound >= gap40);
    CHECK(std::abs(t40.value - closed) <=
          t40.tail_bound + 1e-14 * (1.0 + std::abs(closed)));
}

TEST_CASE("fock trace: m_max = 0 keeps only the ground phase") {
    const auto qp = make_quantum_params(1, 2, {0, 1}, kMinusI);  // c2=1, K=2
    const TruncatedTrace t = fock_trace_truncated(qp, {0, 1});
    CHECK(std::abs(t.value - std::exp(-2.0)) < 1e-15);
}

TEST_CASE("fock trace equals the occupation-grid oracle and factorizes") {
    const auto qp = make_quantum_params(2, 3, {0.7, 1.1, 0.4}, kMinusI);
    for (int m_max : {3, 7, 15}) {
        const TruncatedTrace t = fock_trace_truncated(qp, {m_max, 2});
        CHECK(std::abs(t.value - grid_trace(qp, m_max)) < 1e-13);
    }
}

TEST_CASE("fock trace converges monotonically into the closed form") {
    const auto qp = make_quantum_params(2, 2, {1, 2, 0}, kMinusI);
    const std::complex<double> closed = quantum_trace_closed(qp).value;
    double prev_gap = 1e300, prev_tail = 1e300;
    for (int m_max : {10, 20, 40}) {
        const TruncatedTrace t = fock_trace_truncated(qp, {m_max, 2});
        const double gap = std::abs(t.value - closed);
        CHECK(gap <= t.tail_bound + 1e-14 * (1.0 + std::abs(closed)));
        CHECK(gap <= prev_gap);
        CHECK(t.tail_bound < prev_tail);
        prev_gap = gap;
        prev_tail = t.tail_bound;
    }
}

TEST_CASE("fock trace rejects the non-convergent regime") {
    CHECK_THROWS_AS(
        fock_trace_truncated(make_quantum_params(1, 2, {1, 0}, {1.0, 0.0}), {10, 1}),
        DivergentRegime);
    CHECK_THROWS_AS(
        fock_trace_truncated(make_quantum_params(1, 2, {1, 0}, kMinusI), {10, 2}),
        KindMismatch);
}

TEST_CASE("coherent overlap: cancellation, diagonal, and the grid oracle") {
    const OverlapResult zero = coherent_overlap({kPi}, {0.0}, 1);
    CHECK(std::abs(zero.value) < 1e-16);
    CHECK(!zero.divergent);

    const OverlapResult diag = coherent_overlap({1.3}, {1.3}, 9);
    CHECK(diag.divergent);
    CHECK(std::abs(diag.value - 10.0 / (2.0 * kPi)) < 1e-14);

    // N=2: product of two truncated geometric sums, against direct summation.
    const std::vector<double> phi{kPi / 2.0 + 0.3, kPi + 0.1};
    const std::vector<double> phi2{0.3, 0.1};
    const OverlapResult got = coherent_overlap(phi, phi2, 3);
    std::complex<double> oracle{0.0, 0.0};
    const std::complex<double> i{0.0, 1.0};
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m2 <= 3; ++m2)
            oracle += std::exp(i * (m1 * (phi[0] - phi2[0]) + m2 * (phi[1] - phi2[1])));
    oracle /= (2.0 * kPi) * (2.0 * kPi);
    CHECK(std::abs(got.value - oracle) < 1e-14);
}

TEST_CASE("coherent overlap depends only on the angle difference") {
    const std::vector<double> phi{0.4, 2.0};
    const std::vector<double> phi2{1.1, 0.7};
    const OverlapResult a = coherent_overlap(phi, phi2, 6);
    std::vector<double> phi_s = phi, phi2_s = phi2;
    for (double& x : phi_s) x += 0.9;
    for (double& x : phi2_s) x += 0.9;
    const OverlapResult b = coherent_overlap(phi_s, phi2_s, 6);
    CHECK(std::abs(a.value - b.value) < 1e-13);
}

TEST_CASE("resolution of unity is quadrature-exact above the node threshold") {
    CHECK(resolution_of_unity_residual(1, 5, 16) < 1e-13);
    CHECK(resolution_of_unity_residual(1, 5, 11) < 1e-13);
    CHECK(resolution_of_unity_residual(2, 3, 16) < 1e-12);
    CHECK_THROWS_AS(resolution_of_unity_residual(1, 5, 8), InsufficientNodes);
    CHECK_THROWS_AS(resolution_of_unity_residual(1, 5, 10), InsufficientNodes);
}

TEST_CASE("poisson resummation with the Gaussian test function") {
    CHECK(poisson_resum_residual(1.0, 0.0, 5, 20) < 1e-12);
    CHECK(poisson_resum_residual(1.0, kPi, 5, 20) < 1e-12);
    // Narrow-f limit: LHS -> f(0) = 1, the image sum needs many terms.
    CHECK(poisson_resum_residual(0.05, 1.0, 200, 20) < 1e-8);
    CHECK_THROWS_AS(poisson_resum_residual(-1.0, 0.0, 5, 20), ParseError);
}
