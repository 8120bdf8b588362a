// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "localize/spectrum.hpp"

namespace localize {

/// Fixed-point sum over the spectrum,
///   Z = sum_a e^{-rho theta_a} / (rho^N prod_{b!=a} (theta_b - theta_a)).
/// Terms are accumulated largest exponential first with compensated
/// summation; the gap products alternate in sign.
PartitionEstimate z_cpn_dh(const Spectrum& s);

/// Same sum written as a ratio of (N+1)x(N+1) determinants divided by rho^N:
/// numerator rows are (e^{-rho theta_a}, theta_a^0 .. theta_a^{N-1}),
/// denominator is the full Vandermonde with powers 0..N. Evaluated through
/// pivoted elimination in log-magnitude form with sign tracking.
PartitionEstimate z_cpn_det(const Spectrum& s);

/// Pole sum of the Fourier-Gaussian representation,
///   Z = sum_a e^{-rho theta_a} prod_{b!=a} 1/(rho (theta_b - theta_a)).
/// Algebraically equal to z_cpn_dh; kept as a distinct evaluation path.
PartitionEstimate z_cpn_residue(const Spectrum& s);

/// Closed form on the ball, Z = e^{-rho theta_0} / prod_a rho (theta_0 -
/// theta_a). Cross-checked internally against the determinant form.
PartitionEstimate z_cqn_closed(const Spectrum& s);

/// Determinant form of the CQ partition function: (-1)^N / rho^N times the
/// ratio of the (N+1)x(N+1) determinants whose numerator first row is
/// (e^{-rho theta_0}, 0, ..., 0).
PartitionEstimate z_cqn_det(const Spectrum& s);

/// Exact trace Z = e^{-i K c_{N+1} T} / prod_a (1 - e^{-i mu_a T}).
/// Throws DivergentRegime unless every |e^{-i mu_a T}| < 1; real T is
/// refused rather than silently regularized.
PartitionEstimate quantum_trace_closed(const QuantumParams& qp);

/// |LHS - RHS| of
///   sum_{a=1..N} 1/prod_{b!=a}(theta_b - theta_a)
///     = -1/prod_{b=1..N}(theta_b - theta_0)
/// in double precision. Throws DegenerateSpectrum on coincident entries.
double vandermonde_identity_residual(const std::vector<double>& theta);

/// Exact-arithmetic variant for rational inputs.
struct Rational {
    long long num = 0;
    long long den = 1;
};
struct ExactIdentityResult {
    bool exact_zero = false;
    std::string residual;  // "0" or the nonzero certificate as a fraction
};
ExactIdentityResult vandermonde_identity_exact(const std::vector<Rational>& theta);

/// Partial sum of sum_n e^{i 2 n pi eps} / (2 n pi + phi) with the +n/-n
/// terms combined before accumulation, against the closed form
/// i e^{-i phi eps} / (1 - e^{-i phi}) and the equivalent alternate form
/// e^{i (1/2 - eps) phi} / (2 sin(phi/2)).
struct FourierSeriesResult {
    std::complex<double> partial{0.0, 0.0};
    std::complex<double> closed{0.0, 0.0};
    std::complex<double> alternate{0.0, 0.0};
    double residual = 0.0;  // |partial - closed|
};
FourierSeriesResult fourier_series_sum(double phi, double eps, long m);

}  // namespace localize
