// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "localize/spectrum.hpp"

namespace localize {

/// Knobs shared by the numerical oracles. For the Monte-Carlo estimators
/// max_evals is the total sample count; for quadratures it caps integrand
/// evaluations across the refinement ladder.
struct IntegratorConfig {
    double tol = 1e-8;
    std::int64_t max_evals = 50'000'000;
    std::uint64_t seed = 0;
    double lambda_cutoff = 1e4;  // half-width of the numeric contour
};

void validate_config(const IntegratorConfig& cfg);

/// Number of parallel workers used by the Monte-Carlo shards. Respects the
/// LOCALIZE_THREADS environment variable. Results never depend on it: work is
/// cut into a fixed number of shards with per-shard streams and reduced in
/// shard order.
int worker_count();

/// Tensor Gauss-Legendre evaluation of the chart-coordinate integral
///   Z = int_{u > 0} prod du (1 + sum u)^{-(N+1)}
///         exp[-rho (theta_0 + sum theta_a u_a)/(1 + sum u)],
/// rewritten over the standard simplex via t_a = u_a/(1 + sum u) where the
/// integrand is entire. Orders 8 -> 16 -> 32 -> 64 per axis until successive
/// refinements differ by less than tol (relative); err is the last delta.
PartitionEstimate z_cpn_quadrature(const Spectrum& s, const IntegratorConfig& cfg);

/// Uniform sphere sampling: z drawn as a normalized complex Gaussian vector
/// in C^{N+1}, Z = mean(exp(-rho z^dag h z)) / N! with the standard error of
/// the mean as err. Deterministic for fixed (inputs, seed, samples).
PartitionEstimate z_cpn_montecarlo(const Spectrum& s, const IntegratorConfig& cfg);

/// Gauss-Laguerre per axis on the exponential form reached through
/// x_a = u_a/(1 - sum u):
///   Z = e^{-rho theta_0} prod_a int_0^inf e^{-rho (theta_0-theta_a) x} dx.
/// rho is absorbed into each axis variable; the remaining e^{(1-gap) t}
/// factor is left to the quadrature so the theta dependence stays genuinely
/// tested.
PartitionEstimate z_cqn_quadrature(const Spectrum& s, const IntegratorConfig& cfg);

/// Importance sampling with a unit-rate exponential proposal and weights
/// exp[sum (1 - rho (theta_0 - theta_a)) x_a]; value = e^{-rho theta_0} times
/// the weighted mean. Throws WeightOverflow when some rho (theta_0 - theta_a)
/// <= 1/2 (the weight variance diverges there; use the quadrature instead).
PartitionEstimate z_cqn_exponential_mc(const Spectrum& s, const IntegratorConfig& cfg);

/// Panel integration of (1/2pi) int_{-L}^{L} e^{i lambda} prod (rho theta_a +
/// i lambda)^{-1} d lambda with the analytic tail bound L^{-N}/(pi N) folded
/// into err. Cross-checked against the pole sum; throws TailDominates when
/// the tail bound alone exceeds tol relative to it.
PartitionEstimate z_cpn_contour(const Spectrum& s, const IntegratorConfig& cfg);

}  // namespace localize
