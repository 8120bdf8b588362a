// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "localize/geometry.hpp"
#include "localize/spectrum.hpp"

namespace localize {

/// Truncated tensor tower (xi, xi (x) xi, ..., xi^{(x) n_max}) realizing the
/// unit-ball point inside the projectivized sequence space. Level n has
/// dimension N^n; levels are materialized, derivative contractions are not.
struct TruncatedEmbedding {
    ChartPoint base;  // CQ point
    int n_max = 1;
    std::vector<Eigen::VectorXcd> levels;  // levels[j] = xi^{(x) (j+1)}
};

/// Materializes levels 1..n_max. Throws BudgetExhausted when the stored
/// dimension sum or n_max * N^{n_max} exceeds the budget.
TruncatedEmbedding embed(const ChartPoint& p, int n_max,
                         std::int64_t budget = std::int64_t{1} << 22);

/// The tower's squared norm against its closed form s/(1-s): the truncation
/// gap is exactly the geometric tail s^{n_max+1}/(1-s).
struct NormIdentity {
    double truncated = 0.0;   // sum of stored level norms
    double exact = 0.0;       // s/(1-s)
    double tail_bound = 0.0;  // s^{n_max+1}/(1-s)
};
NormIdentity embed_norm_residual(const TruncatedEmbedding& e);

/// Level-wise energy (1-s)[theta_0 + sum_{n=2}^{n_max} (n theta_0 s -
/// (n-1) xi^dag th~ xi) s^{n-2}] against the closed form
/// (theta_0 - xi^dag th~ xi)/(1-s), with the certified truncation bound
/// (theta_0 + max th~) n_max s^{n_max-1}/(1-s).
struct EnergySplit {
    double truncated = 0.0;
    double exact = 0.0;
    double tail_bound = 0.0;
};
EnergySplit universal_energy(const TruncatedEmbedding& e, const Spectrum& s);

/// Ambient Fubini-Study metric of the truncated tower contracted with the
/// Jacobian of xi -> xi^{(x) n} (n product-rule insertions per level; powers
/// of s are read off the stored level norms). Converges to the CQ metric as
/// n_max grows. Requires n_max >= 2.
MetricCoefficients pullback_metric(const TruncatedEmbedding& e);

/// Rigorous max-entry bound on |pullback_metric(e) - metric_analytic(CQ)|
/// from the exact geometric tails of the three truncated sums.
double pullback_metric_tail_bound(const TruncatedEmbedding& e);

}  // namespace localize
