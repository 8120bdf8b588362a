// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "localize/spectrum.hpp"

namespace localize {

/// Rank-one (eta-)Hermitian idempotent of unit trace in N+1 dimensions.
struct Projector {
    Manifold kind = Manifold::CP;
    Eigen::MatrixXcd mat;
};

/// P = (1 + xi^dag xi)^{-1} [[1, xi^dag], [xi, xi xi^dag]]
Projector projector_cp(const ChartPoint& p);

/// Q = (1 - xi^dag xi)^{-1} [[1, -xi^dag], [xi, -xi xi^dag]], defined on the
/// open unit ball. Satisfies Q^2 = Q, eta Q^dag eta = Q with
/// eta = diag(1,-1,...,-1), tr Q = 1.
Projector projector_cq(const ChartPoint& p);

/// Dispatch on the point's kind.
Projector projector(const ChartPoint& p);

// Defects of the defining identities; all should sit at roundoff level.
double projector_idempotency_defect(const Projector& p);
double projector_symmetry_defect(const Projector& p);  // P^dag=P resp. eta Q^dag eta=Q
double projector_trace_defect(const Projector& p);

/// Coefficient matrix G of the (1,1)-form sum G_{ab} dxi*_a ^ dxi_b, plus the
/// largest spurious (2,0)/(0,2) coefficient seen by the finite-difference
/// extractor (identically 0 for the analytic constructors).
struct MetricCoefficients {
    Eigen::MatrixXcd g;
    double spurious = 0.0;
};

/// CP: G = (1+s)^{-1} (1 - xi xi^dag/(1+s));
/// CQ: G = (1-s)^{-1} (1 + xi xi^dag/(1-s)), with s = xi^dag xi.
MetricCoefficients metric_analytic(const ChartPoint& p);

/// Extracts G from tr(P dP ^ dP) by central differences of the projector
/// constructor along real/imaginary coordinate steps (Wirtinger convention
/// d/dxi = (d/dRe - i d/dIm)/2); independent of the analytic formulas above.
/// h must lie in [1e-7, 1e-3]; CQ points with s > 0.99 are rejected.
MetricCoefficients metric_fd(const ChartPoint& p, double h);

/// det G; checked against the closed-form density (1 +/- s)^{-(N+1)}.
double volume_density(const ChartPoint& p);

/// Max over (a,b,c) of |d_c G_{ab} - d_b G_{ac}| by central differences:
/// the (2,1)-coefficient of d omega, which vanishes for a closed (1,1)-form.
double kahler_closedness_residual(const ChartPoint& p, double h);

/// tr(P diag(theta)), evaluated both matrix-wise and through the rational
/// closed form (theta_0 +/- sum theta_a |xi_a|^2)/(1 +/- s); the two routes
/// must agree to 1e-12.
double hamiltonian_trace(const ChartPoint& p, const Spectrum& s);

}  // namespace localize
