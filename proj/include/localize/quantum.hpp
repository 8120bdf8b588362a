// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "localize/spectrum.hpp"

namespace localize {

/// Per-mode occupation cutoff for the truncated representation space; the
/// truncated basis has (m_max+1)^modes states.
struct FockTruncation {
    int m_max = 0;
    int modes = 1;
};

/// Direct occupation-number sum
///   e^{-i K c_{N+1} T} prod_a sum_{m=0}^{m_max} e^{-i mu_a T m}
/// with the union tail bound
///   |e^{-i K c_{N+1} T}| prod (1-r_a)^{-1} sum_a r_a^{m_max+1}/(1-r_a),
/// r_a = |e^{-i mu_a T}|. The level K enters only this overall phase; the
/// dependent occupation n_{N+1} = K-1+sum n_a never changes a summand
/// magnitude, so it is tracked analytically instead of being stored.
struct TruncatedTrace {
    std::complex<double> value{0.0, 0.0};
    double tail_bound = 0.0;
};
TruncatedTrace fock_trace_truncated(const QuantumParams& qp, const FockTruncation& tr);

/// Truncated coherent-state kernel
///   (2 pi)^{-N} prod_a sum_{m=0}^{m_max} e^{i m (phi_a - phi'_a)}.
/// On the diagonal each factor degenerates to m_max+1; the divergence flag is
/// set whenever some mode sits at phi_a = phi'_a (mod 2 pi).
struct OverlapResult {
    std::complex<double> value{0.0, 0.0};
    bool divergent = false;
};
OverlapResult coherent_overlap(const std::vector<double>& phi,
                               const std::vector<double>& phi_prime, int m_max);

/// Quadrature check of int d^N phi |phi><phi| = 1 on the truncated basis,
/// with the equispaced product rule on q nodes per angle. Exact (up to
/// roundoff) whenever q > 2 m_max; throws InsufficientNodes at or below that
/// threshold, where aliasing makes the check meaningless.
double resolution_of_unity_residual(int modes, int m_max, int q);

/// Both sides of the integer/image resummation identity instantiated with
/// the Gaussian f(p) = e^{-p^2/(2 sigma^2)} over the full integer range:
///   LHS = sum_{|m| <= m_cut} e^{i m phi} f(m),
///   RHS = sum_{|n| <= n_images} sqrt(2 pi) sigma e^{-sigma^2 (phi+2 pi n)^2/2}.
/// Returns |LHS - RHS|; both tails decay like Gaussians.
double poisson_resum_residual(double sigma, double phi, int n_images, int m_cut);

}  // namespace localize
