// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "localize/integrators.hpp"
#include "localize/report.hpp"
#include "localize/spectrum.hpp"

namespace localize {

/// Cross-tabulates every method applicable to the spectrum kind:
/// CP: dh_sum, det_form, residue, contour, quadrature, montecarlo;
/// CQ: closed, quadrature, exponential-importance montecarlo.
struct PartitionArgs {
    Spectrum spectrum;
    double tol = 1e-8;              // quadrature relative target
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    double lambda_cutoff = 1e4;     // contour half-width
    double contour_tol = 1e-3;      // TailDominates guard, relative
};
RunReport cmd_partition(const PartitionArgs& args);

/// Samples random chart points (or evaluates one given point) and reports
/// worst-case projector identities, FD-vs-analytic metric agreement and
/// empirical FD order, volume determinant, closedness residual, and the
/// two-route Hamiltonian trace.
struct GeometryArgs {
    Manifold kind = Manifold::CP;
    int n = 1;
    int points = 50;
    std::uint64_t seed = 0;
    std::optional<Eigen::VectorXcd> at;
    double h = 1e-5;
    double h_closedness = 1e-4;
};
RunReport cmd_geometry(const GeometryArgs& args);

/// Quantum battery: truncated Fock trace against the closed form, resolution
/// of unity, the paired Fourier series, and the Gaussian resummation check.
/// With fourier=true only the series rows run.
struct QuantumArgs {
    std::optional<QuantumParams> qp;
    int m_max = 40;
    int res_m_max = 0;  // 0: pick 5 (one mode) or 3 (several modes)
    int res_q = 0;      // 0: 16
    bool fourier = false;
    double phi = 3.141592653589793;
    double eps = 0.5;
    long m = 10000;
    double sigma = 1.0;
    int m_cut = 20;
    int n_images = 5;
};
RunReport cmd_quantum(const QuantumArgs& args);

/// Embedding battery at one CQ point: norm identity with its exact geometric
/// tail, level-wise energy against tr(Qh), and the pullback metric against
/// the analytic one, each with certified truncation bounds.
struct EmbedArgs {
    Eigen::VectorXcd xi;
    int n_max = 20;
    std::optional<std::vector<double>> theta;  // default N+1, N, ..., 1
    double rho = 1.0;
};
RunReport cmd_embed(const EmbedArgs& args);

/// Full battery at pinned seeds and tolerances; the reproducibility entry
/// point. wall_time_ms is fixed to 0 so repeated runs serialize identically.
RunReport cmd_suite(std::uint64_t seed);

}  // namespace localize
