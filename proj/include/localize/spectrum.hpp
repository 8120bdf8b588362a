// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "localize/errors.hpp"

namespace localize {

enum class Manifold { CP, CQ };

const char* manifold_name(Manifold kind);
Manifold manifold_from_string(const std::string& s);

/// Diagonal classical Hamiltonian spectrum theta_0..theta_N at inverse
/// temperature rho. Ordering is a correctness contract, not a normalization:
/// CP requires strictly increasing theta, CQ strictly decreasing with
/// theta_N > 0. Entries are kept in input order.
struct Spectrum {
    Manifold kind = Manifold::CP;
    std::vector<double> theta;
    double rho = 1.0;
    // Set when min pairwise gap < 1e-6 * max|theta|; residue/gap-product
    // denominators lose most of their precision in that regime.
    bool conditioning_warning = false;

    int rank() const { return static_cast<int>(theta.size()) - 1; }  // N
};

/// Validates ordering, distinctness and rho > 0.
/// Throws OrderingViolation, DegenerateSpectrum or NonPositiveRho.
Spectrum validate_spectrum(Manifold kind, std::vector<double> theta, double rho);

/// Local coordinate xi in the chart of CP^N (all of C^N) or CQ^N (the open
/// unit ball xi^dag xi < 1).
struct ChartPoint {
    Manifold kind = Manifold::CP;
    Eigen::VectorXcd xi;

    int rank() const { return static_cast<int>(xi.size()); }  // N
};

ChartPoint make_chart_point(Manifold kind, Eigen::VectorXcd xi);

/// s = xi^dag xi
double norm_sq(const ChartPoint& p);

/// Parameters of the quantum trace: rank N, level K, couplings c_1..c_{N+1}
/// and complex time T.
struct QuantumParams {
    int n = 1;
    int k = 1;
    std::vector<double> c;  // size n+1
    std::complex<double> t{0.0, -1.0};
};

QuantumParams make_quantum_params(int n, int k, std::vector<double> c,
                                  std::complex<double> t);

/// mu_alpha = c_alpha + c_{N+1}, alpha = 1..N
std::vector<double> mu_vector(const QuantumParams& qp);

/// True when every |e^{-i mu_alpha T}| < 1 (equivalently mu_alpha*Im(T) < 0);
/// the geometric occupation sums converge absolutely only in this regime.
bool convergent_regime(const QuantumParams& qp);

enum class Method {
    dh_sum,
    det_form,
    residue,
    contour,
    quadrature,
    montecarlo,
    fock_truncated,
    closed,
};

const char* method_name(Method m);

/// One estimate of a partition function: value, producing method, an error
/// estimate (0 for exact closed forms, certified/statistical otherwise) and
/// the sample count (0 when deterministic).
struct PartitionEstimate {
    std::complex<double> value{0.0, 0.0};
    Method method = Method::closed;
    double err = 0.0;
    std::int64_t samples = 0;

    double real() const { return value.real(); }
};

}  // namespace localize
