// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace localize {

const char* manifold_name(Manifold kind) {
    return kind == Manifold::CP ? "cp" : "cq";
}

Manifold manifold_from_string(const std::string& s) {
    if (s == "cp" || s == "CP") return Manifold::CP;
    if (s == "cq" || s == "CQ") return Manifold::CQ;
    throw ParseError("unknown manifold kind '" + s + "' (expected cp or cq)");
}

Spectrum validate_spectrum(Manifold kind, std::vector<double> theta, double rho) {
    if (theta.size() < 2)
        throw OrderingViolation("spectrum needs at least two levels (N >= 1)");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw NonPositiveRho("rho must be a positive finite real");
    for (double t : theta)
        if (!std::isfinite(t)) throw OrderingViolation("theta entries must be finite");

    const std::size_t n1 = theta.size();
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = a + 1; b < n1; ++b)
            if (theta[a] == theta[b]) {
                std::ostringstream os;
                os << "coincident levels theta[" << a << "] == theta[" << b << "]";
                throw DegenerateSpectrum(os.str());
            }

    if (kind == Manifold::CP) {
        // Positivity matters: the contour representation picks up exactly the
        // poles in the upper half-plane, i.e. all of them only when theta > 0.
        if (!(theta.front() > 0.0))
            throw OrderingViolation("CP spectrum must satisfy 0 < theta_0");
        for (std::size_t a = 0; a + 1 < n1; ++a)
            if (!(theta[a] < theta[a + 1]))
                throw OrderingViolation("CP spectrum must satisfy theta_0 < theta_1 < ... < theta_N");
    } else {
        for (std::size_t a = 0; a + 1 < n1; ++a)
            if (!(theta[a] > theta[a + 1]))
                throw OrderingViolation("CQ spectrum must satisfy theta_0 > theta_1 > ... > theta_N");
        if (!(theta.back() > 0.0))
            throw OrderingViolation("CQ spectrum must satisfy theta_N > 0");
    }

    double max_abs = 0.0;
    for (double t : theta) max_abs = std::max(max_abs, std::abs(t));
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a + 1 < n1; ++a)
        min_gap = std::min(min_gap, std::abs(theta[a + 1] - theta[a]));

    Spectrum s;
    s.kind = kind;
    s.theta = std::move(theta);
    s.rho = rho;
    s.conditioning_warning = (min_gap < 1e-6 * max_abs);
    return s;
}

ChartPoint make_chart_point(Manifold kind, Eigen::VectorXcd xi) {
    if (xi.size() < 1) throw OutOfChart("chart point needs at least one coordinate");
    if (kind == Manifold::CQ) {
        const double s = xi.squaredNorm();
        if (!(s < 1.0)) {
            std::ostringstream os;
            os << "CQ chart requires xi^dag xi < 1, got " << s;
            throw OutOfChart(os.str());
        }
    }
    ChartPoint p;
    p.kind = kind;
    p.xi = std::move(xi);
    return p;
}

double norm_sq(const ChartPoint& p) { return p.xi.squaredNorm(); }

QuantumParams make_quantum_params(int n, int k, std::vector<double> c,
                                  std::complex<double> t) {
    if (n < 1) throw ParseError("quantum rank N must be >= 1");
    if (k < n) throw ParseError("level K must be >= N");
    if (c.size() != static_cast<std::size_t>(n) + 1)
        throw ParseError("couplings c must have N+1 entries");
    QuantumParams qp;
    qp.n = n;
    qp.k = k;
    qp.c = std::move(c);
    qp.t = t;
    return qp;
}

std::vector<double> mu_vector(const QuantumParams& qp) {
    std::vector<double> mu(qp.n);
    for (int a = 0; a < qp.n; ++a) mu[a] = qp.c[a] + qp.c[qp.n];
    return mu;
}

bool convergent_regime(const QuantumParams& qp) {
    for (double m : mu_vector(qp)) {
        // |e^{-i m T}| = e^{m Im(T)}
        if (!(m * qp.t.imag() < 0.0)) return false;
    }
    return true;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::dh_sum: return "dh_sum";
        case Method::det_form: return "det_form";
        case Method::residue: return "residue";
        case Method::contour: return "contour";
        case Method::quadrature: return "quadrature";
        case Method::montecarlo: return "montecarlo";
        case Method::fock_truncated: return "fock_truncated";
        case Method::closed: return "closed";
    }
    return "unknown";
}

}  // namespace localize
