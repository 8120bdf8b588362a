// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/geometry.hpp"

#include <cmath>
#include <vector>

namespace localize {

namespace {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat assemble(const Vec& xi, double denom, double sign) {
    const int n = static_cast<int>(xi.size());
    Mat p(n + 1, n + 1);
    p(0, 0) = 1.0;
    p.block(0, 1, 1, n) = sign * xi.adjoint();
    p.block(1, 0, n, 1) = xi;
    p.block(1, 1, n, n) = sign * (xi * xi.adjoint());
    return p / denom;
}

Mat eta_matrix(int n1) {
    Mat e = Mat::Identity(n1, n1);
    for (int i = 1; i < n1; ++i) e(i, i) = -1.0;
    return e;
}

void check_cq_chart(const Vec& xi) {
    if (!(xi.squaredNorm() < 1.0))
        throw OutOfChart("CQ projector needs xi^dag xi < 1");
}

// Holomorphic and antiholomorphic Wirtinger derivatives of f at p along
// coordinate a, by central differences of step h.
template <typename F>
void wirtinger_fd(const F& f, const ChartPoint& p, int a, double h,
                  Mat& d_hol, Mat& d_anti) {
    const Cplx i{0.0, 1.0};
    ChartPoint q = p;

    q.xi = p.xi;
    q.xi(a) += h;
    const Mat fpr = f(q);
    q.xi = p.xi;
    q.xi(a) -= h;
    const Mat fmr = f(q);
    q.xi = p.xi;
    q.xi(a) += i * h;
    const Mat fpi = f(q);
    q.xi = p.xi;
    q.xi(a) -= i * h;
    const Mat fmi = f(q);

    const Mat d_re = (fpr - fmr) / (2.0 * h);
    const Mat d_im = (fpi - fmi) / (2.0 * h);
    d_hol = 0.5 * (d_re - i * d_im);
    d_anti = 0.5 * (d_re + i * d_im);
}

void check_fd_preconditions(const ChartPoint& p, double h) {
    if (!(h >= 1e-7 && h <= 1e-3))
        throw StepTooLarge("finite-difference step must lie in [1e-7, 1e-3]");
    if (p.kind == Manifold::CQ) {
        const double s = norm_sq(p);
        if (!(s < 1.0)) throw OutOfChart("CQ point outside the unit ball");
        if (s > 0.99)
            throw StepTooLarge("CQ finite differences rejected for s > 0.99");
        // Worst perturbed norm: |xi| + h along one coordinate.
        const double r = std::sqrt(s) + h;
        if (!(r * r < 1.0))
            throw StepTooLarge("finite-difference step leaves the unit ball");
    }
}

}  // namespace

Projector projector_cp(const ChartPoint& p) {
    if (p.kind != Manifold::CP) throw KindMismatch("projector_cp expects a CP point");
    return {Manifold::CP, assemble(p.xi, 1.0 + norm_sq(p), +1.0)};
}

Projector projector_cq(const ChartPoint& p) {
    if (p.kind != Manifold::CQ) throw KindMismatch("projector_cq expects a CQ point");
    check_cq_chart(p.xi);
    return {Manifold::CQ, assemble(p.xi, 1.0 - norm_sq(p), -1.0)};
}

Projector projector(const ChartPoint& p) {
    return p.kind == Manifold::CP ? projector_cp(p) : projector_cq(p);
}

double projector_idempotency_defect(const Projector& p) {
    return (p.mat * p.mat - p.mat).cwiseAbs().maxCoeff();
}

double projector_symmetry_defect(const Projector& p) {
    if (p.kind == Manifold::CP)
        return (p.mat.adjoint() - p.mat).cwiseAbs().maxCoeff();
    const Mat eta = eta_matrix(static_cast<int>(p.mat.rows()));
    return (eta * p.mat.adjoint() * eta - p.mat).cwiseAbs().maxCoeff();
}

double projector_trace_defect(const Projector& p) {
    return std::abs(p.mat.trace() - Cplx{1.0, 0.0});
}

MetricCoefficients metric_analytic(const ChartPoint& p) {
    const int n = p.rank();
    const double s = norm_sq(p);
    MetricCoefficients out;
    if (p.kind == Manifold::CP) {
        out.g = (Mat::Identity(n, n) - (p.xi * p.xi.adjoint()) / (1.0 + s)) / (1.0 + s);
    } else {
        check_cq_chart(p.xi);
        out.g = (Mat::Identity(n, n) + (p.xi * p.xi.adjoint()) / (1.0 - s)) / (1.0 - s);
    }
    return out;
}

MetricCoefficients metric_fd(const ChartPoint& p, double h) {
    check_fd_preconditions(p, h);
    const int n = p.rank();

    const auto proj = [](const ChartPoint& q) { return projector(q).mat; };
    const Mat pm = projector(p).mat;

    std::vector<Mat> d_hol(n), d_anti(n);
    for (int a = 0; a < n; ++a) wirtinger_fd(proj, p, a, h, d_hol[a], d_anti[a]);

    // The eta-twisted CQ chart flips the orientation of the trace form; the
    // sign is pinned by the positive-definite convention (G = 1_N at xi = 0).
    const double orient = (p.kind == Manifold::CP) ? 1.0 : -1.0;

    MetricCoefficients out;
    out.g.resize(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.g(a, b) =
                orient * (pm * (d_anti[a] * d_hol[b] - d_hol[b] * d_anti[a])).trace();

    out.spurious = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const Cplx v = (pm * (d_hol[a] * d_hol[b] - d_hol[b] * d_hol[a])).trace();
            out.spurious = std::max(out.spurious, std::abs(v));
        }
    return out;
}

double volume_density(const ChartPoint& p) {
    const double s = norm_sq(p);
    const double det = metric_analytic(p).g.determinant().real();
    const double closed = (p.kind == Manifold::CP)
                              ? std::pow(1.0 + s, -(p.rank() + 1))
                              : std::pow(1.0 - s, -(p.rank() + 1));
    if (std::abs(det - closed) > 1e-12 * std::max(std::abs(det), std::abs(closed)))
        throw Error("volume_density: det G disagrees with the closed-form density");
    return det;
}

double kahler_closedness_residual(const ChartPoint& p, double h) {
    check_fd_preconditions(p, h);
    const int n = p.rank();

    const auto metric = [](const ChartPoint& q) { return metric_analytic(q).g; };
    std::vector<Mat> d_hol(n);
    Mat unused;
    for (int c = 0; c < n; ++c) wirtinger_fd(metric, p, c, h, d_hol[c], unused);

    double residual = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                residual = std::max(residual,
                                    std::abs(d_hol[c](a, b) - d_hol[b](a, c)));
    // N = 1 has no (b,c) pair; d omega vanishes identically there.
    return residual;
}

double hamiltonian_trace(const ChartPoint& p, const Spectrum& s) {
    if (p.kind != s.kind)
        throw KindMismatch("hamiltonian_trace: point and spectrum kinds differ");
    if (p.rank() != s.rank())
        throw KindMismatch("hamiltonian_trace: point and spectrum ranks differ");

    const Mat pm = projector(p).mat;
    Cplx tr = 0.0;
    for (int a = 0; a <= s.rank(); ++a) tr += pm(a, a) * s.theta[a];
    const double matrix_route = tr.real();

    const double sq = norm_sq(p);
    double weighted = 0.0;
    for (int a = 0; a < s.rank(); ++a)
        weighted += s.theta[a + 1] * std::norm(p.xi(a));
    const double closed_route = (p.kind == Manifold::CP)
                                    ? (s.theta[0] + weighted) / (1.0 + sq)
                                    : (s.theta[0] - weighted) / (1.0 - sq);

    const double scale = std::max({1.0, std::abs(matrix_route), std::abs(closed_route)});
    if (std::abs(matrix_route - closed_route) > 1e-12 * scale)
        throw Error("hamiltonian_trace: matrix and closed-form routes disagree");
    return closed_route;
}

}  // namespace localize
