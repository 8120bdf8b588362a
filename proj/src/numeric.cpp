// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include <Eigen/Eigenvalues>

namespace localize {

SignLogDet sign_log_det(Eigen::MatrixXd a) {
    const Eigen::Index n = a.rows();
    SignLogDet r;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        double best = std::abs(a(k, k));
        for (Eigen::Index i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        }
        if (best == 0.0) {
            r.sign = 0;
            r.log_abs = 0.0;
            return r;
        }
        if (piv != k) {
            a.row(piv).swap(a.row(k));
            r.sign = -r.sign;
        }
        const double d = a(k, k);
        if (d < 0.0) r.sign = -r.sign;
        r.log_abs += std::log(std::abs(d));
        for (Eigen::Index i = k + 1; i < n; ++i) {
            const double f = a(i, k) / d;
            a.row(i).tail(n - k - 1) -= f * a.row(k).tail(n - k - 1);
        }
    }
    return r;
}

double det_ratio(const SignLogDet& num, const SignLogDet& den) {
    if (num.sign == 0) return 0.0;
    return num.sign * den.sign * std::exp(num.log_abs - den.log_abs);
}

double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric Jacobi matrix,
// weights are mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& offdiag, double mu0) {
    const Eigen::Index n = diag.size();
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        j(i, i) = diag(i);
        if (i + 1 < n) {
            j(i, i + 1) = offdiag(i);
            j(i + 1, i) = offdiag(i);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

QuadratureRule make_gauss_legendre_01(int order) {
    // Legendre on (-1,1): a_k = 0, b_k = k / sqrt(4k^2 - 1); mu0 = 2.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd off(order - 1);
    for (int k = 1; k < order; ++k)
        off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    QuadratureRule r = golub_welsch(diag, off, 2.0);
    for (int i = 0; i < order; ++i) {
        r.nodes[i] = 0.5 * (r.nodes[i] + 1.0);
        r.weights[i] *= 0.5;
    }
    return r;
}

QuadratureRule make_gauss_laguerre(int order) {
    // Laguerre (weight e^{-x}): a_k = 2k+1, b_k = k; mu0 = 1.
    Eigen::VectorXd diag(order), off(order - 1);
    for (int k = 0; k < order; ++k) diag(k) = 2.0 * k + 1.0;
    for (int k = 1; k < order; ++k) off(k - 1) = k;
    return golub_welsch(diag, off, 1.0);
}

const QuadratureRule& cached(std::map<int, QuadratureRule>& cache,
                             std::mutex& mtx, int order,
                             QuadratureRule (*make)(int)) {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make(order)).first;
    return it->second;
}

}  // namespace

const QuadratureRule& gauss_legendre_01(int order) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mtx;
    return cached(cache, mtx, order, &make_gauss_legendre_01);
}

const QuadratureRule& gauss_laguerre(int order) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mtx;
    return cached(cache, mtx, order, &make_gauss_laguerre);
}

}  // namespace localize
