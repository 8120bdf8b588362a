// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "localize/numeric.hpp"

namespace localize {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// s^k with s^0 = 1 and higher powers read off the stored level norms.
double stored_power(const TruncatedEmbedding& e, int k) {
    if (k == 0) return 1.0;
    return e.levels[static_cast<std::size_t>(k) - 1].squaredNorm();
}

}  // namespace

TruncatedEmbedding embed(const ChartPoint& p, int n_max, std::int64_t budget) {
    if (p.kind != Manifold::CQ) throw KindMismatch("embed expects a CQ point");
    const double s = norm_sq(p);
    if (!(s < 1.0)) throw OutOfChart("embed: xi^dag xi must be < 1");
    if (n_max < 1) throw BudgetExhausted("embed: n_max must be >= 1");

    const std::int64_t n = p.rank();
    std::int64_t level_dim = 1, total = 0;
    for (int j = 1; j <= n_max; ++j) {
        if (level_dim > budget / n) throw BudgetExhausted("embed: level dimension exceeds budget");
        level_dim *= n;
        total += level_dim;
        if (total > budget || n_max * level_dim > budget)
            throw BudgetExhausted("embed: tensor tower exceeds budget");
    }

    TruncatedEmbedding e;
    e.base = p;
    e.n_max = n_max;
    e.levels.reserve(n_max);
    e.levels.push_back(p.xi);
    for (int j = 2; j <= n_max; ++j) {
        const Vec& prev = e.levels.back();
        Vec next(prev.size() * n);
        for (Eigen::Index i = 0; i < prev.size(); ++i)
            for (Eigen::Index k = 0; k < n; ++k)
                next(i * n + k) = prev(i) * p.xi(k);
        e.levels.push_back(std::move(next));
    }
    return e;
}

NormIdentity embed_norm_residual(const TruncatedEmbedding& e) {
    const double s = norm_sq(e.base);

    KahanSum sum;
    for (const Vec& lvl : e.levels) sum.add(lvl.squaredNorm());

    NormIdentity out;
    out.truncated = sum.value();
    out.exact = s / (1.0 - s);
    out.tail_bound = std::pow(s, e.n_max + 1) / (1.0 - s);
    if (std::abs(out.exact - out.truncated) >
        out.tail_bound + 1e-12 * (1.0 + out.exact))
        throw Error("embed_norm_residual: truncation gap exceeds the geometric tail");
    return out;
}

EnergySplit universal_energy(const TruncatedEmbedding& e, const Spectrum& spectrum) {
    if (spectrum.kind != Manifold::CQ)
        throw KindMismatch("universal_energy expects a CQ spectrum");
    if (spectrum.rank() != e.base.rank())
        throw KindMismatch("universal_energy: embedding and spectrum ranks differ");

    const double s = norm_sq(e.base);
    double q = 0.0;  // xi^dag th~ xi
    for (int a = 0; a < spectrum.rank(); ++a)
        q += spectrum.theta[a + 1] * std::norm(e.base.xi(a));

    const double theta0 = spectrum.theta[0];
    KahanSum level_sum;
    level_sum.add(theta0);
    double s_pow = 1.0;  // s^{n-2}
    for (int n = 2; n <= e.n_max; ++n) {
        level_sum.add((n * theta0 * s - (n - 1) * q) * s_pow);
        s_pow *= s;
    }

    const double theta_tilde_max =
        *std::max_element(spectrum.theta.begin() + 1, spectrum.theta.end());

    EnergySplit out;
    out.truncated = (1.0 - s) * level_sum.value();
    out.exact = (theta0 - q) / (1.0 - s);
    out.tail_bound =
        (theta0 + theta_tilde_max) * e.n_max * std::pow(s, e.n_max - 1) / (1.0 - s);
    if (std::abs(out.exact - out.truncated) >
        out.tail_bound + 1e-12 * (1.0 + std::abs(out.exact)))
        throw Error("universal_energy: truncation error exceeds its certified bound");
    return out;
}

MetricCoefficients pullback_metric(const TruncatedEmbedding& e) {
    if (e.n_max < 2)
        throw BudgetExhausted("pullback_metric needs n_max >= 2");
    const int n = e.base.rank();

    // Level n contributes n s^{n-1} to J^dag J on the identity, n(n-1) s^{n-2}
    // on xi xi^dag (the two product-rule insertions hitting equal/unequal
    // slots), and n s^{n-1} xi to J^dag xi-hat.
    KahanSum shat, a_sum, b_sum;
    for (int lvl = 1; lvl <= e.n_max; ++lvl) {
        shat.add(stored_power(e, lvl));
        a_sum.add(lvl * stored_power(e, lvl - 1));
        if (lvl >= 2) b_sum.add(static_cast<double>(lvl) * (lvl - 1) * stored_power(e, lvl - 2));
    }
    const double one_plus = 1.0 + shat.value();
    const double a = a_sum.value();
    const double b = b_sum.value();

    const Mat outer = e.base.xi * e.base.xi.adjoint();
    MetricCoefficients out;
    out.g = (a * Mat::Identity(n, n) + (b - a * a / one_plus) * outer) / one_plus;
    return out;
}

double pullback_metric_tail_bound(const TruncatedEmbedding& e) {
    const double s = norm_sq(e.base);

    double shat_t = 0.0, a_t = 0.0, b_t = 0.0;
    for (int lvl = 1; lvl <= e.n_max; ++lvl) {
        shat_t += std::pow(s, lvl);
        a_t += lvl * std::pow(s, lvl - 1);
        if (lvl >= 2) b_t += static_cast<double>(lvl) * (lvl - 1) * std::pow(s, lvl - 2);
    }
    const double shat_inf = s / (1.0 - s);
    const double a_inf = 1.0 / ((1.0 - s) * (1.0 - s));
    const double b_inf = 2.0 / ((1.0 - s) * (1.0 - s) * (1.0 - s));
    const double d_shat = std::max(0.0, shat_inf - shat_t);
    const double d_a = std::max(0.0, a_inf - a_t);
    const double d_b = std::max(0.0, b_inf - b_t);

    const double pt = 1.0 + shat_t;
    const double pi = 1.0 + shat_inf;
    // Triangle inequality over G = (A I + B M - A^2 M/(1+shat))/(1+shat) with
    // ||M|| = s; every tail is an exact geometric remainder.
    const double term1 = d_shat * (a_inf + b_inf * s) / (pt * pi);
    const double term2 = d_a / pt;
    const double term3 = d_b * s / pt;
    const double term4 =
        ((a_inf + a_t) * d_a + 2.0 * a_inf * a_inf * d_shat / pt) * s / (pt * pt);
    return term1 + term2 + term3 + term4;
}

}  // namespace localize
