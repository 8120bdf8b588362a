// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/quantum.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "localize/closed_forms.hpp"
#include "localize/numeric.hpp"

namespace localize {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr std::int64_t kBasisBudget = std::int64_t{1} << 24;

std::int64_t checked_basis_size(int modes, int m_max) {
    if (modes < 1 || m_max < 0)
        throw ParseError("Fock truncation needs modes >= 1 and m_max >= 0");
    std::int64_t dim = 1;
    for (int i = 0; i < modes; ++i) {
        dim *= m_max + 1;
        if (dim > kBasisBudget)
            throw BudgetExhausted("truncated Fock basis exceeds budget");
    }
    return dim;
}

}  // namespace

TruncatedTrace fock_trace_truncated(const QuantumParams& qp, const FockTruncation& tr) {
    if (tr.modes != qp.n)
        throw KindMismatch("fock_trace_truncated: truncation modes != quantum rank");
    checked_basis_size(tr.modes, tr.m_max);

    const std::complex<double> i{0.0, 1.0};
    const std::vector<double> mu = mu_vector(qp);

    std::complex<double> prod{1.0, 0.0};
    double tail_sum = 0.0, inv_gap_prod = 1.0;
    for (double m : mu) {
        const std::complex<double> x = std::exp(-i * m * qp.t);
        const double r = std::abs(x);
        if (!(r < 1.0)) {
            std::ostringstream os;
            os << "fock_trace_truncated: |e^{-i mu T}| = " << r << " >= 1 for mu = " << m;
            throw DivergentRegime(os.str());
        }
        std::complex<double> mode_sum{0.0, 0.0};
        std::complex<double> x_pow{1.0, 0.0};
        for (int occupation = 0; occupation <= tr.m_max; ++occupation) {
            mode_sum += x_pow;
            x_pow *= x;
        }
        prod *= mode_sum;
        inv_gap_prod /= 1.0 - r;
        tail_sum += std::pow(r, tr.m_max + 1) / (1.0 - r);
    }

    const std::complex<double> phase =
        std::exp(-i * static_cast<double>(qp.k) * qp.c[qp.n] * qp.t);

    TruncatedTrace out;
    out.value = phase * prod;
    out.tail_bound = std::abs(phase) * inv_gap_prod * tail_sum;

    const std::complex<double> closed = quantum_trace_closed(qp).value;
    if (std::abs(out.value - closed) > out.tail_bound + 1e-12 * (1.0 + std::abs(closed)))
        throw Error("fock_trace_truncated: distance to the closed form exceeds the tail bound");
    return out;
}

OverlapResult coherent_overlap(const std::vector<double>& phi,
                               const std::vector<double>& phi_prime, int m_max) {
    if (phi.size() != phi_prime.size() || phi.empty())
        throw ParseError("coherent_overlap: angle vectors must match and be nonempty");
    if (m_max < 0) throw ParseError("coherent_overlap: m_max must be >= 0");

    const std::complex<double> i{0.0, 1.0};
    OverlapResult out;
    out.value = 1.0;
    for (std::size_t a = 0; a < phi.size(); ++a) {
        const double d = phi[a] - phi_prime[a];
        const std::complex<double> x = std::exp(i * d);
        if (std::abs(x - 1.0) < 1e-14) out.divergent = true;
        std::complex<double> mode_sum{0.0, 0.0};
        std::complex<double> x_pow{1.0, 0.0};
        for (int m = 0; m <= m_max; ++m) {
            mode_sum += x_pow;
            x_pow *= x;
        }
        out.value *= mode_sum / (2.0 * kPi);
    }
    return out;
}

double resolution_of_unity_residual(int modes, int m_max, int q) {
    const std::int64_t dim = checked_basis_size(modes, m_max);
    if (q <= 2 * m_max)
        throw InsufficientNodes(
            "resolution_of_unity_residual: need q > 2*m_max equispaced nodes");

    std::int64_t node_count = 1;
    for (int i = 0; i < modes; ++i) {
        node_count *= q;
        if (node_count > kBasisBudget)
            throw BudgetExhausted("resolution check node grid exceeds budget");
    }

    const std::complex<double> i{0.0, 1.0};
    // <m|phi><phi|m'> = (2 pi)^{-modes} e^{-i (m - m') . phi}; the product
    // rule weight is (2 pi / q)^{modes}, so each node contributes q^{-modes}.
    const double node_weight = std::pow(static_cast<double>(q), -modes);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    std::vector<int> mi(modes), mj(modes), node(modes);
    for (std::int64_t nd = 0; nd < node_count; ++nd) {
        std::int64_t rest = nd;
        for (int a = 0; a < modes; ++a) {
            node[a] = static_cast<int>(rest % q);
            rest /= q;
        }
        // Per-mode phases e^{-i m phi} for m = 0..m_max.
        Eigen::MatrixXcd mode_phase(modes, m_max + 1);
        for (int a = 0; a < modes; ++a) {
            const double angle = 2.0 * kPi * node[a] / q;
            for (int m = 0; m <= m_max; ++m)
                mode_phase(a, m) = std::exp(-i * (angle * m));
        }
        Eigen::VectorXcd ket(dim);
        for (std::int64_t row = 0; row < dim; ++row) {
            std::int64_t r = row;
            std::complex<double> v{1.0, 0.0};
            for (int a = 0; a < modes; ++a) {
                v *= mode_phase(a, static_cast<int>(r % (m_max + 1)));
                r /= m_max + 1;
            }
            ket(row) = v;
        }
        acc.noalias() += node_weight * (ket * ket.adjoint());
    }

    double residual = 0.0;
    for (std::int64_t r = 0; r < dim; ++r)
        for (std::int64_t c = 0; c < dim; ++c) {
            const std::complex<double> target = (r == c) ? 1.0 : 0.0;
            residual = std::max(residual, std::abs(acc(r, c) - target));
        }
    return residual;
}

double poisson_resum_residual(double sigma, double phi, int n_images, int m_cut) {
    if (!(sigma > 0.0)) throw ParseError("poisson_resum_residual: sigma must be > 0");
    if (n_images < 1 || m_cut < 1)
        throw ParseError("poisson_resum_residual: n_images and m_cut must be >= 1");

    KahanSum lhs;
    lhs.add(1.0);  // m = 0
    for (int m = 1; m <= m_cut; ++m)
        lhs.add(2.0 * std::cos(m * phi) * std::exp(-0.5 * m * m / (sigma * sigma)));

    KahanSum rhs;
    const double front = std::sqrt(2.0 * kPi) * sigma;
    for (int n = -n_images; n <= n_images; ++n) {
        const double x = phi + 2.0 * kPi * n;
        rhs.add(front * std::exp(-0.5 * sigma * sigma * x * x));
    }
    return std::abs(lhs.value() - rhs.value());
}

}  // namespace localize
