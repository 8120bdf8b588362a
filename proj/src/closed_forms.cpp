// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "localize/numeric.hpp"

namespace localize {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_kind(const Spectrum& s, Manifold kind, const char* op) {
    if (s.kind != kind)
        throw KindMismatch(std::string(op) + ": spectrum kind does not match");
}

void require_distinct(const std::vector<double>& theta) {
    for (std::size_t a = 0; a < theta.size(); ++a)
        for (std::size_t b = a + 1; b < theta.size(); ++b)
            if (theta[a] == theta[b])
                throw DegenerateSpectrum("coincident theta entries");
}

Eigen::MatrixXd vandermonde(const std::vector<double>& theta) {
    const int n1 = static_cast<int>(theta.size());
    Eigen::MatrixXd m(n1, n1);
    for (int col = 0; col < n1; ++col) {
        double p = 1.0;
        for (int row = 0; row < n1; ++row) {
            m(row, col) = p;
            p *= theta[col];
        }
    }
    return m;
}

}  // namespace

PartitionEstimate z_cpn_dh(const Spectrum& s) {
    require_kind(s, Manifold::CP, "z_cpn_dh");
    require_distinct(s.theta);
    const int n1 = static_cast<int>(s.theta.size());
    const int n = n1 - 1;

    std::vector<int> order(n1);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.theta[a] < s.theta[b]; });

    KahanSum sum;
    const double rho_n = std::pow(s.rho, n);
    for (int a : order) {
        double gaps = 1.0;
        for (int b = 0; b < n1; ++b)
            if (b != a) gaps *= s.theta[b] - s.theta[a];
        sum.add(std::exp(-s.rho * s.theta[a]) / (rho_n * gaps));
    }

    PartitionEstimate out;
    out.value = sum.value();
    out.method = Method::dh_sum;
    return out;
}

PartitionEstimate z_cpn_det(const Spectrum& s) {
    require_kind(s, Manifold::CP, "z_cpn_det");
    require_distinct(s.theta);
    const int n1 = static_cast<int>(s.theta.size());
    const int n = n1 - 1;

    Eigen::MatrixXd num(n1, n1);
    for (int col = 0; col < n1; ++col) {
        num(0, col) = std::exp(-s.rho * s.theta[col]);
        double p = 1.0;
        for (int row = 1; row < n1; ++row) {
            num(row, col) = p;
            p *= s.theta[col];
        }
    }
    const SignLogDet ln = sign_log_det(std::move(num));
    const SignLogDet ld = sign_log_det(vandermonde(s.theta));
    if (ld.sign == 0) throw DegenerateSpectrum("singular Vandermonde denominator");

    PartitionEstimate out;
    if (ln.sign == 0) {
        out.value = 0.0;
    } else {
        out.value = ln.sign * ld.sign *
                    std::exp(ln.log_abs - ld.log_abs - n * std::log(s.rho));
    }
    out.method = Method::det_form;
    return out;
}

PartitionEstimate z_cpn_residue(const Spectrum& s) {
    require_kind(s, Manifold::CP, "z_cpn_residue");
    require_distinct(s.theta);
    const int n1 = static_cast<int>(s.theta.size());

    std::vector<int> order(n1);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return s.theta[a] < s.theta[b]; });

    KahanSum sum;
    for (int a : order) {
        double term = std::exp(-s.rho * s.theta[a]);
        for (int b = 0; b < n1; ++b)
            if (b != a) term /= s.rho * (s.theta[b] - s.theta[a]);
        sum.add(term);
    }

    PartitionEstimate out;
    out.value = sum.value();
    out.method = Method::residue;
    return out;
}

PartitionEstimate z_cqn_det(const Spectrum& s) {
    require_kind(s, Manifold::CQ, "z_cqn_det");
    require_distinct(s.theta);
    const int n1 = static_cast<int>(s.theta.size());
    const int n = n1 - 1;

    Eigen::MatrixXd num = Eigen::MatrixXd::Zero(n1, n1);
    num(0, 0) = std::exp(-s.rho * s.theta[0]);
    for (int col = 0; col < n1; ++col) {
        double p = 1.0;
        for (int row = 1; row < n1; ++row) {
            num(row, col) = p;
            p *= s.theta[col];
        }
    }
    const SignLogDet ln = sign_log_det(std::move(num));
    const SignLogDet ld = sign_log_det(vandermonde(s.theta));
    if (ld.sign == 0) throw DegenerateSpectrum("singular Vandermonde denominator");

    PartitionEstimate out;
    if (ln.sign == 0) {
        out.value = 0.0;
    } else {
        const int parity = (n % 2 == 0) ? 1 : -1;
        out.value = parity * ln.sign * ld.sign *
                    std::exp(ln.log_abs - ld.log_abs - n * std::log(s.rho));
    }
    out.method = Method::det_form;
    return out;
}

PartitionEstimate z_cqn_closed(const Spectrum& s) {
    require_kind(s, Manifold::CQ, "z_cqn_closed");
    require_distinct(s.theta);
    const int n1 = static_cast<int>(s.theta.size());

    double z = std::exp(-s.rho * s.theta[0]);
    for (int a = 1; a < n1; ++a) z /= s.rho * (s.theta[0] - s.theta[a]);

    // Both expressions are exact; disagreement means an implementation bug.
    // Near-degenerate spectra lose the digits this check needs, so it only
    // fires on well-conditioned input.
    if (!s.conditioning_warning) {
        const PartitionEstimate det = z_cqn_det(s);
        if (rel_diff(z, det.value.real()) > 1e-9)
            throw Error("z_cqn_closed: closed form and determinant form disagree");
    }

    PartitionEstimate out;
    out.value = z;
    out.method = Method::closed;
    return out;
}

PartitionEstimate quantum_trace_closed(const QuantumParams& qp) {
    const std::complex<double> i{0.0, 1.0};
    const std::vector<double> mu = mu_vector(qp);

    std::complex<double> denom{1.0, 0.0};
    for (double m : mu) {
        const std::complex<double> g = std::exp(-i * m * qp.t);
        if (!(std::abs(g) < 1.0)) {
            std::ostringstream os;
            os << "quantum trace diverges: |e^{-i mu T}| = " << std::abs(g)
               << " >= 1 for mu = " << m;
            throw DivergentRegime(os.str());
        }
        denom *= 1.0 - g;
    }

    PartitionEstimate out;
    out.value = std::exp(-i * static_cast<double>(qp.k) * qp.c[qp.n] * qp.t) / denom;
    out.method = Method::closed;
    return out;
}

double vandermonde_identity_residual(const std::vector<double>& theta) {
    require_distinct(theta);
    const int n1 = static_cast<int>(theta.size());

    KahanSum lhs;
    for (int a = 1; a < n1; ++a) {
        double term = 1.0;
        for (int b = 0; b < n1; ++b)
            if (b != a) term /= theta[b] - theta[a];
        lhs.add(term);
    }
    double rhs = -1.0;
    for (int b = 1; b < n1; ++b) rhs /= theta[b] - theta[0];

    return std::abs(lhs.value() - rhs);
}

ExactIdentityResult vandermonde_identity_exact(const std::vector<Rational>& theta) {
    using boost::multiprecision::cpp_rational;
    std::vector<cpp_rational> t;
    t.reserve(theta.size());
    for (const Rational& r : theta) {
        if (r.den == 0) throw ParseError("rational with zero denominator");
        t.emplace_back(r.num, r.den);
    }
    const std::size_t n1 = t.size();
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = a + 1; b < n1; ++b)
            if (t[a] == t[b]) throw DegenerateSpectrum("coincident theta entries");

    cpp_rational lhs = 0;
    for (std::size_t a = 1; a < n1; ++a) {
        cpp_rational prod = 1;
        for (std::size_t b = 0; b < n1; ++b)
            if (b != a) prod *= t[b] - t[a];
        lhs += 1 / prod;
    }
    cpp_rational rhs_prod = 1;
    for (std::size_t b = 1; b < n1; ++b) rhs_prod *= t[b] - t[0];
    const cpp_rational residual = lhs + 1 / rhs_prod;

    ExactIdentityResult out;
    out.exact_zero = (residual == 0);
    std::ostringstream os;
    os << residual;
    out.residual = os.str();
    return out;
}

FourierSeriesResult fourier_series_sum(double phi, double eps, long m) {
    if (!(eps > 0.0 && eps < 1.0))
        throw ParseError("fourier_series_sum: eps must lie in (0,1)");
    const double half_sin = std::sin(0.5 * phi);
    if (std::abs(half_sin) < 1e-14)
        throw SingularPhi("fourier_series_sum: sin(phi/2) vanishes");

    const std::complex<double> i{0.0, 1.0};

    // Pair the +n and -n terms before accumulating: the raw series is only
    // conditionally convergent, the paired one has an O(1/m) tail.
    KahanSum re, im;
    re.add(1.0 / phi);
    for (long n = 1; n <= m; ++n) {
        const double x = 2.0 * n * kPi * eps;
        const std::complex<double> e = {std::cos(x), std::sin(x)};
        const std::complex<double> term =
            e / (2.0 * n * kPi + phi) + std::conj(e) / (phi - 2.0 * n * kPi);
        re.add(term.real());
        im.add(term.imag());
    }

    FourierSeriesResult out;
    out.partial = {re.value(), im.value()};
    out.closed = i * std::exp(-i * phi * eps) / (1.0 - std::exp(-i * phi));
    out.alternate = std::exp(i * (0.5 - eps) * phi) / (2.0 * half_sin);
    out.residual = std::abs(out.partial - out.closed);
    return out;
}

}  // namespace localize
