// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

#include "localize/closed_forms.hpp"
#include "localize/numeric.hpp"
#include "localize/rng.hpp"

namespace localize {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kLadder[] = {8, 16, 32, 64};
constexpr int kMaxTensorRank = 6;
constexpr int kShards = 64;

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_kind(const Spectrum& s, Manifold kind, const char* op) {
    if (s.kind != kind)
        throw KindMismatch(std::string(op) + ": spectrum kind does not match");
}

// Welford accumulator plus the standard parallel-combine rule; shards are
// folded in a fixed order so results do not depend on the thread count.
struct MeanVar {
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    void combine(const MeanVar& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double d = o.mean - mean;
        const std::int64_t total = n + o.n;
        mean += d * static_cast<double>(o.n) / static_cast<double>(total);
        m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) /
                         static_cast<double>(total);
        n = total;
    }
    double standard_error() const {
        if (n < 2) return 0.0;
        const double var = m2 / static_cast<double>(n - 1);
        return std::sqrt(var / static_cast<double>(n));
    }
};

// Runs fn(shard_index) for all shards on worker_count() threads.
template <typename Fn>
void parallel_shards(int shards, Fn&& fn) {
    const int workers = std::min(worker_count(), shards);
    if (workers <= 1) {
        for (int i = 0; i < shards; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < shards; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

template <typename Sampler>
MeanVar run_mc(std::int64_t samples, std::uint64_t seed, Sampler&& sample_one) {
    std::vector<MeanVar> acc(kShards);
    const std::int64_t per = samples / kShards;
    const std::int64_t rem = samples % kShards;
    parallel_shards(kShards, [&](int shard) {
        CounterRng rng(seed, static_cast<std::uint64_t>(shard));
        const std::int64_t count = per + (shard < rem ? 1 : 0);
        for (std::int64_t i = 0; i < count; ++i) acc[shard].add(sample_one(rng));
    });
    MeanVar total;
    for (const MeanVar& a : acc) total.combine(a);
    return total;
}

}  // namespace

void validate_config(const IntegratorConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw ParseError("tol must be > 0");
    if (cfg.max_evals <= 0) throw ParseError("max_evals must be > 0");
    if (!(cfg.lambda_cutoff > 0.0)) throw ParseError("lambda_cutoff must be > 0");
}

int worker_count() {
    static const int cached = [] {
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw <= 0) hw = 1;
        int n = std::min(hw, 16);
        if (const char* env = std::getenv("LOCALIZE_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) n = static_cast<int>(std::min<long>(v, 256));
        }
        return n;
    }();
    return cached;
}

PartitionEstimate z_cpn_quadrature(const Spectrum& s, const IntegratorConfig& cfg) {
    require_kind(s, Manifold::CP, "z_cpn_quadrature");
    validate_config(cfg);
    const int n = s.rank();
    if (n > kMaxTensorRank)
        throw BudgetExhausted("tensor quadrature supports N <= 6; use Monte-Carlo");

    // Simplex coordinates t_a = u_a/(1+sum u) flatten the integrand to
    // exp[-rho(theta_0 + sum (theta_a - theta_0) t_a)] over sum t < 1: the
    // (1+sum u)^{-(N+1)} density is exactly the Jacobian of the map. The
    // cube -> simplex map t_k = x_k prod_{j<k}(1-x_j) then keeps the
    // integrand entire, so the tensor rule converges spectrally.
    std::vector<double> gap(n);
    for (int a = 0; a < n; ++a) gap[a] = s.theta[a + 1] - s.theta[0];

    std::int64_t evals_used = 0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int order : kLadder) {
        std::int64_t points = 1;
        for (int a = 0; a < n; ++a) {
            points *= order;
            if (points > cfg.max_evals) break;
        }
        if (evals_used + points > cfg.max_evals)
            throw BudgetExhausted("z_cpn_quadrature: eval budget exhausted before tol");
        evals_used += points;

        const QuadratureRule& rule = gauss_legendre_01(order);
        KahanSum sum;
        std::vector<int> idx(n, 0);
        std::vector<double> x(n);
        for (std::int64_t flat = 0; flat < points; ++flat) {
            std::int64_t rest = flat;
            for (int a = 0; a < n; ++a) {
                idx[a] = static_cast<int>(rest % order);
                rest /= order;
                x[a] = rule.nodes[idx[a]];
            }
            // t_a = x_a prod_{j<a}(1-x_j); the map is lower triangular, so
            // the Jacobian is the product of the running shrink factors.
            double w = 1.0, shrink = 1.0, expo = 0.0, jac = 1.0;
            for (int a = 0; a < n; ++a) {
                w *= rule.weights[idx[a]];
                jac *= shrink;
                expo += gap[a] * (x[a] * shrink);
                shrink *= 1.0 - x[a];
            }
            sum.add(w * jac * std::exp(-s.rho * expo));
        }
        const double z = std::exp(-s.rho * s.theta[0]) * sum.value();

        if (!std::isnan(prev)) {
            const double delta = std::abs(z - prev);
            if (delta <= cfg.tol * std::max(std::abs(z), 1e-300)) {
                PartitionEstimate out;
                out.value = z;
                out.method = Method::quadrature;
                out.err = delta;
                return out;
            }
        }
        prev = z;
    }
    throw BudgetExhausted("z_cpn_quadrature: refinement ladder exhausted before tol");
}

PartitionEstimate z_cpn_montecarlo(const Spectrum& s, const IntegratorConfig& cfg) {
    require_kind(s, Manifold::CP, "z_cpn_montecarlo");
    validate_config(cfg);
    const int n1 = s.rank() + 1;
    const double inv_fact = 1.0 / factorial(s.rank());

    const MeanVar stats = run_mc(cfg.max_evals, cfg.seed, [&](CounterRng& rng) {
        double num = 0.0, den = 0.0;
        for (int a = 0; a < n1; ++a) {
            const std::complex<double> g = rng.next_complex_gaussian();
            const double p = std::norm(g);
            num += s.theta[a] * p;
            den += p;
        }
        return std::exp(-s.rho * num / den);
    });

    PartitionEstimate out;
    out.value = stats.mean * inv_fact;
    out.method = Method::montecarlo;
    out.err = stats.standard_error() * inv_fact;
    out.samples = stats.n;
    return out;
}

PartitionEstimate z_cqn_quadrature(const Spectrum& s, const IntegratorConfig& cfg) {
    require_kind(s, Manifold::CQ, "z_cqn_quadrature");
    validate_config(cfg);
    const int n = s.rank();
    if (n > kMaxTensorRank)
        throw BudgetExhausted("tensor quadrature supports N <= 6; use Monte-Carlo");

    // After x_a = u_a/(1 - sum u) the integral factorizes axis-by-axis.
    // Absorbing rho into each axis leaves int e^{-t} e^{(1-gap_a) t} dt per
    // axis for Gauss-Laguerre.
    std::vector<double> gap(n);
    for (int a = 0; a < n; ++a) gap[a] = s.theta[0] - s.theta[a + 1];

    const double front = std::exp(-s.rho * s.theta[0]) / std::pow(s.rho, n);

    std::int64_t evals_used = 0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int order : kLadder) {
        if (evals_used + static_cast<std::int64_t>(order) * n > cfg.max_evals)
            throw BudgetExhausted("z_cqn_quadrature: eval budget exhausted before tol");
        evals_used += static_cast<std::int64_t>(order) * n;

        const QuadratureRule& rule = gauss_laguerre(order);
        double prod = 1.0;
        for (int a = 0; a < n; ++a) {
            KahanSum axis;
            for (int i = 0; i < order; ++i)
                axis.add(rule.weights[i] * std::exp((1.0 - gap[a]) * rule.nodes[i]));
            prod *= axis.value();
        }
        const double z = front * prod;

        if (!std::isnan(prev)) {
            const double delta = std::abs(z - prev);
            if (delta <= cfg.tol * std::max(std::abs(z), 1e-300)) {
                PartitionEstimate out;
                out.value = z;
                out.method = Method::quadrature;
                out.err = delta;
                return out;
            }
        }
        prev = z;
    }
    throw BudgetExhausted("z_cqn_quadrature: refinement ladder exhausted before tol");
}

PartitionEstimate z_cqn_exponential_mc(const Spectrum& s, const IntegratorConfig& cfg) {
    require_kind(s, Manifold::CQ, "z_cqn_exponential_mc");
    validate_config(cfg);
    const int n = s.rank();

    std::vector<double> rate(n);
    for (int a = 0; a < n; ++a) {
        rate[a] = s.rho * (s.theta[0] - s.theta[a + 1]);
        if (rate[a] <= 0.5) {
            throw WeightOverflow(
                "z_cqn_exponential_mc: rho*(theta_0-theta_a) <= 1/2 makes the "
                "unit-rate importance weights blow up; use z_cqn_quadrature");
        }
    }

    const double front = std::exp(-s.rho * s.theta[0]);
    const MeanVar stats = run_mc(cfg.max_evals, cfg.seed, [&](CounterRng& rng) {
        double log_w = 0.0;
        for (int a = 0; a < n; ++a) log_w += (1.0 - rate[a]) * rng.next_exponential();
        return std::exp(log_w);
    });

    PartitionEstimate out;
    out.value = front * stats.mean;
    out.method = Method::montecarlo;
    out.err = front * stats.standard_error();
    out.samples = stats.n;
    return out;
}

PartitionEstimate z_cpn_contour(const Spectrum& s, const IntegratorConfig& cfg) {
    require_kind(s, Manifold::CP, "z_cpn_contour");
    validate_config(cfg);
    const int n = s.rank();
    const int n1 = n + 1;
    if (n < 1) throw KindMismatch("z_cpn_contour requires N >= 1");

    const double reference = z_cpn_residue(s).value.real();

    // |prod (rho theta_a + i lambda)^{-1}| <= |lambda|^{-(N+1)}, so the
    // discarded |lambda| > L mass is at most 2 L^{-N}/N; with the 1/(2 pi)
    // prefactor that is L^{-N}/(pi N).
    const double lambda = cfg.lambda_cutoff;
    const double tail = std::pow(lambda, -n) / (kPi * n);
    if (tail > cfg.tol * std::max(std::abs(reference), 1e-300))
        throw TailDominates("z_cpn_contour: analytic tail bound exceeds tol at this lambda cutoff");

    const auto integrand = [&](double lam) {
        std::complex<double> val = {std::cos(lam), std::sin(lam)};
        for (int a = 0; a < n1; ++a)
            val /= std::complex<double>(s.rho * s.theta[a], lam);
        return val.real();  // conjugate symmetry: the -lambda half doubles this
    };

    const std::int64_t panels =
        static_cast<std::int64_t>(std::ceil(lambda / kPi));
    if (panels * 48 > cfg.max_evals)
        throw BudgetExhausted("z_cpn_contour: panel budget exhausted; raise max_evals");

    const QuadratureRule& coarse = gauss_legendre_01(16);
    const QuadratureRule& fine = gauss_legendre_01(32);
    KahanSum total, deltas;
    const double panel_tol =
        cfg.tol * std::max(std::abs(reference), 1e-300) / static_cast<double>(panels);

    // One period-sized panel resolves the e^{i lambda} oscillation; panels
    // whose 16-vs-32 point delta still exceeds their error share are bisected.
    const std::function<void(double, double, int)> integrate_panel =
        [&](double lo, double hi, int depth) {
            const double len = hi - lo;
            double c = 0.0, f = 0.0;
            for (std::size_t i = 0; i < coarse.nodes.size(); ++i)
                c += coarse.weights[i] * integrand(lo + len * coarse.nodes[i]);
            for (std::size_t i = 0; i < fine.nodes.size(); ++i)
                f += fine.weights[i] * integrand(lo + len * fine.nodes[i]);
            const double delta = std::abs(len * (f - c));
            if (delta > panel_tol && depth < 4) {
                integrate_panel(lo, 0.5 * (lo + hi), depth + 1);
                integrate_panel(0.5 * (lo + hi), hi, depth + 1);
                return;
            }
            total.add(len * f);
            deltas.add(delta);
        };
    for (std::int64_t p = 0; p < panels; ++p)
        integrate_panel(p * kPi, std::min(lambda, (p + 1) * kPi), 0);

    PartitionEstimate out;
    out.value = total.value() / kPi;
    out.method = Method::contour;
    out.err = deltas.value() + tail;

    const double diff = std::abs(out.value.real() - reference);
    if (diff > 2.0 * out.err + 1e-12 * std::abs(reference))
        throw Error("z_cpn_contour: numeric contour disagrees with the pole sum");
    return out;
}

}  // namespace localize
