// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// localize — cross-validates the exact partition functions, projector
// geometry, tensor-tower embedding and quantum trace formulas against
// independent numerical oracles, and emits pass/fail reports.
//
// Exit codes: 0 all rows pass, 2 input rejected, 3 some tolerance failed.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "localize/commands.hpp"

namespace {

using localize::ParseError;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw ParseError("trailing characters in number '" + s + "'");
        return v;
    } catch (const std::exception&) {
        throw ParseError("cannot parse number '" + s + "'");
    }
}

std::vector<double> parse_doubles(const std::string& s) {
    std::vector<double> out;
    for (const std::string& part : split(s, ',')) out.push_back(parse_double(part));
    return out;
}

// Accepts "1", "-0.5", "2i", "1+0i", "0.3-0.7i".
std::complex<double> parse_complex(const std::string& raw) {
    std::string s = raw;
    if (s.empty()) throw ParseError("empty complex literal");
    // Find a +/- separator that is not leading and not an exponent sign.
    std::size_t sep = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            sep = i;
    }
    if (sep != std::string::npos && s.back() == 'i') {
        const std::string re = s.substr(0, sep);
        std::string im = s.substr(sep, s.size() - sep - 1);
        if (im == "+" || im == "-") im += "1";
        return {parse_double(re), parse_double(im)};
    }
    if (s.back() == 'i') {
        std::string im = s.substr(0, s.size() - 1);
        if (im.empty() || im == "+" || im == "-") im += "1";
        return {0.0, parse_double(im)};
    }
    return {parse_double(s), 0.0};
}

Eigen::VectorXcd parse_complex_vector(const std::string& s) {
    const std::vector<std::string> parts = split(s, ',');
    Eigen::VectorXcd out(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) out(i) = parse_complex(parts[i]);
    return out;
}

// Config file mirrors the flags (documented JSON schema); flags win.
struct ConfigFile {
    nlohmann::json j = nlohmann::json::object();

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open config file '" + path + "'");
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw ParseError(std::string("config parse error: ") + e.what());
        }
    }
    bool has(const std::string& key) const { return j.contains(key); }
    template <typename T>
    T get(const std::string& key) const {
        return j.at(key).get<T>();
    }
    std::vector<double> doubles(const std::string& key) const {
        return j.at(key).get<std::vector<double>>();
    }
};

enum class OutputMode { Auto, Json, Csv, Table };

void emit(const localize::RunReport& rep, OutputMode mode) {
    const bool tty = isatty(fileno(stdout)) != 0;
    if (mode == OutputMode::Csv) {
        std::cout << rep.to_csv();
    } else if (mode == OutputMode::Json || (mode == OutputMode::Auto && !tty)) {
        std::cout << rep.to_json().dump(2) << '\n';
    } else {
        std::cout << rep.to_table();
    }
}

struct CommonFlags {
    bool json = false;
    bool csv = false;
    std::string config_path;

    OutputMode mode() const {
        if (csv) return OutputMode::Csv;
        if (json) return OutputMode::Json;
        return OutputMode::Auto;
    }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--json", flags.json, "emit the JSON report");
    cmd->add_flag("--csv", flags.csv, "emit the CSV report");
    cmd->add_option("--config", flags.config_path,
                    "JSON parameter file mirroring the flags (flags win)");
}

int finish(localize::RunReport rep, const CommonFlags& flags,
           std::chrono::steady_clock::time_point start) {
    if (rep.command != "suite") {
        rep.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    }
    emit(rep, flags.mode());
    return rep.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"localize: exact phase-space partition functions, projector "
                 "geometry and coherent-state trace formulas, cross-validated "
                 "against independent numerical oracles"};
    app.require_subcommand(1);

    // ---- partition ----------------------------------------------------
    auto* partition = app.add_subcommand(
        "partition", "cross-tabulate every partition-function method");
    CommonFlags part_flags;
    std::string part_kind = "cp", part_theta;
    double part_rho = 1.0, part_tol = 1e-8, part_lambda = 1e4, part_ctol = 1e-3;
    std::int64_t part_samples = 1'000'000;
    std::uint64_t part_seed = 0;
    partition->add_option("--kind", part_kind, "cp or cq");
    partition->add_option("--theta", part_theta, "comma-separated spectrum");
    partition->add_option("--rho", part_rho, "inverse temperature");
    partition->add_option("--tol", part_tol, "quadrature relative tolerance");
    partition->add_option("--samples", part_samples, "Monte-Carlo sample count");
    partition->add_option("--seed", part_seed, "random seed");
    partition->add_option("--lambda", part_lambda, "contour half-width");
    partition->add_option("--contour-tol", part_ctol, "contour relative tolerance");
    add_common(partition, part_flags);

    // ---- geometry -----------------------------------------------------
    auto* geometry = app.add_subcommand(
        "geometry", "projector/metric/volume/closedness battery at chart points");
    CommonFlags geo_flags;
    std::string geo_kind = "cp", geo_at;
    int geo_n = 1, geo_points = 50;
    double geo_h = 1e-5;
    std::uint64_t geo_seed = 0;
    geometry->add_option("--kind", geo_kind, "cp or cq");
    geometry->add_option("--n", geo_n, "rank N");
    geometry->add_option("--points", geo_points, "random points to sample");
    geometry->add_option("--seed", geo_seed, "sampling seed");
    geometry->add_option("--at", geo_at, "evaluate at this point, e.g. 1+0i,0.5i");
    geometry->add_option("--step", geo_h, "finite-difference step");
    add_common(geometry, geo_flags);

    // ---- quantum ------------------------------------------------------
    auto* quantum = app.add_subcommand(
        "quantum", "truncated trace, resolution of unity and series identities");
    CommonFlags qu_flags;
    int qu_n = 1, qu_k = 2, qu_mmax = 40, qu_resm = 0, qu_resq = 0;
    std::string qu_c = "1,0", qu_t = "0,-1";
    bool qu_fourier = false;
    double qu_phi = 3.141592653589793, qu_eps = 0.5, qu_sigma = 1.0;
    long qu_m = 10000;
    int qu_mcut = 20, qu_nimages = 5;
    quantum->add_option("--n", qu_n, "rank N");
    quantum->add_option("--k", qu_k, "level K");
    quantum->add_option("--c", qu_c, "couplings c_1..c_{N+1}, comma-separated");
    quantum->add_option("--t", qu_t, "time T as re,im");
    quantum->add_option("--mmax", qu_mmax, "occupation cutoff per mode");
    quantum->add_option("--res-mmax", qu_resm, "resolution-check cutoff");
    quantum->add_option("--res-q", qu_resq, "resolution-check nodes per angle");
    quantum->add_flag("--fourier", qu_fourier, "run only the series check");
    quantum->add_option("--phi", qu_phi, "series angle in (0,2pi)");
    quantum->add_option("--eps", qu_eps, "series epsilon in (0,1)");
    quantum->add_option("--m", qu_m, "series cutoff");
    quantum->add_option("--sigma", qu_sigma, "Gaussian width of the resummation check");
    quantum->add_option("--mcut", qu_mcut, "integer cutoff of the resummation check");
    quantum->add_option("--nimages", qu_nimages, "image cutoff of the resummation check");
    add_common(quantum, qu_flags);

    // ---- embed ----------------------------------------------------------
    auto* embed = app.add_subcommand(
        "embed", "tensor-tower embedding battery at one ball point");
    CommonFlags em_flags;
    std::string em_xi = "0.5", em_theta;
    int em_nmax = 20;
    double em_rho = 1.0;
    int em_n = 0;
    embed->add_option("--xi", em_xi, "CQ point, comma-separated complex entries");
    embed->add_option("--n", em_n, "rank N (checked against --xi length)");
    embed->add_option("--nmax", em_nmax, "tensor levels kept");
    embed->add_option("--theta", em_theta, "CQ spectrum (default N+1..1)");
    embed->add_option("--rho", em_rho, "inverse temperature for the spectrum");
    add_common(embed, em_flags);

    // ---- suite ----------------------------------------------------------
    auto* suite = app.add_subcommand(
        "suite", "full pinned-tolerance battery (reproducibility entry point)");
    CommonFlags su_flags;
    std::uint64_t su_seed = 42;
    suite->add_option("--seed", su_seed, "suite seed");
    add_common(suite, su_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (partition->parsed()) {
            ConfigFile cfg;
            if (!part_flags.config_path.empty()) cfg.load(part_flags.config_path);
            if (!partition->count("--kind") && cfg.has("kind"))
                part_kind = cfg.get<std::string>("kind");
            std::vector<double> theta;
            if (partition->count("--theta")) {
                theta = parse_doubles(part_theta);
            } else if (cfg.has("theta")) {
                theta = cfg.doubles("theta");
            } else {
                throw ParseError("partition needs --theta (or a config file)");
            }
            if (!partition->count("--rho") && cfg.has("rho"))
                part_rho = cfg.get<double>("rho");
            if (!partition->count("--seed") && cfg.has("seed"))
                part_seed = cfg.get<std::uint64_t>("seed");
            if (!partition->count("--tol") && cfg.has("tol"))
                part_tol = cfg.get<double>("tol");
            if (!partition->count("--samples") && cfg.has("samples"))
                part_samples = cfg.get<std::int64_t>("samples");
            if (!partition->count("--lambda") && cfg.has("lambda"))
                part_lambda = cfg.get<double>("lambda");

            localize::PartitionArgs args;
            args.spectrum = localize::validate_spectrum(
                localize::manifold_from_string(part_kind), theta, part_rho);
            args.tol = part_tol;
            args.samples = part_samples;
            args.seed = part_seed;
            args.lambda_cutoff = part_lambda;
            args.contour_tol = part_ctol;
            return finish(localize::cmd_partition(args), part_flags, start);
        }

        if (geometry->parsed()) {
            localize::GeometryArgs args;
            args.kind = localize::manifold_from_string(geo_kind);
            args.n = geo_n;
            args.points = geo_points;
            args.seed = geo_seed;
            args.h = geo_h;
            if (!geo_at.empty()) args.at = parse_complex_vector(geo_at);
            return finish(localize::cmd_geometry(args), geo_flags, start);
        }

        if (quantum->parsed()) {
            ConfigFile cfg;
            if (!qu_flags.config_path.empty()) cfg.load(qu_flags.config_path);
            if (cfg.has("quantum")) {
                const nlohmann::json& q = cfg.j["quantum"];
                if (!quantum->count("--k") && q.contains("k")) qu_k = q["k"].get<int>();
                if (!quantum->count("--c") && q.contains("c")) {
                    std::string joined;
                    for (double v : q["c"].get<std::vector<double>>())
                        joined += (joined.empty() ? "" : ",") + std::to_string(v);
                    qu_c = joined;
                }
                if (!quantum->count("--t") && q.contains("t")) {
                    const auto t = q["t"].get<std::vector<double>>();
                    qu_t = std::to_string(t.at(0)) + "," + std::to_string(t.at(1));
                }
            }

            localize::QuantumArgs args;
            args.fourier = qu_fourier;
            args.m_max = qu_mmax;
            args.res_m_max = qu_resm;
            args.res_q = qu_resq;
            args.phi = qu_phi;
            args.eps = qu_eps;
            args.m = qu_m;
            args.sigma = qu_sigma;
            args.m_cut = qu_mcut;
            args.n_images = qu_nimages;
            if (!qu_fourier) {
                const std::vector<double> c = parse_doubles(qu_c);
                const std::vector<double> t = parse_doubles(qu_t);
                if (t.size() != 2) throw ParseError("--t expects re,im");
                const int n = quantum->count("--n") ? qu_n
                                                    : static_cast<int>(c.size()) - 1;
                auto qp = localize::make_quantum_params(n, qu_k, c, {t[0], t[1]});
                if (!localize::convergent_regime(qp))
                    throw localize::DivergentRegime(
                        "quantum battery requires mu_a*Im(T) < 0 for every mode");
                args.qp = qp;
            }
            return finish(localize::cmd_quantum(args), qu_flags, start);
        }

        if (embed->parsed()) {
            localize::EmbedArgs args;
            args.xi = parse_complex_vector(em_xi);
            if (embed->count("--n") && em_n != args.xi.size())
                throw ParseError("--n does not match the --xi length");
            args.n_max = em_nmax;
            args.rho = em_rho;
            if (!em_theta.empty()) args.theta = parse_doubles(em_theta);
            return finish(localize::cmd_embed(args), em_flags, start);
        }

        if (suite->parsed())
            return finish(localize::cmd_suite(su_seed), su_flags, start);
    } catch (const localize::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
