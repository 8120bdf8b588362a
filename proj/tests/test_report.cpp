// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "localize/commands.hpp"
#include "localize/report.hpp"

using namespace localize;

namespace {

RunReport sample_report() {
    RunReport rep;
    rep.command = "partition";
    rep.inputs = {{"kind", "cp"}, {"theta", {1.0, 2.0}}, {"rho", 1.0}};
    rep.seed = 7;
    rep.wall_time_ms = 12;
    ReportRow real_row;
    real_row.quantity = "Z";
    real_row.method = "dh_sum";
    real_row.value = 0.232544157934839;
    real_row.reference = "det_form";
    real_row.abs_diff = 1e-17;
    real_row.rel_diff = 5e-17;
    real_row.pass = true;
    rep.rows.push_back(real_row);
    ReportRow complex_row;
    complex_row.quantity = "trace";
    complex_row.method = "fock_truncated";
    complex_row.value = {1.25, -0.5};
    complex_row.err = 1e-9;
    complex_row.reference = "closed";
    complex_row.pass = true;
    rep.rows.push_back(complex_row);
    rep.notes.push_back("sample note");
    return rep;
}

}  // namespace

TEST_CASE("report JSON round-trips") {
    const RunReport rep = sample_report();
    const nlohmann::json j = rep.to_json();
    CHECK(j.at("schema_version").get<int>() == 1);

    const RunReport back = report_from_json(j);
    CHECK(back.command == rep.command);
    CHECK(back.seed == rep.seed);
    CHECK(back.wall_time_ms == rep.wall_time_ms);
    REQUIRE(back.rows.size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(back.rows[i].quantity == rep.rows[i].quantity);
        CHECK(back.rows[i].value == rep.rows[i].value);
        CHECK(back.rows[i].err == rep.rows[i].err);
        CHECK(back.rows[i].pass == rep.rows[i].pass);
    }
    CHECK(back.notes == rep.notes);
    CHECK(back.to_json() == j);
}

TEST_CASE("report serialization is deterministic") {
    CHECK(sample_report().to_json().dump(2) == sample_report().to_json().dump(2));
}

TEST_CASE("csv has one line per row plus a header") {
    const std::string csv = sample_report().to_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(csv.rfind("quantity,method,value_re,value_im,err,", 0) == 0);
}

TEST_CASE("all_pass reflects row status") {
    RunReport rep = sample_report();
    CHECK(rep.all_pass());
    rep.rows[1].pass = false;
    CHECK(!rep.all_pass());
}

TEST_CASE("cmd_partition produces the documented CP rows") {
    PartitionArgs args;
    args.spectrum = validate_spectrum(Manifold::CP, {1, 2, 3}, 1.0);
    args.samples = 200'000;
    args.seed = 5;
    const RunReport rep = cmd_partition(args);
    REQUIRE(rep.rows.size() == 6);
    CHECK(rep.rows[0].method == "dh_sum");
    CHECK(rep.rows[1].method == "det_form");
    CHECK(rep.rows[2].method == "residue");
    CHECK(rep.rows[3].method == "contour");
    CHECK(rep.rows[4].method == "quadrature");
    CHECK(rep.rows[5].method == "montecarlo");
    CHECK(rep.all_pass());
    for (const ReportRow& r : rep.rows) CHECK(!r.reference.empty());
}

TEST_CASE("cmd_partition CQ closed value appears among rows") {
    PartitionArgs args;
    args.spectrum = validate_spectrum(Manifold::CQ, {3, 2, 1}, 1.0);
    args.samples = 100'000;
    const RunReport rep = cmd_partition(args);
    REQUIRE(!rep.rows.empty());
    CHECK(rep.rows[0].method == "closed");
    CHECK(rep.rows[0].value.real() ==
          doctest::Approx(std::exp(-3.0) / 2.0).epsilon(1e-12));
    CHECK(rep.all_pass());
}

TEST_CASE("cmd_geometry is reproducible for a fixed seed") {
    GeometryArgs args;
    args.kind = Manifold::CQ;
    args.n = 2;
    args.points = 20;
    args.seed = 7;
    const RunReport a = cmd_geometry(args);
    const RunReport b = cmd_geometry(args);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        CHECK(a.rows[i].value == b.rows[i].value);
    CHECK(a.all_pass());
}

TEST_CASE("cmd_geometry at a pinned point reports the metric value") {
    GeometryArgs args;
    args.kind = Manifold::CP;
    args.n = 1;
    args.points = 1;
    Eigen::VectorXcd at(1);
    at << std::complex<double>(1.0, 0.0);
    args.at = at;
    const RunReport rep = cmd_geometry(args);
    REQUIRE(!rep.rows.empty());
    CHECK(rep.rows[0].quantity == "metric_analytic[0,0]");
    CHECK(rep.rows[0].value.real() == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("cmd_quantum trace row matches the closed form") {
    QuantumArgs args;
    args.qp = make_quantum_params(1, 2, {1, 0}, {0.0, -1.0});
    args.m_max = 40;
    const RunReport rep = cmd_quantum(args);
    CHECK(rep.all_pass());
    CHECK(rep.rows[0].quantity == "trace");
    CHECK(rep.rows[0].value.real() ==
          doctest::Approx(1.0 / (1.0 - std::exp(-1.0))).epsilon(1e-10));
    CHECK(!rep.notes.empty());
}

TEST_CASE("cmd_embed rows carry the certified bounds") {
    EmbedArgs args;
    args.xi = Eigen::VectorXcd::Constant(1, std::complex<double>(0.5, 0.0));
    args.n_max = 20;
    args.theta = std::vector<double>{2, 1};
    const RunReport rep = cmd_embed(args);
    CHECK(rep.all_pass());
    bool saw_energy = false;
    for (const ReportRow& r : rep.rows)
        if (r.quantity == "energy_exact") {
            saw_energy = true;
            CHECK(r.value.real() == doctest::Approx(7.0 / 3.0).epsilon(1e-13));
        }
    CHECK(saw_energy);
}
