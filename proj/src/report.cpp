// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "localize/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

namespace localize {

namespace {

nlohmann::json value_to_json(const std::complex<double>& v) {
    if (v.imag() == 0.0) return v.real();
    return nlohmann::json::array({v.real(), v.imag()});
}

std::complex<double> value_from_json(const nlohmann::json& j) {
    if (j.is_array()) return {j.at(0).get<double>(), j.at(1).get<double>()};
    return {j.get<double>(), 0.0};
}

std::string value_to_text(const std::complex<double>& v) {
    std::ostringstream os;
    os << std::setprecision(12) << std::defaultfloat << v.real();
    if (v.imag() != 0.0) {
        os << (v.imag() < 0 ? "" : "+") << std::setprecision(12) << v.imag() << "i";
    }
    return os.str();
}

}  // namespace

bool RunReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ReportRow& r) { return r.pass; });
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["inputs"] = inputs;
    j["seed"] = seed;
    j["wall_time_ms"] = wall_time_ms;
    j["rows"] = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        nlohmann::json row;
        row["quantity"] = r.quantity;
        row["method"] = r.method;
        row["value"] = value_to_json(r.value);
        row["err"] = r.err;
        row["reference"] = r.reference;
        row["abs_diff"] = r.abs_diff;
        row["rel_diff"] = r.rel_diff;
        row["pass"] = r.pass;
        j["rows"].push_back(std::move(row));
    }
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport rep;
    rep.command = j.at("command").get<std::string>();
    rep.inputs = j.at("inputs");
    rep.seed = j.at("seed").get<std::uint64_t>();
    rep.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
    for (const auto& row : j.at("rows")) {
        ReportRow r;
        r.quantity = row.at("quantity").get<std::string>();
        r.method = row.at("method").get<std::string>();
        r.value = value_from_json(row.at("value"));
        r.err = row.at("err").get<double>();
        r.reference = row.at("reference").get<std::string>();
        r.abs_diff = row.at("abs_diff").get<double>();
        r.rel_diff = row.at("rel_diff").get<double>();
        r.pass = row.at("pass").get<bool>();
        rep.rows.push_back(std::move(r));
    }
    if (j.contains("notes"))
        rep.notes = j.at("notes").get<std::vector<std::string>>();
    return rep;
}

std::string RunReport::to_csv() const {
    std::ostringstream os;
    os << "quantity,method,value_re,value_im,err,reference,abs_diff,rel_diff,pass\n";
    os << std::setprecision(17);
    for (const ReportRow& r : rows) {
        os << r.quantity << ',' << r.method << ',' << r.value.real() << ','
           << r.value.imag() << ',' << r.err << ',' << r.reference << ','
           << r.abs_diff << ',' << r.rel_diff << ',' << (r.pass ? "true" : "false")
           << '\n';
    }
    return os.str();
}

std::string RunReport::to_table() const {
    std::vector<std::array<std::string, 7>> cells;
    cells.push_back({"quantity", "method", "value", "err", "reference", "rel_diff", "pass"});
    for (const ReportRow& r : rows) {
        std::ostringstream err_os, rel_os;
        err_os << std::setprecision(3) << r.err;
        rel_os << std::setprecision(3) << r.rel_diff;
        cells.push_back({r.quantity, r.method, value_to_text(r.value), err_os.str(),
                         r.reference, rel_os.str(), r.pass ? "pass" : "FAIL"});
    }

    std::array<std::size_t, 7> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    os << "# " << command << " (seed " << seed << ", " << wall_time_ms << " ms)\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t c = 0; c < cells[i].size(); ++c)
            os << std::left << std::setw(static_cast<int>(width[c]) + 2) << cells[i][c];
        os << '\n';
        if (i == 0) {
            for (std::size_t c = 0; c < width.size(); ++c)
                os << std::string(width[c], '-') << "  ";
            os << '\n';
        }
    }
    for (const std::string& n : notes) os << "note: " << n << '\n';
    os << (all_pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    return os.str();
}

}  // namespace localize
