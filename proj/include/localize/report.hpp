// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace localize {

/// One cross-check line: a value produced by some method, the reference
/// method it is compared against, and whether its declared tolerance held.
struct ReportRow {
    std::string quantity;
    std::string method;
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;
    std::string reference;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    bool pass = true;
};

struct RunReport {
    std::string command;
    nlohmann::json inputs;
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
    std::int64_t wall_time_ms = 0;
    std::uint64_t seed = 0;

    bool all_pass() const;

    /// Machine-readable forms. schema_version is 1.
    nlohmann::json to_json() const;
    std::string to_csv() const;
    /// Human-readable aligned table.
    std::string to_table() const;
};

RunReport report_from_json(const nlohmann::json& j);

}  // namespace localize
