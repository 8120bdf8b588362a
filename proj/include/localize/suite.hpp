// Copyright 2026 The Localize Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "localize/report.hpp"

namespace localize {

/// One acceptance criterion evaluated at its pinned parameters and
/// tolerances. rows carry the individual checks; pass is their conjunction.
struct CriterionResult {
    int index = 0;
    std::string label;
    bool pass = false;
    std::vector<ReportRow> rows;
};

CriterionResult criterion_cp_five_way(std::uint64_t seed);      // 1
CriterionResult criterion_cq_three_way(std::uint64_t seed);     // 2
CriterionResult criterion_volume_normalization();               // 3
CriterionResult criterion_geometry_battery(std::uint64_t seed); // 4
CriterionResult criterion_embedding_battery(std::uint64_t seed);// 5
CriterionResult criterion_quantum_battery();                    // 6
CriterionResult criterion_identity_suite();                     // 7
// Criterion 8 (byte-identical suite reports) exercises the CLI binary and
// lives in the acceptance runner.

/// Criteria 1-7 in order.
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed);

/// Wording attached to quantum/suite reports: the stationary-phase exactness
/// statement is analytic, and its shared closed-form endpoint is what the
/// numerics verify.
const char* wkb_endpoint_note();

}  // namespace localize
