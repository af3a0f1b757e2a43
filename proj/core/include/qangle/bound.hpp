// Copyright 2026 The qangle developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>

namespace qangle {

/// Outcome of checking an inequality lhs ≤ rhs. The record keeps both
/// sides, the signed slack, and the tolerance used for the verdict, so a
/// reader can audit the check instead of trusting a bare boolean.
///
/// Except for explicitly labeled vacuous verdicts (a check whose premise
/// failed, reported as holding), holds == (lhs <= rhs + tolerance).
struct BoundReport {
    std::string context;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    double tolerance = 0.0;
    bool holds = false;
};

inline BoundReport make_bound_report(std::string context, double lhs, double rhs,
                                     double tolerance) {
    BoundReport report;
    report.context = std::move(context);
    report.lhs = lhs;
    report.rhs = rhs;
    report.slack = rhs - lhs;
    report.tolerance = tolerance;
    report.holds = lhs <= rhs + tolerance;
    return report;
}

}  // namespace qangle
