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

#include <filesystem>

#include <nlohmann/json.hpp>

#include "qangle/bound.hpp"
#include "qangle/common.hpp"
#include "qangle/generator.hpp"
#include "qangle/state.hpp"

namespace qangle::io {

/// State files: a JSON array of [re, im] pairs. The reader accepts a
/// norm within 1e-6 of 1 and normalizes it away; anything further off is
/// rejected as std::invalid_argument, since it is more likely a wrong
/// file than a rounded state.
inline constexpr double kStateNormWindow = 1e-6;

/// Generator files: {"dim": n, "entries": [[re, im] × n²]} row-major.
/// Hermiticity is validated on load. Dimension is capped so a corrupt
/// header cannot trigger a multi-GB allocation.
inline constexpr Eigen::Index kMaxGeneratorDim = 4096;

StateVector state_from_json(const nlohmann::json &j);
nlohmann::json state_to_json(const StateVector &state);
StateVector load_state(const std::filesystem::path &path);
void save_state(const std::filesystem::path &path, const StateVector &state);

HermitianGenerator generator_from_json(const nlohmann::json &j);
nlohmann::json generator_to_json(const CMatrix &matrix);
HermitianGenerator load_generator(const std::filesystem::path &path);
void save_generator(const std::filesystem::path &path, const CMatrix &matrix);

/// Bound reports serialize with a fixed key order: context, lhs, rhs,
/// slack, tolerance, holds.
nlohmann::ordered_json to_json(const BoundReport &report);

}  // namespace qangle::io
