// Copyright 2026 the qvbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qvb/clv.hpp"
#include "qvb/ffv.hpp"

namespace qvb {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json to_json(const ClvVerdict& v);
nlohmann::json to_json(const FfvVerdict& v);

/// Full run report: version, config echo (including which averaged-sigma or
/// measurement-count variant ran), seed, per-level records, final score.
nlohmann::json clv_report(const ClvConfig& cfg, const ClvRunResult& run);
nlohmann::json ffv_report(const FfvConfig& cfg, const FfvRunResult& run);

/// Serialize with a stable layout: 2-space indent, LF, trailing newline.
std::string render_json(const nlohmann::json& j);
void write_json_file(const std::string& path, const nlohmann::json& j);

/// CSV heatmap: first row is the p_m grid, first column the p_2q grid,
/// cells are integer scores. '.' decimal separator, LF line endings.
std::string sweep_csv(const std::vector<double>& p_2q_values,
                      const std::vector<double>& p_m_values,
                      const std::vector<std::vector<size_t>>& scores);

/// Parse a replay table {"rounds": [[{"kind", "mean", "shots"}...]...]} into
/// per-Clifford estimate groups. Throws on malformed rows or an empty table.
std::vector<std::vector<ExpectationEstimate>> parse_replay_table(const nlohmann::json& table);

}  // namespace qvb
