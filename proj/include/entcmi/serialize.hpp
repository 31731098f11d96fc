// Copyright 2026 The entcmi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>

#include <json.hpp>

#include "entcmi/density_matrix.hpp"
#include "entcmi/dpi.hpp"
#include "entcmi/joint_pmf.hpp"
#include "entcmi/nets.hpp"
#include "entcmi/opt_report.hpp"
#include "entcmi/stochastic_map.hpp"

namespace entcmi::io {

/// Parses text as JSON, wrapping syntax failures in ParseError.
nlohmann::json parse_text(const std::string& text);

nlohmann::json to_json(const JointPmf& p);
nlohmann::json to_json(const StochasticMap& t);
nlohmann::json to_json(const DensityMatrix& rho);
nlohmann::json to_json(const Fig1Spec& spec);
nlohmann::json to_json(const Fig2Spec& spec);
nlohmann::json to_json(const Fig3Spec& spec);
nlohmann::json to_json(const OptReport& report);
nlohmann::json to_json(const SweepReport& report);

/// Schema errors raise ParseError; domain invariant violations raise the
/// underlying InvariantError from the object constructors.
JointPmf pmf_from_json(const nlohmann::json& j);
StochasticMap map_from_json(const nlohmann::json& j);
DensityMatrix dmat_from_json(const nlohmann::json& j);
Fig1Spec fig1_from_json(const nlohmann::json& j);
Fig2Spec fig2_from_json(const nlohmann::json& j);
Fig3Spec fig3_from_json(const nlohmann::json& j);

enum class PayloadKind { kPmf, kStochasticMap, kDensityMatrix, kFig1, kFig2,
                         kFig3 };

/// Classifies a parsed document by its schema.
PayloadKind detect_payload(const nlohmann::json& j);

/// 17-significant-digit decimal rendering used by the CSV format.
std::string format_double(double v);

std::string to_csv(const OptReport& report);
std::string to_csv(const SweepReport& report);

}  // namespace entcmi::io
