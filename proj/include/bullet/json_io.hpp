// Copyright 2026 The bulletlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bullet/density.hpp"
#include "bullet/model.hpp"
#include "bullet/reversibility.hpp"
#include "bullet/sampler.hpp"
#include "bullet/verify.hpp"

namespace bullet {

inline constexpr std::string_view kDiagramSchema = "bulletlab.diagram/1";

/// Everything a diagram file carries besides the diagram itself.
struct DiagramMeta {
  Parameter params;
  InitialLaw law = PoissonLaw{};
  std::uint64_t seed = 0;
  std::optional<std::string> preset;
};

struct DiagramDocument {
  Configuration diagram;
  DiagramMeta meta;
};

/// Doubles are written in shortest round-trip form, so decoding restores
/// every coordinate bit for bit.
std::string encode_diagram(const Configuration& u, const DiagramMeta& meta,
                           bool with_stats = true);

/// Throws Error on malformed JSON, a schema mismatch or an invalid diagram.
DiagramDocument decode_diagram(std::string_view bytes);

nlohmann::ordered_json to_json(const Parameter& p);
Parameter parameter_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const InitialLaw& law);
InitialLaw law_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const ConfigStats& s);
nlohmann::ordered_json to_json(const LogDensity& d);
nlohmann::ordered_json to_json(const ReversibilityInvariants& k);
nlohmann::ordered_json to_json(const ReverseResult& r);
nlohmann::ordered_json to_json(const ConditionReport& r);
nlohmann::ordered_json to_json(const VerificationReport& r);

/// Pretty printed with a trailing newline.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace bullet
