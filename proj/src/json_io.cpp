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

#include "bullet/json_io.hpp"

#include <cmath>

#include "bullet/diagram.hpp"
#include "bullet/presets.hpp"

namespace bullet {

using json = nlohmann::ordered_json;

namespace {

// JSON has no infinities or NaN.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) {
  return v ? number(*v) : json(nullptr);
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const Parameter& p) {
  return json{{"lambda0", p.lambda0}, {"lambdaV", p.lambdaV},
              {"lambdaH", p.lambdaH}, {"tauV", p.tauV},
              {"tauH", p.tauH},       {"pV", p.pV},
              {"pH", p.pH},           {"p0", p.p0}};
}

Parameter parameter_from_json(const json& j) {
  return Parameter::from_tuple(
      {field<double>(j, "lambda0"), field<double>(j, "lambdaV"),
       field<double>(j, "lambdaH"), field<double>(j, "tauV"),
       field<double>(j, "tauH"), field<double>(j, "pV"), field<double>(j, "pH"),
       field<double>(j, "p0")});
}

json to_json(const InitialLaw& law) {
  if (const auto* p = std::get_if<PoissonLaw>(&law)) {
    return json{{"type", "ppp"}, {"nuH", p->nu_h}, {"nuV", p->nu_v}};
  }
  const auto& e = std::get<ExplicitLaw>(law);
  return json{{"type", "explicit"}, {"cx", e.cx}, {"cy", e.cy}};
}

InitialLaw law_from_json(const json& j) {
  const auto type = field<std::string>(j, "type");
  if (type == "ppp") {
    return PoissonLaw{field<double>(j, "nuH"), field<double>(j, "nuV")};
  }
  if (type == "explicit") {
    return ExplicitLaw{field<std::vector<double>>(j, "cx"),
                       field<std::vector<double>>(j, "cy")};
  }
  throw Error("unknown law type '" + type + "'");
}

json to_json(const ConfigStats& s) {
  json j{{"n", s.n}, {"m", s.m}};
  json counts = json::object();
  for (PointKind k : kAllPointKinds) counts[std::string(to_string(k))] = s[k];
  j["counts"] = counts;
  j["LV"] = s.LV;
  j["LH"] = s.LH;
  return j;
}

json to_json(const LogDensity& d) {
  return json{{"value", number(d.value)}, {"finiteSupport", d.finite_support}};
}

json to_json(const ReversibilityInvariants& k) {
  return json{{"A", k.A}, {"BV", k.BV}, {"BH", k.BH}};
}

json to_json(const ReverseResult& r) {
  if (const auto* na = std::get_if<NotApplicable>(&r)) {
    return json{{"applicable", false}, {"reason", na->reason}};
  }
  const auto& q = std::get<ReversePair>(r);
  const auto name = preset_name_of(q.params);
  return json{{"applicable", true},
              {"source", q.source},
              {"reverse", to_json(q.params)},
              {"reversePreset", name ? json(*name) : json(nullptr)},
              {"nuH", optional_number(q.nu_h)},
              {"nuV", optional_number(q.nu_v)},
              {"reverseNuH", optional_number(q.reverse_nu_h)},
              {"reverseNuV", optional_number(q.reverse_nu_v)}};
}

json to_json(const ConditionReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    items.push_back(json{{"condition", i.condition},
                         {"equation", i.label},
                         {"left", number(i.left)},
                         {"right", number(i.right)},
                         {"satisfied", i.satisfied}});
  }
  json per = json::array();
  for (int k = 1; k <= 5; ++k) {
    per.push_back(json{{"condition", k}, {"satisfied", r.condition_passed(k)}});
  }
  return json{{"theorem", r.theorem},
              {"passed", r.passed},
              {"conditions", per},
              {"equalities", items}};
}

json to_json(const VerificationReport& r) {
  auto named = [](const std::vector<NamedValue>& v) {
    json o = json::object();
    for (const auto& n : v) o[n.name] = number(n.value);
    return o;
  };
  json j{{"kind", std::string(to_string(r.kind))},
         {"replicates", r.replicates},
         {"seed", r.seed}};
  if (r.max_abs_deviation) {
    j["maxAbsDeviation"] = number(*r.max_abs_deviation);
    j["supportViolations"] = r.support_violations;
  }
  j["statistics"] = named(r.statistics);
  j["pValues"] = named(r.p_values);
  j["threshold"] = r.threshold;
  j["passed"] = r.passed;
  j["notes"] = r.notes;
  return j;
}

std::string encode_diagram(const Configuration& u, const DiagramMeta& meta,
                           bool with_stats) {
  json j;
  j["schema"] = kDiagramSchema;
  if (meta.preset) j["preset"] = *meta.preset;
  j["params"] = to_json(meta.params);
  j["law"] = to_json(meta.law);
  j["rect"] = {u.rect.x0(), u.rect.y0(), u.rect.x1(), u.rect.y1()};
  j["seed"] = meta.seed;
  json segs = json::array();
  for (const Segment& s : u.segments) {
    segs.push_back(json{
        {"orientation", s.orientation == Orientation::kVertical ? "V" : "H"},
        {"anchor", s.anchor},
        {"lo", s.lo},
        {"hi", s.hi},
        {"loKind", std::string(to_string(s.lo_kind))},
        {"hiKind", std::string(to_string(s.hi_kind))}});
  }
  j["segments"] = segs;
  json cross = json::array();
  for (const Point& c : u.crossings) cross.push_back({c.x, c.y});
  j["crossings"] = cross;
  if (with_stats) j["stats"] = to_json(extract_stats(u));
  return dump(j);
}

DiagramDocument decode_diagram(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed diagram JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("diagram document must be a JSON object");
  const auto schema = field<std::string>(j, "schema");
  if (schema != kDiagramSchema) {
    throw Error("unsupported schema '" + schema + "', expected '" +
                std::string(kDiagramSchema) + "'");
  }
  const auto r = field<std::vector<double>>(j, "rect");
  if (r.size() != 4) throw Error("rect must have four numbers");
  Configuration u(Rectangle(r[0], r[1], r[2], r[3]));
  DiagramMeta meta;
  meta.params = parameter_from_json(field<json>(j, "params"));
  meta.law = law_from_json(field<json>(j, "law"));
  meta.seed = field<std::uint64_t>(j, "seed");
  if (j.contains("preset")) meta.preset = field<std::string>(j, "preset");
  for (const json& s : field<json>(j, "segments")) {
    Segment seg;
    const auto o = field<std::string>(s, "orientation");
    if (o != "V" && o != "H") throw Error("orientation must be V or H");
    seg.orientation = o == "V" ? Orientation::kVertical : Orientation::kHorizontal;
    seg.anchor = field<double>(s, "anchor");
    seg.lo = field<double>(s, "lo");
    seg.hi = field<double>(s, "hi");
    seg.lo_kind = point_kind_from_string(field<std::string>(s, "loKind"));
    seg.hi_kind = point_kind_from_string(field<std::string>(s, "hiKind"));
    u.segments.push_back(seg);
  }
  for (const json& c : field<json>(j, "crossings")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number() ||
        !c[1].is_number()) {
      throw Error("a crossing is a pair of numbers");
    }
    u.crossings.push_back({c[0].get<double>(), c[1].get<double>()});
  }
  require_valid(u);
  validate_law(meta.law, u.rect);
  return {std::move(u), std::move(meta)};
}

}  // namespace bullet
