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

#include "bullet/presets.hpp"

#include <charconv>
#include <cmath>
#include <string>

namespace bullet {

Preset bggs_preset(double alpha) {
  if (!(alpha >= 0 && alpha <= 1)) throw Error("bggs alpha must lie in [0,1]");
  return {"bggs", Parameter::from_tuple({1, 0, 0, 0, 0, 0, 1 - alpha, alpha}),
          {1, 1}};
}

const std::vector<Preset>& preset_registry() {
  static const std::vector<Preset> registry = {
      {"cbmc", Parameter::from_tuple({0, 1, 1, 0, 0, 0, 0, 1}), {1, 1}},
      {"loop-half", Parameter::from_tuple({0, 1, 1, 0, 0, 0.5, 0.5, 0}), {2, 2}},
      {"loop", Parameter::from_tuple({1, 0, 0, 1, 1, 0, 0, 1}), {1, 1}},
      {"hammersley", Parameter::from_tuple({1, 0, 0, 0, 0, 0, 0, 1}), {1, 1}},
      bggs_preset(kDefaultBggsAlpha),
      {"pv", Parameter::from_tuple({0, 0, 1, 1, 0, 1, 0, 0}), {1, 1}},
      {"ph", Parameter::from_tuple({0, 1, 0, 0, 1, 0, 1, 0}), {1, 1}},
  };
  return registry;
}

namespace {

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  // from_chars does not accept a leading '+'.
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() ||
      !std::isfinite(v)) {
    throw Error("not a finite number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_double(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::optional<Preset> find_preset(std::string_view name) {
  if (name.substr(0, 5) == "bggs:") return bggs_preset(parse_double(name.substr(5)));
  for (const Preset& p : preset_registry()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

Parameter parse_parameter(std::string_view spec) {
  if (auto p = find_preset(spec)) return p->params;
  if (spec.find(',') == std::string_view::npos) {
    throw Error("unknown preset '" + std::string(spec) + "'");
  }
  const auto v = parse_numbers(spec);
  if (v.size() != 8) throw Error("a parameter needs exactly eight numbers");
  return Parameter::from_tuple({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
}

std::optional<std::string> preset_name_of(const Parameter& p, double tol) {
  for (const Preset& q : preset_registry()) {
    if (approx_equal(p, q.params, tol)) return q.name;
  }
  return std::nullopt;
}

Rectangle parse_rectangle(std::string_view text) {
  const auto v = parse_numbers(text);
  if (v.size() != 4) throw Error("a rectangle is given as x0,y0,x1,y1");
  return Rectangle(v[0], v[1], v[2], v[3]);
}

}  // namespace bullet
