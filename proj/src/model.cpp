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

#include "bullet/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bullet {

Parameter Parameter::from_tuple(const std::array<double, 8>& t) {
  Parameter p{t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7]};
  validate(p);
  return p;
}

std::array<double, 8> Parameter::tuple() const {
  return {lambda0, lambdaV, lambdaH, tauV, tauH, pV, pH, p0};
}

double Parameter::crossing_probability() const {
  return std::max(0.0, 1.0 - pV - pH - p0);
}

void validate(const Parameter& p) {
  static constexpr const char* kNames[] = {"lambda0", "lambdaV", "lambdaH",
                                           "tauV",    "tauH",    "pV",
                                           "pH",      "p0"};
  const auto t = p.tuple();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(t[i]) || t[i] < 0) {
      throw Error(std::string("parameter ") + kNames[i] +
                  " must be a finite non-negative number");
    }
    if (i >= 5 && t[i] > 1) {
      throw Error(std::string("probability ") + kNames[i] + " exceeds 1");
    }
  }
  if (p.pV + p.pH + p.p0 > 1.0 + 1e-12) {
    throw Error("pV + pH + p0 exceeds 1");
  }
}

bool approx_equal(const Parameter& a, const Parameter& b, double tol) {
  const auto ta = a.tuple();
  const auto tb = b.tuple();
  for (std::size_t i = 0; i < ta.size(); ++i) {
    const double scale = std::max({1.0, std::abs(ta[i]), std::abs(tb[i])});
    if (std::abs(ta[i] - tb[i]) > tol * scale) return false;
  }
  return true;
}

std::string to_string(const Parameter& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  const auto t = p.tuple();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << t[i];
  }
  os << ')';
  return os.str();
}

Rectangle::Rectangle(double x0, double y0, double x1, double y1)
    : x0_(x0), y0_(y0), x1_(x1), y1_(y1) {
  if (!std::isfinite(x0) || !std::isfinite(y0) || !std::isfinite(x1) ||
      !std::isfinite(y1)) {
    throw Error("rectangle coordinates must be finite");
  }
  if (!(x0 < x1) || !(y0 < y1)) {
    throw Error("rectangle must satisfy x0 < x1 and y0 < y1");
  }
}

bool Rectangle::contains(const Rectangle& o) const {
  return x0_ <= o.x0_ && o.x1_ <= x1_ && y0_ <= o.y0_ && o.y1_ <= y1_;
}

namespace {
constexpr std::array<std::string_view, kPointKindCount> kKindNames = {
    "VE", "VS", "HE", "HS", "OB", "OA", "VB",
    "HB", "VT", "HT", "VA", "HA", "CC"};
}  // namespace

std::string_view to_string(PointKind k) { return kKindNames[index_of(k)]; }

PointKind point_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return kAllPointKinds[i];
  }
  throw Error("unknown point kind '" + std::string(name) + "'");
}

Point Segment::start() const {
  return orientation == Orientation::kVertical ? Point{anchor, lo}
                                               : Point{lo, anchor};
}

Point Segment::end() const {
  return orientation == Orientation::kVertical ? Point{anchor, hi}
                                               : Point{hi, anchor};
}

std::size_t Configuration::vertical_count() const {
  return static_cast<std::size_t>(
      std::count_if(segments.begin(), segments.end(), [](const Segment& s) {
        return s.orientation == Orientation::kVertical;
      }));
}

std::size_t Configuration::horizontal_count() const {
  return segments.size() - vertical_count();
}

Configuration Configuration::normalized() const {
  Configuration out = *this;
  std::stable_sort(out.segments.begin(), out.segments.end(),
                   [](const Segment& a, const Segment& b) {
                     if (a.orientation != b.orientation) {
                       return a.orientation == Orientation::kVertical;
                     }
                     return a.anchor < b.anchor;
                   });
  std::sort(out.crossings.begin(), out.crossings.end());
  return out;
}

std::vector<std::int64_t> ConfigStats::integer_features() const {
  std::vector<std::int64_t> f;
  f.reserve(2 + kPointKindCount);
  f.push_back(n);
  f.push_back(m);
  f.insert(f.end(), counts.begin(), counts.end());
  return f;
}

}  // namespace bullet
