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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bullet {

/// Raised for contract violations: malformed parameters, invalid
/// configurations, out-of-range geometry.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The eight rates and probabilities of a two-speed bullet model.
///
/// Field order matches the conventional tuple
/// (lambda0, lambdaV, lambdaH, tauV, tauH, pV, pH, p0):
///   lambda0          ex-nihilo creation rate per unit area,
///   lambdaV/lambdaH  split rates per unit length along vertical/horizontal
///                    lines (a vertical splits off a horizontal at lambdaV),
///   tauV/tauH        turn rates per unit length,
///   pV               a meeting kills the horizontal, the vertical survives,
///   pH               a meeting kills the vertical, the horizontal survives,
///   p0               a meeting kills both.
struct Parameter {
  double lambda0 = 0;
  double lambdaV = 0;
  double lambdaH = 0;
  double tauV = 0;
  double tauH = 0;
  double pV = 0;
  double pH = 0;
  double p0 = 0;

  /// Builds a parameter from the 8-tuple and validates it.
  static Parameter from_tuple(const std::array<double, 8>& t);
  std::array<double, 8> tuple() const;

  /// 1 - pV - pH - p0, clamped at zero to absorb rounding.
  double crossing_probability() const;

  bool operator==(const Parameter&) const = default;
};

/// Throws Error unless all rates are >= 0, all probabilities lie in [0,1]
/// and pV + pH + p0 <= 1 + 1e-12.
void validate(const Parameter& p);

/// Approximate equality with relative tolerance on every component.
bool approx_equal(const Parameter& a, const Parameter& b, double tol);

std::string to_string(const Parameter& p);

/// Axis-aligned window [x0,x1] x [y0,y1] with positive width and height.
class Rectangle {
 public:
  Rectangle(double x0, double y0, double x1, double y1);

  double x0() const { return x0_; }
  double y0() const { return y0_; }
  double x1() const { return x1_; }
  double y1() const { return y1_; }
  double width() const { return x1_ - x0_; }
  double height() const { return y1_ - y0_; }
  double area() const { return width() * height(); }

  bool contains(const Rectangle& other) const;

  bool operator==(const Rectangle&) const = default;

 private:
  double x0_;
  double y0_;
  double x1_;
  double y1_;
};

enum class Orientation : std::uint8_t { kVertical, kHorizontal };

/// The thirteen point types of a space-time diagram.
///
/// Naming follows the type of the line that is created, killed or turned:
/// HB is a horizontal born from a vertical split, VT is a vertical obtained
/// by turning a horizontal, HA is a horizontal annihilated by a surviving
/// vertical, and so on. VE/VS/HE/HS are the boundary entries and exits.
enum class PointKind : std::uint8_t {
  VE, VS, HE, HS, OB, OA, VB, HB, VT, HT, VA, HA, CC
};

inline constexpr std::size_t kPointKindCount = 13;

inline constexpr std::array<PointKind, kPointKindCount> kAllPointKinds = {
    PointKind::VE, PointKind::VS, PointKind::HE, PointKind::HS, PointKind::OB,
    PointKind::OA, PointKind::VB, PointKind::HB, PointKind::VT, PointKind::HT,
    PointKind::VA, PointKind::HA, PointKind::CC};

std::string_view to_string(PointKind k);
/// Throws Error on an unknown name.
PointKind point_kind_from_string(std::string_view name);

inline constexpr std::size_t index_of(PointKind k) {
  return static_cast<std::size_t>(k);
}

struct Point {
  double x = 0;
  double y = 0;

  bool operator==(const Point&) const = default;
  auto operator<=>(const Point&) const = default;
};

/// A vertical segment {anchor} x [lo,hi] or a horizontal [lo,hi] x {anchor}.
/// lo is always where the line starts (lines move up or right).
struct Segment {
  Orientation orientation = Orientation::kVertical;
  double anchor = 0;
  double lo = 0;
  double hi = 0;
  PointKind lo_kind = PointKind::VE;
  PointKind hi_kind = PointKind::VS;

  double length() const { return hi - lo; }
  Point start() const;
  Point end() const;

  bool operator==(const Segment&) const = default;
};

/// A finite space-time diagram inside a rectangle.
struct Configuration {
  Rectangle rect;
  std::vector<Segment> segments;
  std::vector<Point> crossings;

  explicit Configuration(Rectangle r) : rect(r) {}
  Configuration(Rectangle r, std::vector<Segment> s, std::vector<Point> c)
      : rect(r), segments(std::move(s)), crossings(std::move(c)) {}

  std::size_t vertical_count() const;
  std::size_t horizontal_count() const;
  bool empty() const { return segments.empty() && crossings.empty(); }

  /// Same diagram with verticals sorted by abscissa, then horizontals by
  /// ordinate, and crossings sorted lexicographically.
  Configuration normalized() const;

  bool operator==(const Configuration&) const = default;
};

/// Segment counts, the thirteen point counts and total segment lengths.
struct ConfigStats {
  std::int64_t n = 0;  // verticals
  std::int64_t m = 0;  // horizontals
  std::array<std::int64_t, kPointKindCount> counts{};
  double LV = 0;
  double LH = 0;

  std::int64_t operator[](PointKind k) const { return counts[index_of(k)]; }
  std::int64_t& operator[](PointKind k) { return counts[index_of(k)]; }

  /// n, m followed by the thirteen counts in PointKind order.
  std::vector<std::int64_t> integer_features() const;

  bool operator==(const ConfigStats&) const = default;
};

}  // namespace bullet
