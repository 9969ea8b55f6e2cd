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

#include "bullet/svg.hpp"

#include <cstdio>
#include <sstream>

#include "bullet/diagram.hpp"

namespace bullet {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Configuration& u, const SvgStyle& style) {
  require_valid(u);
  const Rectangle& r = u.rect;
  const double scale = style.width_px / r.width();
  const double w = style.width_px;
  const double h = r.height() * scale;
  const double pad = 2 * style.dot_radius_px + style.stroke_px;
  auto px = [&](double x) { return num(pad + (x - r.x0()) * scale); };
  auto py = [&](double y) { return num(pad + (r.y1() - y) * scale); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << num(w + 2 * pad) << "\" height=\"" << num(h + 2 * pad)
     << "\" viewBox=\"0 0 " << num(w + 2 * pad) << ' ' << num(h + 2 * pad)
     << "\">\n";
  os << "<rect x=\"" << num(pad) << "\" y=\"" << num(pad) << "\" width=\""
     << num(w) << "\" height=\"" << num(h)
     << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"" << num(style.stroke_px)
     << "\"/>\n";
  os << "<g stroke=\"black\" stroke-width=\"" << num(style.stroke_px) << "\">\n";
  for (const Segment& s : u.segments) {
    const Point a = s.start();
    const Point b = s.end();
    os << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\""
       << px(b.x) << "\" y2=\"" << py(b.y) << "\"/>\n";
  }
  os << "</g>\n";

  for (const ClassifiedPoint& c : classify_points(u)) {
    bool filled;
    switch (c.kind) {
      case PointKind::OB:
        filled = true;
        break;
      case PointKind::VB:
      case PointKind::HB:
      case PointKind::VT:
      case PointKind::HT:
        if (!style.show_births) continue;
        filled = true;
        break;
      case PointKind::OA:
      case PointKind::VA:
      case PointKind::HA:
        filled = false;
        break;
      default:
        continue;
    }
    os << "<circle cx=\"" << px(c.point.x) << "\" cy=\"" << py(c.point.y)
       << "\" r=\"" << num(style.dot_radius_px) << "\" fill=\""
       << (filled ? "black" : "white") << "\" stroke=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bullet
