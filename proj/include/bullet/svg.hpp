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

#include <string>

#include "bullet/model.hpp"

namespace bullet {

struct SvgStyle {
  double width_px = 600;     // height follows the aspect ratio
  bool show_births = false;  // also mark split and turn points
  double dot_radius_px = 3;
  double stroke_px = 1;
};

/// SVG 1.1 picture: a frame, one line per segment, filled dots at ex-nihilo
/// creations and open dots at deaths (OA, VA, HA).
std::string render_svg(const Configuration& u, const SvgStyle& style = {});

}  // namespace bullet
