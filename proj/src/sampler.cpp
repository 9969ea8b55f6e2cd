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

#include "bullet/sampler.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace bullet {

std::vector<double> sample_ppp_interval(double rate, double lo, double hi,
                                        RngStream& rng) {
  if (!(rate >= 0) || !std::isfinite(rate)) {
    throw Error("Poisson rate must be finite and non-negative");
  }
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error("Poisson interval must satisfy lo < hi");
  }
  std::vector<double> out;
  if (rate == 0) return out;
  double t = lo;
  while (true) {
    t += rng.exponential(rate);
    if (!(t < hi)) break;
    // Gaps below the resolution of doubles would repeat a point.
    if (t == lo || (!out.empty() && t == out.back())) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<Point> sample_ppp_rectangle(double rate, const Rectangle& rect,
                                        RngStream& rng) {
  const auto xs =
      sample_ppp_interval(rate * rect.height(), rect.x0(), rect.x1(), rng);
  std::vector<Point> out;
  out.reserve(xs.size());
  for (double x : xs) {
    const double y = rect.y0() + rng.uniform() * rect.height();
    if (y <= rect.y0() || y >= rect.y1()) continue;
    out.push_back({x, y});
  }
  return out;
}

void validate_law(const InitialLaw& law, const Rectangle& rect) {
  if (const auto* p = std::get_if<PoissonLaw>(&law)) {
    if (!(p->nu_h >= 0) || !(p->nu_v >= 0) || !std::isfinite(p->nu_h) ||
        !std::isfinite(p->nu_v)) {
      throw Error("Poisson intensities must be finite and non-negative");
    }
    return;
  }
  const auto& e = std::get<ExplicitLaw>(law);
  auto check = [](const std::vector<double>& v, double lo, double hi,
                  const char* edge) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(lo < v[i] && v[i] < hi)) {
        throw Error(std::string("explicit entry outside the open ") + edge +
                    " edge");
      }
      if (i > 0 && !(v[i - 1] < v[i])) {
        throw Error(std::string("explicit ") + edge +
                    " entries must be strictly increasing");
      }
    }
  };
  check(e.cx, rect.x0(), rect.x1(), "bottom");
  check(e.cy, rect.y0(), rect.y1(), "left");
}

InitialCondition sample_initial_condition(const InitialLaw& law,
                                          const Rectangle& rect, RngStream& rng) {
  validate_law(law, rect);
  if (const auto* p = std::get_if<PoissonLaw>(&law)) {
    InitialCondition c;
    c.cx = sample_ppp_interval(p->nu_v, rect.x0(), rect.x1(), rng);
    c.cy = sample_ppp_interval(p->nu_h, rect.y0(), rect.y1(), rng);
    return c;
  }
  const auto& e = std::get<ExplicitLaw>(law);
  return {e.cx, e.cy};
}

namespace {

enum class EventType : int { kEntry = 0, kExNihilo = 1, kSplit = 2, kTurn = 3 };

struct Event {
  double x;
  EventType type;
  double y;
  std::uint64_t seq;
  std::size_t seg;  // owning horizontal for clock events

  auto key() const { return std::tuple(x, static_cast<int>(type), y, seq); }
  bool operator>(const Event& o) const { return key() > o.key(); }
};

class Sweep {
 public:
  Sweep(const Parameter& p, const Rectangle& rect, RngStream& rng,
        std::int64_t max_events)
      : p_(p), rect_(rect), rng_(rng), max_events_(max_events), out_(rect) {}

  Configuration run(const InitialCondition& init,
                    const std::vector<Point>& births) {
    for (double y : init.cy) add_horizontal(rect_.x0(), y, PointKind::HE);
    for (double x : init.cx) push(x, EventType::kEntry, rect_.y0(), 0);
    for (const Point& b : births) push(b.x, EventType::kExNihilo, b.y, 0);

    while (!queue_.empty()) {
      const Event e = queue_.top();
      queue_.pop();
      tick();
      switch (e.type) {
        case EventType::kEntry:
          vertical(e.x, e.y, PointKind::VE);
          break;
        case EventType::kExNihilo:
          add_horizontal(e.x, e.y, PointKind::OB);
          vertical(e.x, e.y, PointKind::OB);
          break;
        case EventType::kSplit:
          if (!alive_[e.seg]) break;
          vertical(e.x, e.y, PointKind::VB);
          schedule_clock(e.seg, e.x);
          break;
        case EventType::kTurn:
          if (!alive_[e.seg]) break;
          kill_horizontal(e.seg, e.x, PointKind::VT);
          vertical(e.x, e.y, PointKind::VT);
          break;
      }
    }
    for (const auto& [y, seg] : by_ordinate_) {
      Segment& s = out_.segments[seg];
      s.hi = rect_.x1();
      s.hi_kind = PointKind::HS;
      alive_[seg] = false;
    }
    by_ordinate_.clear();
    return std::move(out_);
  }

 private:
  void tick() {
    if (++events_ > max_events_) {
      std::ostringstream msg;
      msg << "runaway diagram: more than " << max_events_ << " events";
      throw RunawayDiagram(msg.str());
    }
  }

  void push(double x, EventType t, double y, std::size_t seg) {
    queue_.push({x, t, y, seq_++, seg});
  }

  void add_horizontal(double x, double y, PointKind lo_kind) {
    if (!ordinates_.insert(y).second) {
      throw Error("degenerate sample: two horizontal lines share an ordinate");
    }
    const std::size_t seg = out_.segments.size();
    out_.segments.push_back(
        {Orientation::kHorizontal, y, x, x, lo_kind, PointKind::HS});
    alive_.push_back(true);
    by_ordinate_.emplace(y, seg);
    schedule_clock(seg, x);
  }

  void kill_horizontal(std::size_t seg, double x, PointKind hi_kind) {
    Segment& s = out_.segments[seg];
    s.hi = x;
    s.hi_kind = hi_kind;
    alive_[seg] = false;
    by_ordinate_.erase(s.anchor);
  }

  void schedule_clock(std::size_t seg, double x) {
    const double rate = p_.lambdaH + p_.tauH;
    if (rate == 0) return;
    const double xn = x + rng_.exponential(rate);
    if (!(xn < rect_.x1())) return;
    const bool split = rng_.uniform() < p_.lambdaH / rate;
    push(xn, split ? EventType::kSplit : EventType::kTurn,
         out_.segments[seg].anchor, seg);
  }

  // Upward excursion of a vertical born at (x, y). Horizontals it spawns lie
  // at or below its remaining path and cannot meet it.
  void vertical(double x, double y, PointKind lo_kind) {
    if (!abscissas_.insert(x).second) {
      throw Error("degenerate sample: two vertical lines share an abscissa");
    }
    const std::size_t v = out_.segments.size();
    out_.segments.push_back(
        {Orientation::kVertical, x, y, y, lo_kind, PointKind::VS});
    alive_.push_back(false);
    const double rate = p_.lambdaV + p_.tauV;
    const double inf = std::numeric_limits<double>::infinity();
    auto finish = [&](double at, PointKind kind) {
      out_.segments[v].hi = at;
      out_.segments[v].hi_kind = kind;
    };

    while (true) {
      tick();
      const double own = y + rng_.exponential(rate);
      const auto it = by_ordinate_.upper_bound(y);
      const double meet = it == by_ordinate_.end() ? inf : it->first;
      if (own < meet && own < rect_.y1()) {
        if (rng_.uniform() < p_.lambdaV / rate) {
          add_horizontal(x, own, PointKind::HB);
          y = own;
          continue;
        }
        finish(own, PointKind::HT);
        add_horizontal(x, own, PointKind::HT);
        return;
      }
      if (meet < rect_.y1()) {
        const std::size_t h = it->second;
        const double u = rng_.uniform();
        y = meet;
        if (u < p_.pV) {
          kill_horizontal(h, x, PointKind::HA);
          continue;
        }
        if (u < p_.pV + p_.pH) {
          finish(meet, PointKind::VA);
          return;
        }
        if (u < p_.pV + p_.pH + p_.p0) {
          kill_horizontal(h, x, PointKind::OA);
          finish(meet, PointKind::OA);
          return;
        }
        out_.crossings.push_back({x, meet});
        continue;
      }
      finish(rect_.y1(), PointKind::VS);
      return;
    }
  }

  const Parameter& p_;
  Rectangle rect_;
  RngStream& rng_;
  std::int64_t max_events_;
  std::int64_t events_ = 0;
  std::uint64_t seq_ = 0;
  Configuration out_;
  std::vector<bool> alive_;  // indexed by segment; verticals stay false
  std::map<double, std::size_t> by_ordinate_;
  std::set<double> ordinates_;
  std::set<double> abscissas_;
  std::priority_queue<Event, std::vector<Event>, std::greater<>> queue_;
};

}  // namespace

Configuration build_diagram(const Parameter& params, const InitialLaw& law,
                            const Rectangle& rect, RngStream& rng,
                            std::int64_t max_events) {
  validate(params);
  if (max_events <= 0) throw Error("maxEvents must be positive");
  const InitialCondition init = sample_initial_condition(law, rect, rng);
  const auto births = sample_ppp_rectangle(params.lambda0, rect, rng);
  return Sweep(params, rect, rng, max_events).run(init, births);
}

}  // namespace bullet
