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

#include "bullet/reversibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bullet {

ReversibilityInvariants invariants_of(const Parameter& p) {
  const double rv = p.lambdaV + p.tauV;
  const double rh = p.lambdaH + p.tauH;
  const double q = p.pH + p.pV;
  return {rh * rv - p.tauV * p.tauH, q * rv - p.pV * p.lambdaV,
          q * rh - p.pH * p.lambdaH};
}

Parameter r_reverse(const Parameter& p) {
  return {p.lambda0, p.lambdaH, p.lambdaV, p.tauH, p.tauV, p.pH, p.pV, p.p0};
}

bool close(double l, double r, double tol) {
  return std::abs(l - r) <= tol * std::max({1.0, std::abs(l), std::abs(r)});
}

namespace {

std::string format(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::optional<NotApplicable> degenerate(const ReversibilityInvariants& k,
                                        double tol) {
  if (std::abs(k.A) <= tol) return NotApplicable{"A = 0"};
  if (std::abs(k.BV) <= tol) return NotApplicable{"BV = 0"};
  if (std::abs(k.BH) <= tol) return NotApplicable{"BH = 0"};
  return std::nullopt;
}

// Clamp rounding noise so the result passes parameter validation.
Parameter settle(Parameter p, double tol) {
  auto fix = [tol](double& v) {
    if (v < 0 && v > -tol * 16) v = 0;
  };
  for (double* v : {&p.lambda0, &p.lambdaV, &p.lambdaH, &p.tauV, &p.tauH,
                    &p.pV, &p.pH, &p.p0}) {
    fix(*v);
  }
  for (double* v : {&p.pV, &p.pH, &p.p0}) {
    if (*v > 1 && *v < 1 + tol * 16) *v = 1;
  }
  return p;
}

ReverseResult finish(Parameter pt, double nu_h, double nu_v, double rnu_h,
                     double rnu_v, const char* source, double tol) {
  pt = settle(pt, tol);
  try {
    validate(pt);
  } catch (const Error& e) {
    return NotApplicable{std::string("reverse parameter is invalid: ") +
                         e.what()};
  }
  if (nu_h < 0 || nu_v < 0) {
    return NotApplicable{"stationary intensities are negative"};
  }
  return ReversePair{pt, nu_h, nu_v, rnu_h, rnu_v, source};
}

}  // namespace

ReverseResult corollary_pi(const Parameter& p, double tol) {
  validate(p);
  const auto k = invariants_of(p);
  if (auto na = degenerate(k, tol)) return *na;
  const double l = k.BH * k.BV * p.lambda0;
  const double r = k.A * k.A * p.p0;
  if (!close(l, r, tol)) {
    return NotApplicable{"BH BV lambda0 = " + format(l) +
                         " differs from A^2 p0 = " + format(r)};
  }
  const double nu_h = k.A / k.BH;
  const double nu_v = k.A / k.BV;
  Parameter t;
  t.lambda0 = p.lambda0;
  t.lambdaV = nu_h * p.pV;
  t.lambdaH = nu_v * p.pH;
  t.tauV = (k.BV / k.BH) * p.tauH;
  t.tauH = (k.BH / k.BV) * p.tauV;
  t.pV = (k.BH / k.A) * p.lambdaV;
  t.pH = (k.BV / k.A) * p.lambdaH;
  t.p0 = p.p0;
  return finish(t, nu_h, nu_v, nu_h, nu_v, "corollary-pi", tol);
}

ReverseResult corollary_pi2(const Parameter& p, double tol) {
  validate(p);
  const auto k = invariants_of(p);
  if (auto na = degenerate(k, tol)) return *na;
  const double l1 = k.BV * p.lambda0;
  const double r1 = k.A * p.tauV;
  if (!close(l1, r1, tol)) {
    return NotApplicable{"BV lambda0 = " + format(l1) +
                         " differs from A tauV = " + format(r1)};
  }
  const double l2 = k.A * p.p0;
  const double r2 = k.BH * p.tauV;
  if (!close(l2, r2, tol)) {
    return NotApplicable{"A p0 = " + format(l2) + " differs from BH tauV = " +
                         format(r2)};
  }
  const double nu_h = k.A / k.BH;
  const double nu_v = k.A / k.BV;
  Parameter t;
  t.lambda0 = (k.A / k.BV) * p.tauV;
  t.lambdaV = (k.A / k.BV) * p.pH;
  t.lambdaH = p.lambdaV;
  t.tauV = (k.BH / k.BV) * p.tauV;
  t.tauH = p.tauV;
  t.pV = (k.BV / k.A) * p.lambdaH;
  t.pH = p.pV;
  t.p0 = (k.BV / k.A) * p.tauH;
  return finish(t, nu_h, nu_v, nu_v, nu_h, "corollary-pi2", tol);
}

bool ConditionReport::condition_passed(int k) const {
  return std::all_of(items.begin(), items.end(), [k](const ConditionItem& i) {
    return i.condition != k || i.satisfied;
  });
}

namespace {

struct ReportBuilder {
  ConditionReport report;
  double tol;

  void eq(int condition, std::string label, double l, double r) {
    report.items.push_back({condition, std::move(label), l, r, close(l, r, tol)});
  }
  ConditionReport done() {
    report.passed = std::all_of(report.items.begin(), report.items.end(),
                                [](const ConditionItem& i) { return i.satisfied; });
    return report;
  }
};

}  // namespace

ConditionReport check_theorem_pi(const Parameter& p, const Parameter& t,
                                 double nu_v, double nu_h, double tol) {
  ReportBuilder b{{"pi", {}, false}, tol};
  b.eq(1, "~lambdaH + ~tauH = lambdaH + tauH", t.lambdaH + t.tauH,
       p.lambdaH + p.tauH);
  b.eq(1, "~lambdaV + ~tauV = lambdaV + tauV", t.lambdaV + t.tauV,
       p.lambdaV + p.tauV);
  b.eq(2, "~lambda0 = lambda0", t.lambda0, p.lambda0);
  b.eq(2, "lambda0 = nuV nuH p0", p.lambda0, nu_v * nu_h * p.p0);
  b.eq(2, "~lambdaV = nuH pV", t.lambdaV, nu_h * p.pV);
  b.eq(2, "~lambdaH = nuV pH", t.lambdaH, nu_v * p.pH);
  b.eq(3, "nuV ~tauV = nuH tauH", nu_v * t.tauV, nu_h * p.tauH);
  b.eq(3, "nuH ~tauH = nuV tauV", nu_h * t.tauH, nu_v * p.tauV);
  b.eq(4, "nuH ~pV = lambdaV", nu_h * t.pV, p.lambdaV);
  b.eq(4, "nuV ~pH = lambdaH", nu_v * t.pH, p.lambdaH);
  b.eq(4, "~p0 = p0", t.p0, p.p0);
  b.eq(5, "~pV + ~pH + ~p0 = pV + pH + p0", t.pV + t.pH + t.p0,
       p.pV + p.pH + p.p0);
  return b.done();
}

ConditionReport check_theorem_pi2(const Parameter& p, const Parameter& t,
                                  double nu_v, double tol) {
  ReportBuilder b{{"pi2", {}, false}, tol};
  b.eq(1, "~lambdaH + ~tauH = lambdaV + tauV", t.lambdaH + t.tauH,
       p.lambdaV + p.tauV);
  b.eq(1, "~lambdaV + ~tauV = lambdaH + tauH", t.lambdaV + t.tauV,
       p.lambdaH + p.tauH);
  b.eq(2, "~lambda0 = lambda0", t.lambda0, p.lambda0);
  b.eq(2, "lambda0 = nuV tauV", p.lambda0, nu_v * p.tauV);
  b.eq(2, "~lambdaV = nuV pH", t.lambdaV, nu_v * p.pH);
  b.eq(2, "~lambdaH = lambdaV", t.lambdaH, p.lambdaV);
  b.eq(3, "~tauV = nuV p0", t.tauV, nu_v * p.p0);
  b.eq(3, "nuV ~tauH = lambda0", nu_v * t.tauH, p.lambda0);
  b.eq(4, "nuV ~pV = lambdaH", nu_v * t.pV, p.lambdaH);
  b.eq(4, "~pH = pV", t.pH, p.pV);
  b.eq(4, "nuV ~p0 = tauH", nu_v * t.p0, p.tauH);
  b.eq(5, "~pV + ~pH + ~p0 = pV + pH + p0", t.pV + t.pH + t.p0,
       p.pV + p.pH + p.p0);
  return b.done();
}

namespace {

enum class Step { kR, kPi, kPi2 };

// One reverse step. Intensities of the input law are reported when the
// step determines them; `swaps` tells whether the step exchanges them.
struct StepResult {
  ReverseResult result;
  bool swaps = false;
};

StepResult run_step(Step s, const Parameter& p, double tol) {
  switch (s) {
    case Step::kR: {
      ReversePair out{r_reverse(p), {}, {}, {}, {}, "r"};
      if (const auto pi = corollary_pi(p, tol); applicable(pi)) {
        const auto& q = std::get<ReversePair>(pi);
        out.nu_h = q.nu_h;
        out.nu_v = q.nu_v;
        out.reverse_nu_h = q.nu_v;
        out.reverse_nu_v = q.nu_h;
      }
      return {out, true};
    }
    case Step::kPi:
      return {corollary_pi(p, tol), false};
    case Step::kPi2:
      return {corollary_pi2(p, tol), true};
  }
  return {NotApplicable{"unknown step"}, false};
}

// Steps applied in order: the last one is the outermost factor of g.
std::vector<Step> steps_of(Symmetry g) {
  switch (g) {
    case Symmetry::kIdentity: return {};
    case Symmetry::kRot90: return {Step::kPi2};
    case Symmetry::kRot180: return {Step::kPi};
    case Symmetry::kRot270: return {Step::kR, Step::kPi2, Step::kR};
    case Symmetry::kReflect: return {Step::kR};
    case Symmetry::kReflectRot90: return {Step::kPi2, Step::kR};
    case Symmetry::kReflectRot180: return {Step::kPi, Step::kR};
    case Symmetry::kReflectRot270: return {Step::kR, Step::kPi2};
  }
  return {};
}

}  // namespace

ReverseResult reverse_under(Symmetry g, const Parameter& p, double tol) {
  validate(p);
  if (g == Symmetry::kIdentity) {
    auto pi = corollary_pi(p, tol);
    if (!applicable(pi)) return pi;
    const auto& q = std::get<ReversePair>(pi);
    return ReversePair{p, q.nu_h, q.nu_v, q.nu_h, q.nu_v, "identity"};
  }
  const std::vector<Step> steps = steps_of(g);

  Parameter cur = p;
  // Intensities of the original law, expressed in the current frame.
  std::optional<double> nu_h;
  std::optional<double> nu_v;
  bool swapped = false;  // current frame exchanges the original intensities
  std::string source;
  for (Step s : steps) {
    StepResult sr = run_step(s, cur, tol);
    if (!applicable(sr.result)) {
      auto na = std::get<NotApplicable>(sr.result);
      na.reason = std::string(to_string(g)) + ": " + na.reason;
      return na;
    }
    const auto& q = std::get<ReversePair>(sr.result);
    if (!nu_h && q.nu_h) {
      nu_h = swapped ? q.nu_v : q.nu_h;
      nu_v = swapped ? q.nu_h : q.nu_v;
    }
    if (!source.empty()) source += " then ";
    source += q.source;
    cur = q.params;
    if (sr.swaps) swapped = !swapped;
  }
  ReversePair out{cur, nu_h, nu_v, {}, {}, source};
  if (nu_h) {
    out.reverse_nu_h = swapped ? *nu_v : *nu_h;
    out.reverse_nu_v = swapped ? *nu_h : *nu_v;
  }
  return out;
}

}  // namespace bullet
