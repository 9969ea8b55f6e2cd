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

#include "bullet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "bullet/density.hpp"
#include "bullet/diagram.hpp"
#include "bullet/stat_tests.hpp"

namespace bullet {

std::string_view to_string(ReportKind k) {
  switch (k) {
    case ReportKind::kDensityIdentityPi: return "density-identity-pi";
    case ReportKind::kDensityIdentityPi2: return "density-identity-pi2";
    case ReportKind::kStationarity: return "stationarity";
    case ReportKind::kQrDistribution: return "qr-distribution";
    case ReportKind::kEmptyProbability: return "empty-probability";
  }
  return "unknown";
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

RngStream replicate_stream(std::uint64_t seed, std::uint64_t side,
                           std::uint64_t i) {
  return RngStream::substream(derive_seed(seed, side), i);
}

namespace {

void require_replicates(std::int64_t n) {
  if (n <= 0) throw Error("number of replicates must be positive");
}

VerificationReport density_identity(ReportKind kind, Symmetry g,
                                    const Parameter& p, const Parameter& pt,
                                    const PoissonLaw& forward,
                                    const PoissonLaw& image_law,
                                    const Rectangle& rect, std::int64_t n,
                                    std::uint64_t seed, double tol) {
  require_replicates(n);
  validate(p);
  validate(pt);
  struct Row {
    double delta = 0;
    bool finite = true;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n));
  parallel_for(rows.size(), [&](std::size_t i) {
    RngStream rng = replicate_stream(seed, 0, i);
    const Configuration u = build_diagram(p, forward, rect, rng);
    const Configuration v = apply_symmetry(g, u);
    const LogDensity a = log_density(u, p, forward);
    const LogDensity b = log_density(v, pt, image_law);
    if (!a.finite_support || !b.finite_support) {
      rows[i].finite = false;
      return;
    }
    rows[i].delta = std::abs(a.value - b.value);
  });

  VerificationReport rep;
  rep.kind = kind;
  rep.replicates = n;
  rep.seed = seed;
  rep.threshold = tol;
  double worst = 0;
  std::int64_t finite = 0;
  for (const Row& r : rows) {
    if (!r.finite) {
      ++rep.support_violations;
      continue;
    }
    ++finite;
    worst = std::max(worst, r.delta);
  }
  rep.max_abs_deviation = worst;
  rep.statistics.push_back({"finiteReplicates", static_cast<double>(finite)});
  rep.passed = rep.support_violations == 0 && worst <= tol;
  return rep;
}

// Records one test; undefined tests are noted and skipped.
template <typename F>
void run_test(VerificationReport& rep, const std::string& name, F&& test) {
  try {
    const TestResult r = test();
    rep.statistics.push_back({name, r.statistic});
    rep.p_values.push_back({name, r.p_value});
  } catch (const Error& e) {
    rep.notes.push_back(name + ": inconclusive (" + e.what() + ")");
  }
}

void decide(VerificationReport& rep) {
  rep.passed = !rep.p_values.empty() &&
               std::all_of(rep.p_values.begin(), rep.p_values.end(),
                           [&](const NamedValue& v) {
                             return v.value >= rep.threshold;
                           });
}

}  // namespace

VerificationReport verify_density_identity_pi(const Parameter& p,
                                              const Parameter& pt, double nu_h,
                                              double nu_v, const Rectangle& rect,
                                              std::int64_t n, std::uint64_t seed,
                                              double tol) {
  const PoissonLaw law{nu_h, nu_v};
  return density_identity(ReportKind::kDensityIdentityPi, Symmetry::kRot180, p,
                          pt, law, law, rect, n, seed, tol);
}

VerificationReport verify_density_identity_pi2(const Parameter& p,
                                               const Parameter& pt, double nu_h,
                                               double nu_v,
                                               const Rectangle& rect,
                                               std::int64_t n,
                                               std::uint64_t seed, double tol) {
  return density_identity(ReportKind::kDensityIdentityPi2, Symmetry::kRot90, p,
                          pt, PoissonLaw{nu_h, nu_v}, PoissonLaw{nu_v, nu_h},
                          rect, n, seed, tol);
}

VerificationReport verify_empty_probability(const Parameter& p, double nu_h,
                                            double nu_v, const Rectangle& rect,
                                            std::int64_t n, std::uint64_t seed) {
  require_replicates(n);
  validate(p);
  const PoissonLaw law{nu_h, nu_v};
  validate_law(law, rect);
  std::vector<char> empty(static_cast<std::size_t>(n), 0);
  parallel_for(empty.size(), [&](std::size_t i) {
    RngStream rng = replicate_stream(seed, 0, i);
    empty[i] = build_diagram(p, law, rect, rng).empty() ? 1 : 0;
  });
  const double hits =
      static_cast<double>(std::count(empty.begin(), empty.end(), 1));
  const double freq = hits / static_cast<double>(n);
  const double target = std::exp(-nu_v * rect.width() - nu_h * rect.height() -
                                  p.lambda0 * rect.area());
  const double sigma = std::sqrt(target * (1 - target) / static_cast<double>(n));
  VerificationReport rep;
  rep.kind = ReportKind::kEmptyProbability;
  rep.replicates = n;
  rep.seed = seed;
  rep.threshold = 4;
  rep.statistics = {{"frequency", freq},
                    {"target", target},
                    {"sigma", sigma},
                    {"deviation", std::abs(freq - target)}};
  rep.passed = std::abs(freq - target) <= 4 * sigma;
  return rep;
}

VerificationReport verify_stationarity(const Parameter& p, double nu_h,
                                       double nu_v, const Rectangle& rect,
                                       Point shift, std::int64_t n,
                                       std::uint64_t seed, double alpha) {
  require_replicates(n);
  validate(p);
  const PoissonLaw law{nu_h, nu_v};
  validate_law(law, rect);
  if (!(shift.x > 0 && shift.y > 0 && rect.x0() + shift.x < rect.x1() &&
        rect.y0() + shift.y < rect.y1())) {
    throw Error("shifted window must lie strictly inside the rectangle");
  }
  const Rectangle sub(rect.x0() + shift.x, rect.y0() + shift.y, rect.x1(),
                      rect.y1());

  struct Row {
    std::vector<double> h_entries;
    std::vector<double> v_entries;
    ConfigStats restricted;
    ConfigStats fresh;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n));
  parallel_for(rows.size(), [&](std::size_t i) {
    RngStream rng = replicate_stream(seed, 0, i);
    const Configuration u = build_diagram(p, law, rect, rng);
    const Configuration r = restrict_to(u, sub);
    for (const Segment& s : r.segments) {
      if (s.lo_kind == PointKind::HE) rows[i].h_entries.push_back(s.anchor);
      if (s.lo_kind == PointKind::VE) rows[i].v_entries.push_back(s.anchor);
    }
    rows[i].restricted = extract_stats(r);
    RngStream fresh_rng = replicate_stream(seed, 1, i);
    rows[i].fresh = extract_stats(build_diagram(p, law, sub, fresh_rng));
  });

  VerificationReport rep;
  rep.kind = ReportKind::kStationarity;
  rep.replicates = n;
  rep.seed = seed;
  rep.threshold = alpha;

  std::vector<std::int64_t> hc;
  std::vector<std::int64_t> vc;
  std::vector<double> hpos;
  std::vector<double> vpos;
  std::vector<std::vector<std::int64_t>> fa;
  std::vector<std::vector<std::int64_t>> fb;
  std::vector<double> lva, lvb, lha, lhb;
  for (const Row& r : rows) {
    hc.push_back(static_cast<std::int64_t>(r.h_entries.size()));
    vc.push_back(static_cast<std::int64_t>(r.v_entries.size()));
    hpos.insert(hpos.end(), r.h_entries.begin(), r.h_entries.end());
    vpos.insert(vpos.end(), r.v_entries.begin(), r.v_entries.end());
    fa.push_back(r.restricted.integer_features());
    fb.push_back(r.fresh.integer_features());
    lva.push_back(r.restricted.LV);
    lvb.push_back(r.fresh.LV);
    lha.push_back(r.restricted.LH);
    lhb.push_back(r.fresh.LH);
  }

  auto count_test = [&](const std::string& name,
                        const std::vector<std::int64_t>& counts, double mean) {
    if (mean == 0) {
      const bool all_zero =
          std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 0; });
      rep.statistics.push_back({name, all_zero ? 0.0 : 1.0});
      rep.p_values.push_back({name, all_zero ? 1.0 : 0.0});
      return;
    }
    run_test(rep, name, [&] { return chisq_gof_poisson(counts, mean); });
  };
  count_test("entryHorizontalCount", hc, nu_h * sub.height());
  count_test("entryVerticalCount", vc, nu_v * sub.width());
  run_test(rep, "entryHorizontalPosition",
           [&] { return ks_uniform(hpos, sub.y0(), sub.y1()); });
  run_test(rep, "entryVerticalPosition",
           [&] { return ks_uniform(vpos, sub.x0(), sub.x1()); });
  run_test(rep, "entryCountCorrelation", [&] {
    return correlation_test(std::vector<double>(hc.begin(), hc.end()),
                            std::vector<double>(vc.begin(), vc.end()));
  });
  run_test(rep, "restrictedVsFreshCounts", [&] { return two_sample_chisq(fa, fb); });
  run_test(rep, "restrictedVsFreshLV", [&] { return ks_two_sample(lva, lvb); });
  run_test(rep, "restrictedVsFreshLH", [&] { return ks_two_sample(lha, lhb); });
  decide(rep);
  return rep;
}

VerificationReport verify_qr_distribution(Symmetry g, const Parameter& p,
                                          const Parameter& pt,
                                          const PoissonLaw& forward,
                                          const PoissonLaw& reverse,
                                          const Rectangle& rect, std::int64_t n,
                                          std::uint64_t seed, double alpha) {
  if (g != Symmetry::kRot180 && g != Symmetry::kRot90) {
    throw Error("distributional test supports pi and pi2 only");
  }
  require_replicates(n);
  validate(p);
  validate(pt);
  const Rectangle image = apply(g, rect);
  validate_law(forward, rect);
  validate_law(reverse, image);

  std::vector<ConfigStats> fwd(static_cast<std::size_t>(n));
  std::vector<ConfigStats> rev(static_cast<std::size_t>(n));
  parallel_for(fwd.size(), [&](std::size_t i) {
    RngStream a = replicate_stream(seed, 0, i);
    fwd[i] = extract_stats(apply_symmetry(g, build_diagram(p, forward, rect, a)));
    RngStream b = replicate_stream(seed, 1, i);
    rev[i] = extract_stats(build_diagram(pt, reverse, image, b));
  });

  VerificationReport rep;
  rep.kind = ReportKind::kQrDistribution;
  rep.replicates = n;
  rep.seed = seed;
  rep.threshold = alpha;
  std::vector<std::vector<std::int64_t>> fa, fb;
  std::vector<double> lva, lvb, lha, lhb;
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    fa.push_back(fwd[i].integer_features());
    fb.push_back(rev[i].integer_features());
    lva.push_back(fwd[i].LV);
    lvb.push_back(rev[i].LV);
    lha.push_back(fwd[i].LH);
    lhb.push_back(rev[i].LH);
  }
  run_test(rep, "counts", [&] { return two_sample_chisq(fa, fb); });
  run_test(rep, "LV", [&] { return ks_two_sample(lva, lvb); });
  run_test(rep, "LH", [&] { return ks_two_sample(lha, lhb); });
  decide(rep);
  return rep;
}

}  // namespace bullet
