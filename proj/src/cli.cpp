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

#include "bullet/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "bullet/density.hpp"
#include "bullet/diagram.hpp"
#include "bullet/json_io.hpp"
#include "bullet/presets.hpp"
#include "bullet/reversibility.hpp"
#include "bullet/sampler.hpp"
#include "bullet/svg.hpp"
#include "bullet/verify.hpp"

namespace bullet {

using json = nlohmann::ordered_json;

std::string resolve_output_path(const std::string& path) {
  const char* dir = std::getenv("BULLET_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  const std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(dir) / p).string();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& bytes,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  const std::string target = resolve_output_path(path);
  std::ofstream f(target, std::ios::binary);
  if (!f) throw Error("cannot write '" + target + "'");
  f << bytes;
  if (!f) throw Error("failed writing '" + target + "'");
}

// Parameter choice shared by several subcommands.
struct ParamOptions {
  std::string spec;
  std::optional<double> alpha;

  void add(CLI::App* app, bool with_alpha = true) {
    app->add_option("--preset,--params", spec,
                    "preset name (cbmc, loop-half, loop, hammersley, bggs, "
                    "bggs:<alpha>, pv, ph) or eight comma-separated numbers");
    if (with_alpha) app->add_option("--alpha", alpha, "alpha of the bggs preset");
  }
  bool given() const { return !spec.empty(); }
  Parameter params() const {
    if (spec.empty()) throw Error("a parameter is required (--preset)");
    if (alpha) {
      if (spec != "bggs") throw Error("--alpha applies to the bggs preset only");
      return bggs_preset(*alpha).params;
    }
    return parse_parameter(spec);
  }
  PoissonLaw default_law() const {
    if (alpha) return bggs_preset(*alpha).law;
    if (auto p = find_preset(spec)) return p->law;
    return {1, 1};
  }
  std::optional<std::string> preset() const {
    if (alpha) return "bggs:" + json(*alpha).dump();
    if (find_preset(spec)) return spec;
    return std::nullopt;
  }
};

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  const auto v = parse_numbers(text);
  if (v.size() != 2) throw Error(std::string(what) + " takes two numbers a,b");
  return {v[0], v[1]};
}

int verification_exit(const VerificationReport& r) { return r.passed ? 0 : 1; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"bulletlab: bullet model simulator and verification lab",
               "bulletlab"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "sample a space-time diagram");
  ParamOptions sim_p;
  sim_p.add(sim);
  std::string sim_nu, sim_cx, sim_cy, sim_rect = "0,0,1,1", sim_out, sim_svg;
  std::uint64_t sim_seed = 0;
  std::int64_t sim_max = kDefaultMaxEvents;
  bool sim_births = false;
  sim->add_option("--nu", sim_nu, "Poisson entry intensities nuH,nuV");
  sim->add_option("--cx", sim_cx, "explicit bottom-edge entries");
  sim->add_option("--cy", sim_cy, "explicit left-edge entries");
  sim->add_option("--rect", sim_rect, "window x0,y0,x1,y1");
  sim->add_option("--seed", sim_seed, "random seed");
  sim->add_option("--max-events", sim_max, "event cap");
  sim->add_option("--out", sim_out, "diagram JSON output (default stdout)");
  sim->add_option("--svg", sim_svg, "also write an SVG picture");
  sim->add_flag("--births", sim_births, "mark split and turn points in the SVG");

  // stats
  auto* st = app.add_subcommand("stats", "point counts and lengths of a diagram");
  std::string st_in;
  st->add_option("input,--in", st_in, "diagram JSON")->required();

  // density
  auto* den = app.add_subcommand("density", "log density of a diagram");
  std::string den_in, den_nu;
  ParamOptions den_p;
  den_p.add(den);
  den->add_option("input,--in", den_in, "diagram JSON")->required();
  den->add_option("--nu", den_nu, "Poisson entry intensities nuH,nuV");

  // reverse
  auto* rev = app.add_subcommand("reverse", "g-reverse of a parameter");
  ParamOptions rev_p;
  rev_p.add(rev);
  std::string rev_g = "pi";
  double rev_tol = kDefaultTolerance;
  rev->add_option("--g", rev_g, "symmetry: id, r, pi, pi2, pi32, rpi, rpi2, rpi32");
  rev->add_option("--tol", rev_tol, "relative tolerance");

  // check
  auto* chk = app.add_subcommand("check", "conditions of the reversal theorems");
  ParamOptions chk_p;
  chk_p.add(chk);
  std::string chk_rev, chk_theorem = "pi", chk_nu = "1,1";
  double chk_tol = kDefaultTolerance;
  chk->add_option("--reverse", chk_rev, "candidate reverse parameter")->required();
  chk->add_option("--theorem", chk_theorem, "pi or pi2")
      ->check(CLI::IsMember({"pi", "pi2"}));
  chk->add_option("--nu", chk_nu, "intensities nuH,nuV (pi2 uses nuV)");
  chk->add_option("--tol", chk_tol, "relative tolerance");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  ParamOptions ver_p;
  ver_p.add(ver, false);
  std::string ver_rev, ver_nu, ver_rnu, ver_rect = "-1,-1,1,1",
                       ver_shift = "1,1", ver_g = "pi", ver_out;
  std::int64_t ver_n = 1000;
  std::uint64_t ver_seed = 1;
  double ver_alpha = 1e-3;
  double ver_tol = 1e-9;
  ver->add_option("suite", suite,
                  "density-pi, density-pi2, empty, stationarity or qr")
      ->required()
      ->check(CLI::IsMember(
          {"density-pi", "density-pi2", "empty", "stationarity", "qr"}));
  ver->add_option("--reverse", ver_rev, "reverse parameter (default: computed)");
  ver->add_option("--nu", ver_nu, "forward intensities nuH,nuV");
  ver->add_option("--reverse-nu", ver_rnu, "reverse intensities nuH,nuV (qr)");
  ver->add_option("--rect", ver_rect, "window x0,y0,x1,y1");
  ver->add_option("--shift", ver_shift, "stationarity shift dx,dy");
  ver->add_option("--g", ver_g, "qr symmetry: pi or pi2")
      ->check(CLI::IsMember({"pi", "pi2"}));
  ver->add_option("--n", ver_n, "replicates");
  ver->add_option("--seed", ver_seed, "random seed");
  ver->add_option("--alpha", ver_alpha, "significance level");
  ver->add_option("--tol", ver_tol, "identity tolerance");
  ver->add_option("--out", ver_out, "report JSON output (default stdout)");

  // render
  auto* ren = app.add_subcommand("render", "SVG picture of a diagram");
  std::string ren_in, ren_out;
  bool ren_births = false;
  double ren_width = 600;
  ren->add_option("input,--in", ren_in, "diagram JSON")->required();
  ren->add_option("--out", ren_out, "SVG output (default stdout)");
  ren->add_flag("--births", ren_births, "mark split and turn points");
  ren->add_option("--width", ren_width, "picture width in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*sim) {
      const Parameter p = sim_p.params();
      const Rectangle rect = parse_rectangle(sim_rect);
      InitialLaw law = sim_p.default_law();
      if (!sim_cx.empty() || !sim_cy.empty()) {
        if (!sim_nu.empty()) throw Error("--nu cannot be combined with --cx/--cy");
        law = ExplicitLaw{parse_numbers(sim_cx), parse_numbers(sim_cy)};
      } else if (!sim_nu.empty()) {
        const auto [h, v] = parse_pair(sim_nu, "--nu");
        law = PoissonLaw{h, v};
      }
      RngStream rng(sim_seed);
      const Configuration u = build_diagram(p, law, rect, rng, sim_max);
      DiagramMeta meta{p, law, sim_seed, sim_p.preset()};
      if (!sim_svg.empty()) {
        SvgStyle style;
        style.show_births = sim_births;
        write_output(sim_svg, render_svg(u, style), out);
      }
      if (!sim_out.empty() || sim_svg.empty()) {
        write_output(sim_out, encode_diagram(u, meta), out);
      }
      return 0;
    }
    if (*st) {
      const auto doc = decode_diagram(read_file(st_in));
      out << dump(to_json(extract_stats(doc.diagram)));
      return 0;
    }
    if (*den) {
      const auto doc = decode_diagram(read_file(den_in));
      const Parameter p = den_p.given() ? den_p.params() : doc.meta.params;
      InitialLaw law = doc.meta.law;
      if (!den_nu.empty()) {
        const auto [h, v] = parse_pair(den_nu, "--nu");
        law = PoissonLaw{h, v};
      }
      json j{{"params", to_json(p)},
             {"law", to_json(law)},
             {"logDensity", to_json(log_density(doc.diagram, p, law))}};
      out << dump(j);
      return 0;
    }
    if (*rev) {
      const Parameter p = rev_p.params();
      const Symmetry g = symmetry_from_string(rev_g);
      json j{{"g", std::string(to_string(g))},
             {"params", to_json(p)},
             {"invariants", to_json(invariants_of(p))}};
      const json result = to_json(reverse_under(g, p, rev_tol));
      for (const auto& [k, v] : result.items()) j[k] = v;
      out << dump(j);
      return 0;
    }
    if (*chk) {
      const Parameter p = chk_p.params();
      const Parameter pt = parse_parameter(chk_rev);
      const auto [nu_h, nu_v] = parse_pair(chk_nu, "--nu");
      const ConditionReport r =
          chk_theorem == "pi" ? check_theorem_pi(p, pt, nu_v, nu_h, chk_tol)
                              : check_theorem_pi2(p, pt, nu_v, chk_tol);
      out << dump(to_json(r));
      return r.passed ? 0 : 1;
    }
    if (*ver) {
      const Parameter p = ver_p.params();
      const Rectangle rect = parse_rectangle(ver_rect);
      PoissonLaw fwd = ver_p.default_law();
      if (!ver_nu.empty()) {
        const auto [h, v] = parse_pair(ver_nu, "--nu");
        fwd = PoissonLaw{h, v};
      }
      auto reverse_param = [&](Symmetry g) {
        if (!ver_rev.empty()) return parse_parameter(ver_rev);
        const auto r = reverse_under(g, p);
        if (!applicable(r)) {
          throw Error("no reverse parameter: " + std::get<NotApplicable>(r).reason +
                      " (pass --reverse)");
        }
        return std::get<ReversePair>(r).params;
      };
      VerificationReport rep;
      if (suite == "density-pi") {
        rep = verify_density_identity_pi(p, reverse_param(Symmetry::kRot180),
                                         fwd.nu_h, fwd.nu_v, rect, ver_n,
                                         ver_seed, ver_tol);
      } else if (suite == "density-pi2") {
        rep = verify_density_identity_pi2(p, reverse_param(Symmetry::kRot90),
                                          fwd.nu_h, fwd.nu_v, rect, ver_n,
                                          ver_seed, ver_tol);
      } else if (suite == "empty") {
        rep = verify_empty_probability(p, fwd.nu_h, fwd.nu_v, rect, ver_n,
                                       ver_seed);
      } else if (suite == "stationarity") {
        const auto [dx, dy] = parse_pair(ver_shift, "--shift");
        rep = verify_stationarity(p, fwd.nu_h, fwd.nu_v, rect, {dx, dy}, ver_n,
                                  ver_seed, ver_alpha);
      } else {
        const Symmetry g = symmetry_from_string(ver_g);
        PoissonLaw rlaw = g == Symmetry::kRot90 ? PoissonLaw{fwd.nu_v, fwd.nu_h}
                                                : fwd;
        if (!ver_rnu.empty()) {
          const auto [h, v] = parse_pair(ver_rnu, "--reverse-nu");
          rlaw = PoissonLaw{h, v};
        }
        rep = verify_qr_distribution(g, p, reverse_param(g), fwd, rlaw, rect,
                                     ver_n, ver_seed, ver_alpha);
      }
      write_output(ver_out, dump(to_json(rep)), out);
      return verification_exit(rep);
    }
    if (*ren) {
      const auto doc = decode_diagram(read_file(ren_in));
      SvgStyle style;
      style.show_births = ren_births;
      style.width_px = ren_width;
      write_output(ren_out, render_svg(doc.diagram, style), out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace bullet
