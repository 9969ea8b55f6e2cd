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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "bullet/cli.hpp"
#include "bullet/diagram.hpp"
#include "bullet/json_io.hpp"
#include "bullet/presets.hpp"
#include "bullet/svg.hpp"
#include "support.hpp"

namespace bullet {
namespace {

using json = nlohmann::ordered_json;
using K = PointKind;

TEST(Presets, RegistryValues) {
  const std::vector<std::pair<std::string, std::array<double, 8>>> want = {
      {"cbmc", {0, 1, 1, 0, 0, 0, 0, 1}},
      {"loop-half", {0, 1, 1, 0, 0, 0.5, 0.5, 0}},
      {"loop", {1, 0, 0, 1, 1, 0, 0, 1}},
      {"hammersley", {1, 0, 0, 0, 0, 0, 0, 1}},
      {"bggs", {1, 0, 0, 0, 0, 0, 0.25, 0.75}},
      {"pv", {0, 0, 1, 1, 0, 1, 0, 0}},
      {"ph", {0, 1, 0, 0, 1, 0, 1, 0}},
  };
  const auto& reg = preset_registry();
  ASSERT_EQ(reg.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(reg[i].name, want[i].first);
    EXPECT_EQ(reg[i].params.tuple(), want[i].second);
    const PoissonLaw law = reg[i].name == "loop-half" ? PoissonLaw{2, 2} : PoissonLaw{1, 1};
    EXPECT_EQ(reg[i].law, law) << reg[i].name;
  }
  EXPECT_EQ(find_preset("bggs:0.5")->params.tuple(),
            (std::array<double, 8>{1, 0, 0, 0, 0, 0, 0.5, 0.5}));
  EXPECT_FALSE(find_preset("nope"));
  EXPECT_THROW(find_preset("bggs:2"), Error);
}

TEST(Presets, Parsing) {
  EXPECT_EQ(parse_parameter("pv"), find_preset("pv")->params);
  EXPECT_EQ(parse_parameter("1,2,3,4,5,0.1,0.2,0.3").tuple(),
            (std::array<double, 8>{1, 2, 3, 4, 5, 0.1, 0.2, 0.3}));
  EXPECT_THROW(parse_parameter("1,2,3"), Error);
  EXPECT_THROW(parse_parameter("1,2,3,4,5,0.6,0.6,0"), Error);
  EXPECT_EQ(parse_rectangle("0,0,2,3"), Rectangle(0, 0, 2, 3));
  EXPECT_THROW(parse_rectangle("0,0,2"), Error);
  EXPECT_THROW(parse_numbers("1,x"), Error);
  EXPECT_EQ(preset_name_of(Parameter{0, 1, 1, 0, 0, 0, 0, 1}), "cbmc");
  EXPECT_FALSE(preset_name_of(Parameter{0, 1, 1, 0, 0, 0, 0, 0.5}));
}

DiagramMeta meta_for(const Preset& p, std::uint64_t seed) {
  return DiagramMeta{p.params, p.law, seed, p.name};
}

TEST(Json, EmptyRoundTrip) {
  const Configuration u(Rectangle(0, 0, 1, 1));
  const DiagramDocument d = decode_diagram(encode_diagram(u, meta_for(*find_preset("cbmc"), 0)));
  EXPECT_EQ(d.diagram, u);
  EXPECT_EQ(d.meta.preset, "cbmc");
}

TEST(Json, RandomDiagramsRoundTrip) {
  const auto& reg = preset_registry();
  const Rectangle r(-1.25, -0.5, 1.7, 2.3);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const Preset& p = reg[i % reg.size()];
    RngStream rng(derive_seed(i, 42));
    const Configuration u = build_diagram(p.params, p.law, r, rng);
    const std::string bytes = encode_diagram(u, meta_for(p, i));
    const DiagramDocument d = decode_diagram(bytes);
    ASSERT_EQ(d.diagram, u) << i;
    EXPECT_EQ(d.meta.params, p.params);
    EXPECT_EQ(d.meta.seed, i);
    EXPECT_EQ(std::get<PoissonLaw>(d.meta.law), p.law);
    EXPECT_EQ(encode_diagram(d.diagram, d.meta), bytes);
  }
}

TEST(Json, ExplicitLawRoundTrip) {
  DiagramMeta m{Parameter{0, 0, 0, 0, 0, 0, 0, 1}, ExplicitLaw{{0.5}, {0.3}}, 3, {}};
  const Configuration u(Rectangle(0, 0, 1, 1),
                        {testing::vseg(0.5, 0, 0.3, K::VE, K::OA),
                         testing::hseg(0.3, 0, 0.5, K::HE, K::OA)},
                        {});
  const DiagramDocument d = decode_diagram(encode_diagram(u, m));
  EXPECT_EQ(d.diagram, u);
  EXPECT_EQ(std::get<ExplicitLaw>(d.meta.law), std::get<ExplicitLaw>(m.law));
  EXPECT_FALSE(d.meta.preset);
}

TEST(Json, RejectsBadInput) {
  RngStream rng(1);
  const Preset p = *find_preset("loop");
  const std::string bytes =
      encode_diagram(build_diagram(p.params, p.law, Rectangle(0, 0, 3, 3), rng), meta_for(p, 1));
  EXPECT_THROW(decode_diagram(bytes.substr(0, bytes.size() / 2)), Error);
  EXPECT_THROW(decode_diagram(""), Error);
  json j = json::parse(bytes);
  j["schema"] = "other/1";
  EXPECT_THROW(decode_diagram(j.dump()), Error);
  j = json::parse(bytes);
  ASSERT_FALSE(j["segments"].empty());
  j["segments"][0]["hi"] = 1e6;
  EXPECT_THROW(decode_diagram(j.dump()), Error);
}

TEST(Json, NonFiniteBecomesNull) {
  LogDensity d;
  d.finite_support = false;
  d.value = -INFINITY;
  const json j = to_json(d);
  EXPECT_TRUE(j["value"].is_null());
  EXPECT_FALSE(j["finiteSupport"].get<bool>());
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(Svg, EmptyIsFrameOnly) {
  const std::string svg = render_svg(Configuration(Rectangle(0, 0, 1, 1)));
  EXPECT_EQ(count(svg, "<rect"), 1u);
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_EQ(count(svg, "<circle"), 0u);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}

TEST(Svg, AnnihilationHasOneOpenDot) {
  const Configuration u(Rectangle(0, 0, 1, 1),
                        {testing::vseg(0.5, 0, 0.3, K::VE, K::OA),
                         testing::hseg(0.3, 0, 0.5, K::HE, K::OA)},
                        {});
  const std::string svg = render_svg(u);
  EXPECT_EQ(count(svg, "<line"), 2u);
  EXPECT_EQ(count(svg, "<circle"), 1u);
  EXPECT_EQ(count(svg, "fill=\"white\""), 1u);
}

TEST(Svg, Deterministic) {
  const Preset p = *find_preset("loop");
  RngStream a(7);
  RngStream b(7);
  const Rectangle r(0, 0, 5, 5);
  const Configuration u = build_diagram(p.params, p.law, r, a);
  EXPECT_EQ(render_svg(u), render_svg(build_diagram(p.params, p.law, r, b)));
  SvgStyle births;
  births.show_births = true;
  const ConfigStats s = extract_stats(u);
  EXPECT_EQ(count(render_svg(u, births), "<circle"),
            static_cast<std::size_t>(s[K::OB] + s[K::VB] + s[K::HB] + s[K::VT] +
                                     s[K::HT] + s[K::OA] + s[K::VA] + s[K::HA]));
  EXPECT_EQ(count(render_svg(u), "<line"), u.segments.size());
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bulletlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("bulletlab_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::filesystem::path dir_;
};

TEST_F(CliTest, ReversePvUnderPi) {
  const CliRun r = cli({"reverse", "--preset", "pv", "--g", "pi"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["applicable"].get<bool>());
  EXPECT_EQ(j["reversePreset"], "ph");
  EXPECT_EQ(j["nuH"], 1.0);
  EXPECT_EQ(j["nuV"], 1.0);
}

TEST_F(CliTest, ReversePhUnderPi2) {
  const CliRun r = cli({"reverse", "--preset", "ph", "--g", "pi2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["reversePreset"], "cbmc");
  EXPECT_EQ(j["nuH"], 1.0);
  EXPECT_EQ(j["nuV"], 1.0);
}

TEST_F(CliTest, SimulateTwiceIsByteIdentical) {
  const std::vector<std::string> args = {"simulate", "--preset", "loop", "--rect",
                                         "0,0,5,5", "--seed",  "7"};
  auto a = args;
  a.insert(a.end(), {"--out", path("a.json"), "--svg", path("a.svg")});
  auto b = args;
  b.insert(b.end(), {"--out", path("b.json"), "--svg", path("b.svg")});
  ASSERT_EQ(cli(a).code, 0);
  ASSERT_EQ(cli(b).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg")));
  EXPECT_FALSE(slurp(path("a.json")).empty());

  const CliRun st = cli({"stats", path("a.json")});
  ASSERT_EQ(st.code, 0) << st.err;
  const DiagramDocument d = decode_diagram(slurp(path("a.json")));
  const ConfigStats s = extract_stats(d.diagram);
  EXPECT_EQ(json::parse(st.out)["counts"]["OB"], s[K::OB]);

  const CliRun den = cli({"density", path("a.json")});
  ASSERT_EQ(den.code, 0) << den.err;
  EXPECT_DOUBLE_EQ(json::parse(den.out)["logDensity"]["value"].get<double>(),
                   log_density(d.diagram, d.meta.params, d.meta.law).value);

  const CliRun ren = cli({"render", path("a.json")});
  ASSERT_EQ(ren.code, 0) << ren.err;
  EXPECT_EQ(ren.out, slurp(path("a.svg")));
}

TEST_F(CliTest, CheckExitCodes) {
  EXPECT_EQ(cli({"check", "--preset", "pv", "--reverse", "ph"}).code, 0);
  EXPECT_EQ(cli({"check", "--preset", "pv", "--reverse", "pv"}).code, 1);
  EXPECT_EQ(
      cli({"check", "--preset", "ph", "--reverse", "cbmc", "--theorem", "pi2"}).code,
      0);
}

TEST_F(CliTest, VerifyExitCodes) {
  const CliRun ok = cli({"verify", "density-pi", "--preset", "pv", "--n", "50"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(json::parse(ok.out)["passed"].get<bool>());
  const CliRun bad =
      cli({"verify", "density-pi", "--preset", "pv", "--reverse", "pv", "--n", "50"});
  EXPECT_EQ(bad.code, 1);
  // pv has no quarter-turn reverse.
  EXPECT_EQ(cli({"verify", "density-pi2", "--preset", "pv", "--n", "5"}).code, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"simulate", "--preset", "nope"}).code, 2);
  EXPECT_EQ(cli({"simulate", "--preset", "loop", "--rect", "0,0,0,1"}).code, 2);
  EXPECT_EQ(cli({"stats", path("missing.json")}).code, 2);
  std::ofstream(path("trunc.json")) << "{\"schema\": \"bulletlab.diagram/1\", \"rect";
  EXPECT_EQ(cli({"stats", path("trunc.json")}).code, 2);
  EXPECT_EQ(cli({"render", path("trunc.json")}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST_F(CliTest, OutputDirectoryVariable) {
  ::setenv("BULLET_OUTPUT_DIR", dir_.c_str(), 1);
  const CliRun r = cli({"simulate", "--preset", "cbmc", "--out", "env.json"});
  ::unsetenv("BULLET_OUTPUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::filesystem::exists(path("env.json")));
}

}  // namespace
}  // namespace bullet
