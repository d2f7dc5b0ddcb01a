#include <random>
#include <string>

#include "casimir/scenario.hpp"
#include "casimir/special.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace casimir;
using casimir::testing::mutate;
using casimir::testing::random_scenario;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for:\n" << text);
  return ParseError("", 0, 0);
}

const char* kMinimal = R"(# two ideal mirrors
[material pec]
ideal = electric

[mirror 1]
substrate = pec
[mirror 2]
substrate   =   pec   # trailing comment
[run]
d = 1 1 1 log
)";

}  // namespace

TEST_CASE("minimal scenario") {
  const Scenario s = parse_scenario(kMinimal);
  CHECK(s.materials.at("pec") == ResponseModel::perfect_electric());
  CHECK(s.mirror1.substrate == "pec");
  CHECK(s.mirror2.layers.empty());
  CHECK_FALSE(s.gap);
  CHECK(s.gap_medium() == ResponseModel::vacuum());
  CHECK(s.temperature == 0.0);
  REQUIRE(s.sweep);
  CHECK(s.sweep->distances() == std::vector<double>{1.0});
  CHECK(s.stack1().substrate == ResponseModel::perfect_electric());
  CHECK(validate_passivity(s).empty());
}

TEST_CASE("coated mirror written out by hand equals the preset") {
  const std::string text = R"(
[material metal]
eps_strength = 3
eps_resonance = 0

[material coating]
eps_strength = 0.1
eps_resonance = 1
mu_strength = 0.3
mu_resonance = 1

[mirror 1]
substrate = metal

[mirror 2]
layer = coating 62.83185307179586   # w = 10 wavelengths of 2 pi c / Omega
substrate = metal

[run]
T = 0
d = 0.012566370614359173 314.1592653589793 64 log
)";
  CHECK(parse_scenario(text) == preset_scenario("fig1c"));
  CHECK(preset_scenario("fig1c").mirror2.layers.at(0).thickness == doctest::Approx(20.0 * kPi));
}

TEST_CASE("error positions") {
  const ParseError unknown = parse_error("[mirror 1]\nsubstrate = au\n[mirror 2]\nsubstrate = au\n");
  CHECK(unknown.line() == 2);
  CHECK(unknown.column() == 13);
  CHECK(std::string(unknown.what()).find("unknown material 'au' at line 2") != std::string::npos);

  CHECK(parse_error("[metal]\n").line() == 1);
  CHECK(parse_error("x = 1\n").column() == 1);
  const ParseError dup = parse_error("[material a]\n[material a]\n");
  CHECK(dup.line() == 2);
  CHECK(dup.column() == 11);
  const ParseError thick =
      parse_error("[material a]\n[mirror 1]\nlayer = a 0\nsubstrate = a\n[mirror 2]\nsubstrate = a\n");
  CHECK(thick.line() == 3);
  CHECK(thick.column() == 11);
  CHECK(parse_error("[material a]\n[mirror 1]\nsubstrate = a\n").message().find("mirror 2") !=
        std::string::npos);
  const ParseError conflict = parse_error(
      "[material a]\n[mirror 1]\nsubstrate = a\n[mirror 2]\nsubstrate = a\n[run]\nT = 1\ntemperatures = 1 2\n");
  CHECK(conflict.line() == 8);
  const ParseError ideal_mix = parse_error("[material a]\nideal = electric\neps_strength = 1\n");
  CHECK(ideal_mix.line() == 3);
  CHECK(parse_error("[material a]\neps_strength = -1\n").column() == 16);
  CHECK(parse_error("[material a]\neps_strength = nan\n").line() == 2);
  CHECK(parse_error("[material a]\n[mirror 1]\nlayer = a\n").line() == 3);
  CHECK(parse_error("[material a]\n[mirror 1]\n").line() == 2);  // missing substrate
  CHECK(parse_error("[material a]\n[mirror 1]\nsubstrate = a\n[mirror 2]\nsubstrate = a\n[run]\n"
                    "d = 2 1 5 log\n")
            .column() == 7);
  CHECK(parse_error("[material pec]\nideal = electric\n[mirror 1]\nsubstrate = pec\n[mirror 2]\n"
                    "substrate = pec\n[gap]\nmedium = pec\n")
            .line() == 8);
  CHECK(parse_error("[material a]\n[mirror 1]\nsubstrate = a\n[mirror 1]\n").line() == 4);
  CHECK(parse_error("[run\n").line() == 1);
}

TEST_CASE("presets round-trip and serialize deterministically") {
  CHECK(preset_names().size() == 9);
  for (const std::string& name : preset_names()) {
    const Scenario s = preset_scenario(name);
    const std::string text = serialize_scenario(s);
    CHECK(parse_scenario(text) == s);
    CHECK(serialize_scenario(parse_scenario(text)) == text);
    CHECK(validate_passivity(s).empty());
  }
  CHECK_THROWS_AS(preset_scenario("fig9"), std::invalid_argument);
  const Scenario fig2 = preset_scenario("fig2");
  CHECK(fig2.temperature_list() == std::vector<double>{0.3, 0.1, 0.03, 0.0});
  CHECK(preset_scenario("fig3d").materials.at("metamaterial").eps_strength ==
        doctest::Approx(std::sqrt(0.1)));
}

TEST_CASE("randomized scenarios round-trip") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const Scenario s = random_scenario(rng);
    const std::string text = serialize_scenario(s);
    const Scenario back = parse_scenario(text);
    CHECK(back == s);
    CHECK(serialize_scenario(back) == text);
  }
}

TEST_CASE("distance grids") {
  const DistanceGrid log{0.1, 10.0, 3, GridScale::Log};
  const auto d = log.distances();
  CHECK(d[0] == 0.1);
  CHECK(d[1] == doctest::Approx(1.0));
  CHECK(d[2] == 10.0);
  const DistanceGrid lin{1.0, 2.0, 5, GridScale::Lin};
  CHECK(lin.distances()[2] == doctest::Approx(1.5));
}

TEST_CASE("fuzz: mutated inputs never crash and errors carry positions") {
  std::mt19937_64 rng(99);
  std::vector<std::string> seeds;
  for (const std::string& name : preset_names()) seeds.push_back(serialize_scenario(preset_scenario(name)));
  seeds.emplace_back(kMinimal);
  long parsed = 0, rejected = 0;
  for (int i = 0; i < 100000; ++i) {
    const std::string text = mutate(seeds[static_cast<std::size_t>(i) % seeds.size()], rng);
    try {
      parse_scenario(text);
      ++parsed;
    } catch (const ParseError& e) {
      ++rejected;
      if (e.line() < 1 || e.column() < 1) FAIL("diagnostic without position: " << e.what());
    }
  }
  CHECK(parsed + rejected == 100000);
  CHECK(rejected > 0);
}
