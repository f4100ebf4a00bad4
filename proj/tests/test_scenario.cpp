#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "qriccati/scenario.hpp"

using namespace qriccati;

namespace {

const char* kFull = R"({
  "family": "log_nlse",
  "mass": 2.0,
  "hbar": 0.5,
  "gamma": 0.3,
  "omega": {"kind": "constant", "value": 1.5},
  "initial": {"eta": 1.0, "eta_dot": -0.25, "c": [0.1, 0.8], "phase": 0.05},
  "time": {"start": 0.5, "t_end": 4.0, "dt": 0.002, "stride": 5},
  "tolerances": {"width_collapse_eps": 1e-11, "step_error_tol": 1e-7}
})";

std::string with(const std::string& body) {
  return R"({"family": "conservative", "omega": 1.0, )" + body +
         R"(, "time": {"t_end": 1.0, "dt": 0.01}})";
}

}  // namespace

TEST_CASE("full scenario parses") {
  Scenario sc = parse_scenario(kFull, "demo");
  CHECK(sc.name == "demo");
  CHECK(sc.model.family == ModelFamily::LogNlse);
  CHECK(sc.model.constants.mass == 2.0);
  CHECK(sc.model.constants.hbar == 0.5);
  CHECK(sc.model.gamma == 0.3);
  CHECK(sc.model.omega.value(0.0) == 1.5);
  CHECK(sc.initial.t == 0.5);
  CHECK(sc.initial.classical.eta == 1.0);
  CHECK(sc.initial.classical.eta_dot == -0.25);
  CHECK(sc.initial.riccati.c == Complex{0.1, 0.8});
  CHECK(sc.initial.phase == 0.05);
  CHECK(sc.t_end == 4.0);
  CHECK(sc.dt == 0.002);
  CHECK(sc.stride == 5);
  CHECK(sc.options.stride == 5);
  CHECK(sc.options.width_collapse_eps == 1e-11);
  CHECK(sc.options.step_error_tol == 1e-7);
}

TEST_CASE("defaults fill in") {
  Scenario sc = parse_scenario(with(R"("initial": {"c": [0.0, 1.0]})"), "d");
  CHECK(sc.model.constants.mass == 1.0);
  CHECK(sc.model.constants.hbar == 1.0);
  CHECK(sc.model.gamma == 0.0);
  CHECK(sc.initial.t == 0.0);
  CHECK(sc.initial.classical.eta == 0.0);
  CHECK(sc.initial.phase == 0.0);
  CHECK(sc.stride == 10);
  CHECK(sc.options.width_collapse_eps == 1e-12);
  CHECK(sc.options.step_error_tol == 1e-8);
}

TEST_CASE("width given as amplitude uses the family relation") {
  std::string text = R"({
    "family": "log_nlse", "gamma": 0.4, "omega": 1.0,
    "initial": {"alpha": 0.5, "alpha_dot": 0.15},
    "time": {"t_end": 1.0, "dt": 0.01}
  })";
  Scenario sc = parse_scenario(text, "d");
  CHECK(sc.initial.riccati.c.real() == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(sc.initial.riccati.c.imag() == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("omega profile forms") {
  Scenario plain = parse_scenario(with(R"("initial": {"c": [0.0, 1.0]})"), "d");
  CHECK(plain.model.omega.kind() == FrequencyProfile::Kind::Constant);

  std::string pw = R"({
    "family": "conservative",
    "omega": {"kind": "piecewise", "breakpoints": [0.5], "values": [1.0, 2.0]},
    "initial": {"c": [0.0, 1.0]},
    "time": {"t_end": 1.0, "dt": 0.01}
  })";
  Scenario sc = parse_scenario(pw, "d");
  CHECK(sc.model.omega.kind() == FrequencyProfile::Kind::PiecewiseConstant);
  CHECK(sc.model.omega.value(0.75) == 2.0);

  std::string sampled = R"({
    "family": "conservative",
    "omega": {"kind": "sampled", "times": [0.0, 2.0], "values": [1.0, 2.0]},
    "initial": {"c": [0.0, 1.0]},
    "time": {"t_end": 1.0, "dt": 0.01}
  })";
  CHECK(parse_scenario(sampled, "d").model.omega.value(1.0) == doctest::Approx(1.5));

  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"family": "conservative", "omega": {"kind": "quartic"},
                         "initial": {"c": [0, 1]}, "time": {"t_end": 1, "dt": 0.01}})",
                     "d"),
      doctest::Contains("omega.kind"), ValidationError);
}

TEST_CASE("unknown fields are named and rejected") {
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"family": "conservative", "omega": 1.0, "typo": 1,
                                          "initial": {"c": [0, 1]},
                                          "time": {"t_end": 1, "dt": 0.01}})",
                                      "d"),
                       doctest::Contains("scenario.typo"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(with(R"("initial": {"c": [0, 1], "mean": 2})"), "d"),
                       doctest::Contains("scenario.initial.mean"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"family": "conservative", "omega": 1.0,
                         "initial": {"c": [0, 1]},
                         "time": {"t_end": 1, "dt": 0.01, "step": 2}})",
                     "d"),
      doctest::Contains("scenario.time.step"), ValidationError);
}

TEST_CASE("scenario validation messages name the field") {
  // exactly one width spec
  CHECK_THROWS_WITH_AS(parse_scenario(with(R"("initial": {"eta": 1.0})"), "d"),
                       doctest::Contains("exactly one of c or alpha"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scenario(with(R"("initial": {"c": [0, 1], "alpha": 1.0})"), "d"),
      doctest::Contains("exactly one of c or alpha"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scenario(with(R"("initial": {"c": [0, 1], "alpha_dot": 1.0})"), "d"),
      doctest::Contains("alpha_dot"), ValidationError);
  // unphysical width
  CHECK_THROWS_WITH_AS(parse_scenario(with(R"("initial": {"c": [0, -1]})"), "d"),
                       doctest::Contains("imag"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(with(R"("initial": {"c": [0]})"), "d"),
                       doctest::Contains("[re, im]"), ValidationError);
  // time block
  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"family": "conservative", "omega": 1.0, "initial": {"c": [0, 1]},
                         "time": {"t_end": 1.0, "dt": -0.01}})",
                     "d"),
      doctest::Contains("dt"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"family": "conservative", "omega": 1.0, "initial": {"c": [0, 1]},
                         "time": {"start": 2.0, "t_end": 1.0, "dt": 0.01}})",
                     "d"),
      doctest::Contains("t_end"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"family": "conservative", "omega": 1.0, "initial": {"c": [0, 1]},
                         "time": {"t_end": 1.0, "dt": 0.01, "stride": 1.5}})",
                     "d"),
      doctest::Contains("stride"), ValidationError);
  // model block
  CHECK_THROWS_WITH_AS(
      parse_scenario(R"({"family": "conservative", "gamma": 0.5, "omega": 1.0,
                         "initial": {"c": [0, 1]}, "time": {"t_end": 1, "dt": 0.01}})",
                     "d"),
      doctest::Contains("gamma"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"omega": 1.0, "initial": {"c": [0, 1]},
                                          "time": {"t_end": 1, "dt": 0.01}})",
                                      "d"),
                       doctest::Contains("family"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"family": "harmonic", "omega": 1.0,
                                          "initial": {"c": [0, 1]},
                                          "time": {"t_end": 1, "dt": 0.01}})",
                                      "d"),
                       doctest::Contains("family"), ValidationError);
  // malformed JSON and non-numbers
  CHECK_THROWS_AS(parse_scenario("{", "d"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("[1, 2]", "d"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scenario(with(R"("initial": {"c": [0, 1], "eta": "big"})"), "d"),
                       doctest::Contains("eta"), ValidationError);
}

TEST_CASE("scan spec parses") {
  std::string text = R"({
    "family": "log_nlse",
    "omega": [0.0, 1.0],
    "gamma": [0.5],
    "w0": ["particular", [2.0, -0.5]]
  })";
  ScanSpec spec = parse_scan(text, "sweep");
  CHECK(spec.name == "sweep");
  CHECK(spec.model.family == ModelFamily::LogNlse);
  CHECK(spec.omegas == std::vector<double>{0.0, 1.0});
  CHECK(spec.gammas == std::vector<double>{0.5});
  REQUIRE(spec.w0s.size() == 2);
  CHECK_FALSE(spec.w0s[0].has_value());
  REQUIRE(spec.w0s[1].has_value());
  CHECK(*spec.w0s[1] == Complex{2.0, -0.5});

  // default family parameter is the particular solution itself
  ScanSpec bare = parse_scan(R"({"family": "expanding", "omega": [1.0], "gamma": [0.0]})", "s");
  REQUIRE(bare.w0s.size() == 1);
  CHECK_FALSE(bare.w0s[0].has_value());
}

TEST_CASE("scan spec validation") {
  CHECK_THROWS_WITH_AS(
      parse_scan(R"({"family": "caldirola_kanai", "omega": [1.0], "gamma": [0.5]})", "s"),
      doctest::Contains("caldirola_kanai"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scan(R"({"family": "conservative", "omega": [1.0], "gamma": [0.5]})", "s"),
      doctest::Contains("gamma"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_scan(R"({"family": "log_nlse", "omega": [-1.0], "gamma": [0.5]})",
                                  "s"),
                       doctest::Contains("omega"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scan(R"({"family": "log_nlse", "omega": [1.0], "gamma": [0.5], "w0": [true]})", "s"),
      doctest::Contains("w0"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_scan(R"({"family": "log_nlse", "omega": [1.0], "gamma": [0.5], "extra": 1})", "s"),
      doctest::Contains("extra"), ValidationError);
  CHECK_THROWS_AS(parse_scan(R"({"family": "log_nlse", "gamma": [0.5]})", "s"), ValidationError);
}

TEST_CASE("files load with the stem as run name") {
  std::string path = "scenario_case.json";
  {
    std::ofstream out(path);
    out << with(R"("initial": {"c": [0.0, 1.0]})");
  }
  Scenario sc = load_scenario(path);
  CHECK(sc.name == "scenario_case");
  CHECK_THROWS_AS(load_scenario("does_not_exist.json"), IoError);
  CHECK_THROWS_AS(load_scan("does_not_exist.json"), IoError);
  std::remove(path.c_str());
}

TEST_CASE("schema text covers the interface") {
  std::string schema = scenario_schema();
  for (const char* needle :
       {"family", "omega", "t_end", "stride", "w0", "particular", "invariant_drift"})
    CHECK(schema.find(needle) != std::string::npos);
}
