#include <doctest.h>

#include "qriccati/models.hpp"

using namespace qriccati;

TEST_CASE("family names") {
  CHECK(std::string(family_name(ModelFamily::Conservative)) == "conservative");
  CHECK(std::string(family_name(ModelFamily::CaldirolaKanai)) == "caldirola_kanai");
  CHECK(std::string(family_name(ModelFamily::Expanding)) == "expanding");
  CHECK(std::string(family_name(ModelFamily::LogNlse)) == "log_nlse");
}

TEST_CASE("constant profile") {
  FrequencyProfile w = FrequencyProfile::constant(2.5);
  CHECK(w.kind() == FrequencyProfile::Kind::Constant);
  CHECK(w.value(-3.0) == 2.5);
  CHECK(w.value(1e9) == 2.5);
  CHECK(w.value(0.0, 100.0) == 2.5);
  CHECK(w.breakpoints().empty());
  CHECK(w.covers(-1e9, 1e9));
  CHECK_THROWS_AS(FrequencyProfile::constant(-1.0), ValidationError);
}

TEST_CASE("piecewise profile is right-continuous") {
  FrequencyProfile w = FrequencyProfile::piecewise_constant({1.0, 2.0}, {3.0, 4.0, 5.0});
  CHECK(w.value(0.5) == 3.0);
  CHECK(w.value(1.0) == 4.0);  // breakpoint belongs to the next segment
  CHECK(w.value(1.5) == 4.0);
  CHECK(w.value(2.0) == 5.0);
  CHECK(w.value(100.0) == 5.0);
  CHECK(w.breakpoints() == std::vector<double>{1.0, 2.0});

  // The hint, not t, picks the segment: stage times at a breakpoint stay
  // inside the segment the step started in.
  CHECK(w.value(1.0, 0.9) == 3.0);
  CHECK(w.value(1.0, 1.1) == 4.0);
  CHECK(w.value(0.9, 1.1) == 4.0);
}

TEST_CASE("piecewise profile validation") {
  CHECK_THROWS_AS(FrequencyProfile::piecewise_constant({1.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(FrequencyProfile::piecewise_constant({2.0, 1.0}, {1.0, 1.0, 1.0}),
                  ValidationError);
  CHECK_THROWS_AS(FrequencyProfile::piecewise_constant({1.0, 1.0}, {1.0, 1.0, 1.0}),
                  ValidationError);
  CHECK_THROWS_AS(FrequencyProfile::piecewise_constant({1.0}, {1.0, -0.5}), ValidationError);
}

TEST_CASE("sampled profile interpolates linearly") {
  FrequencyProfile w = FrequencyProfile::sampled({0.0, 1.0, 3.0}, {1.0, 2.0, 4.0});
  CHECK(w.value(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(w.value(0.5) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(w.value(2.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(w.value(3.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK_THROWS_AS(w.value(3.1), ValidationError);
  CHECK_THROWS_AS(w.value(-0.1), ValidationError);
  CHECK(w.covers(0.0, 3.0));
  CHECK_FALSE(w.covers(-0.1, 1.0));
  CHECK_FALSE(w.covers(1.0, 3.5));

  CHECK_THROWS_AS(FrequencyProfile::sampled({0.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(FrequencyProfile::sampled({0.0, 1.0}, {1.0}), ValidationError);
  CHECK_THROWS_AS(FrequencyProfile::sampled({0.0, 0.0}, {1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(FrequencyProfile::sampled({0.0, 1.0}, {1.0, -1.0}), ValidationError);
}

TEST_CASE("model validation") {
  Model m;
  CHECK_NOTHROW(validate(m));

  Model bad_mass = m;
  bad_mass.constants.mass = 0.0;
  CHECK_THROWS_AS(validate(bad_mass), ValidationError);

  Model bad_hbar = m;
  bad_hbar.constants.hbar = -1.0;
  CHECK_THROWS_AS(validate(bad_hbar), ValidationError);

  Model bad_gamma = m;
  bad_gamma.gamma = -0.1;
  CHECK_THROWS_AS(validate(bad_gamma), ValidationError);

  Model cons_friction = m;
  cons_friction.family = ModelFamily::Conservative;
  cons_friction.gamma = 0.5;
  CHECK_THROWS_AS(validate(cons_friction), ValidationError);

  Model dissipative = m;
  dissipative.family = ModelFamily::LogNlse;
  dissipative.gamma = 0.5;
  CHECK_NOTHROW(validate(dissipative));
}

TEST_CASE("derived frequency helpers") {
  Model m;
  m.family = ModelFamily::Expanding;
  m.gamma = 1.0;
  m.omega = FrequencyProfile::constant(2.0);
  CHECK(m.omega_sq(0.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(m.reduced_omega_sq(0.0) == doctest::Approx(3.75).epsilon(1e-15));
  CHECK(m.omega_value(7.0) == 2.0);
}
