#include <doctest.h>

#include <cmath>

#include "qriccati/ladder.hpp"
#include "qriccati/observables.hpp"
#include "qriccati/transforms.hpp"

using namespace qriccati;

TEST_CASE("representation names") {
  CHECK(std::string(representation_name(Representation::PhysicalNl)) == "physical_nl");
  CHECK(std::string(representation_name(Representation::CanonicalCk)) == "canonical_ck");
  CHECK(std::string(representation_name(Representation::CanonicalExpanding)) ==
        "canonical_expanding");
}

TEST_CASE("width variable maps and round trips") {
  RiccatiVar c{Complex{0.3, 1.1}};

  TaggedRiccati ck = nl_to_ck_riccati(c, 2.0, 0.5);
  CHECK(ck.rep == Representation::CanonicalCk);
  CHECK(ck.var.c.real() == doctest::Approx(0.8154845485377135).epsilon(1e-14));
  CHECK(ck.var.c.imag() == doctest::Approx(2.99011001130495).epsilon(1e-14));
  CHECK(std::abs(ck_to_nl_riccati(ck, 2.0, 0.5).c - c.c) < 1e-14);

  TaggedRiccati ex = nl_to_expanding_riccati(c, 0.5);
  CHECK(ex.rep == Representation::CanonicalExpanding);
  CHECK(std::abs(ex.var.c - Complex{0.55, 1.1}) < 1e-15);
  CHECK(std::abs(expanding_to_nl_riccati(ex, 0.5).c - c.c) < 1e-15);

  // wrong tag is rejected
  CHECK_THROWS_AS(ck_to_nl_riccati(ex, 2.0, 0.5), ValidationError);
  CHECK_THROWS_AS(expanding_to_nl_riccati(ck, 0.5), ValidationError);
}

TEST_CASE("amplitude and center maps round trip") {
  ErmakovState e{0.8, -0.45};
  TaggedErmakov e_ck = nl_to_ck_alpha(e, 1.3, 0.6);
  ErmakovState back = ck_to_nl_alpha(e_ck, 1.3, 0.6);
  CHECK(back.alpha == doctest::Approx(e.alpha).epsilon(1e-14));
  CHECK(back.alpha_dot == doctest::Approx(e.alpha_dot).epsilon(1e-13));

  ClassicalState cls{1.2, -0.4};
  TaggedClassical q = physical_to_expanding(cls, 1.5, 0.6);
  CHECK(q.state.eta == doctest::Approx(1.8819746225882024).epsilon(1e-14));
  CHECK(q.state.eta_dot == doctest::Approx(-0.0627324874196068).epsilon(1e-12));
  ClassicalState phys = expanding_to_physical(q, 1.5, 0.6);
  CHECK(phys.eta == doctest::Approx(cls.eta).epsilon(1e-14));
  CHECK(phys.eta_dot == doctest::Approx(cls.eta_dot).epsilon(1e-13));

  CHECK(canonical_momentum(0.7, 2.0, 0.5) == doctest::Approx(0.7 * std::exp(1.0)).epsilon(1e-15));
  CHECK(physical_momentum(canonical_momentum(0.7, 2.0, 0.5), 2.0, 0.5) ==
        doctest::Approx(0.7).epsilon(1e-14));

  TaggedErmakov wrong{e, Representation::CanonicalExpanding};
  CHECK_THROWS_AS(ck_to_nl_alpha(wrong, 1.0, 0.5), ValidationError);
  TaggedClassical wrong_cls{cls, Representation::CanonicalCk};
  CHECK_THROWS_AS(expanding_to_physical(wrong_cls, 1.0, 0.5), ValidationError);
}

TEST_CASE("width map commutes with the amplitude relation") {
  // Mapping alpha and then reading c in the canonical picture must agree with
  // mapping c directly; this ties the exp(gamma t) factor in the canonical
  // alpha relation to the exp(gamma t) of the width map.
  double gamma = 0.6, t = 1.7;
  Model nl;
  nl.family = ModelFamily::LogNlse;
  nl.gamma = gamma;
  nl.omega = FrequencyProfile::constant(1.0);
  Model ck = nl;
  ck.family = ModelFamily::CaldirolaKanai;

  ErmakovState e_nl{0.9, 0.35};
  RiccatiVar c_nl = riccati_from_ermakov(nl, t, e_nl);
  TaggedErmakov e_ck = nl_to_ck_alpha(e_nl, t, gamma);
  RiccatiVar c_ck = riccati_from_ermakov(ck, t, e_ck.state);
  CHECK(std::abs(c_ck.c - nl_to_ck_riccati(c_nl, t, gamma).var.c) < 1e-13);

  // the expanding width shares alpha with the physical picture
  Model ex = nl;
  ex.family = ModelFamily::Expanding;
  RiccatiVar c_ex = nl_to_expanding_riccati(c_nl, gamma).var;
  ErmakovState e_ex = ermakov_from_riccati(ex, t, c_ex);
  CHECK(e_ex.alpha == doctest::Approx(e_nl.alpha).epsilon(1e-14));
  CHECK(e_ex.alpha_dot == doctest::Approx(e_nl.alpha_dot).epsilon(1e-13));
}

TEST_CASE("one motion, three invariants") {
  double gamma = 0.6, t = 1.3;
  Model nl;
  nl.family = ModelFamily::LogNlse;
  nl.gamma = gamma;
  nl.omega = FrequencyProfile::constant(1.4);
  Model ck = nl;
  ck.family = ModelFamily::CaldirolaKanai;
  Model ex = nl;
  ex.family = ModelFamily::Expanding;

  ClassicalState cls{0.8, -0.5};
  ErmakovState e_nl{0.9, 0.35};
  RiccatiVar c_nl = riccati_from_ermakov(nl, t, e_nl);

  double i_nl = ermakov_invariant(nl, t, cls, e_nl).value;
  // caldirola_kanai shares the physical center, maps the amplitude
  double i_ck = ermakov_invariant(ck, t, cls, nl_to_ck_alpha(e_nl, t, gamma).state).value;
  // expanding maps the center, shares the amplitude
  double i_ex =
      ermakov_invariant(ex, t, physical_to_expanding(cls, t, gamma).state, e_nl).value;

  CHECK(i_ck == doctest::Approx(i_nl).epsilon(1e-13));
  CHECK(i_ex == doctest::Approx(i_nl).epsilon(1e-13));
}

TEST_CASE("scaling the wave packet exponent is the canonical map") {
  PolyGaussianState wp = vacuum_state({1.3, 0.7}, {Complex{0.2, 0.9}}, 0.0);
  wp.x_center = 0.4;
  wp.p_center = -0.6;
  CHECK(exponent_map_check(wp, 1.2, 0.5) < 1e-14);

  PolyGaussianState excited = apply_creation(wp);
  CHECK_THROWS_AS(exponent_map_check(excited, 1.2, 0.5), ValidationError);
}
