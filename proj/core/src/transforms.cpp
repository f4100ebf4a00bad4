#include "qriccati/transforms.hpp"

#include <cmath>
#include <string>

namespace qriccati {

namespace {

void require_tag(Representation have, Representation want, const char* what) {
  if (have != want)
    throw ValidationError(std::string(what) + ": expected " + representation_name(want) +
                          " value, got " + representation_name(have));
}

}  // namespace

const char* representation_name(Representation rep) {
  switch (rep) {
    case Representation::PhysicalNl: return "physical_nl";
    case Representation::CanonicalCk: return "canonical_ck";
    case Representation::CanonicalExpanding: return "canonical_expanding";
  }
  return "unknown";
}

TaggedRiccati nl_to_ck_riccati(const RiccatiVar& c_nl, double t, double gamma) {
  return {RiccatiVar{std::exp(gamma * t) * c_nl.c}, Representation::CanonicalCk};
}

RiccatiVar ck_to_nl_riccati(const TaggedRiccati& c_ck, double t, double gamma) {
  require_tag(c_ck.rep, Representation::CanonicalCk, "riccati");
  return {std::exp(-gamma * t) * c_ck.var.c};
}

TaggedRiccati nl_to_expanding_riccati(const RiccatiVar& c_nl, double gamma) {
  return {RiccatiVar{c_nl.c + 0.5 * gamma}, Representation::CanonicalExpanding};
}

RiccatiVar expanding_to_nl_riccati(const TaggedRiccati& c_exp, double gamma) {
  require_tag(c_exp.rep, Representation::CanonicalExpanding, "riccati");
  return {c_exp.var.c - 0.5 * gamma};
}

TaggedErmakov nl_to_ck_alpha(const ErmakovState& e_nl, double t, double gamma) {
  double factor = std::exp(-0.5 * gamma * t);
  return {ErmakovState{factor * e_nl.alpha, factor * (e_nl.alpha_dot - 0.5 * gamma * e_nl.alpha)},
          Representation::CanonicalCk};
}

ErmakovState ck_to_nl_alpha(const TaggedErmakov& e_ck, double t, double gamma) {
  require_tag(e_ck.rep, Representation::CanonicalCk, "alpha");
  double factor = std::exp(0.5 * gamma * t);
  double alpha = factor * e_ck.state.alpha;
  return {alpha, factor * e_ck.state.alpha_dot + 0.5 * gamma * alpha};
}

TaggedClassical physical_to_expanding(const ClassicalState& cls, double t, double gamma) {
  double factor = std::exp(0.5 * gamma * t);
  return {ClassicalState{factor * cls.eta, factor * (cls.eta_dot + 0.5 * gamma * cls.eta)},
          Representation::CanonicalExpanding};
}

ClassicalState expanding_to_physical(const TaggedClassical& q, double t, double gamma) {
  require_tag(q.rep, Representation::CanonicalExpanding, "classical");
  double factor = std::exp(-0.5 * gamma * t);
  double eta = factor * q.state.eta;
  return {eta, factor * q.state.eta_dot - 0.5 * gamma * eta};
}

double canonical_momentum(double p_physical, double t, double gamma) {
  return std::exp(gamma * t) * p_physical;
}

double physical_momentum(double p_canonical, double t, double gamma) {
  return std::exp(-gamma * t) * p_canonical;
}

double exponent_map_check(const PolyGaussianState& wp_nl, double t, double gamma) {
  if (degree(wp_nl) != 0)
    throw ValidationError("wp: exponent map check is defined for Gaussian (degree 0) packets");
  double scale = wp_nl.constants.mass / (2.0 * wp_nl.constants.hbar);

  // Path 1: scale the exponent parameters by exp(gamma t).
  Complex quad_scaled = std::exp(gamma * t) * (scale * wp_nl.width.c);
  double lin_scaled = std::exp(gamma * t) * (wp_nl.p_center / wp_nl.constants.hbar);

  // Path 2: dedicated maps feeding the same parameters.
  Complex quad_mapped = scale * nl_to_ck_riccati(wp_nl.width, t, gamma).var.c;
  double lin_mapped = canonical_momentum(wp_nl.p_center, t, gamma) / wp_nl.constants.hbar;

  return std::max(std::abs(quad_scaled - quad_mapped), std::abs(lin_scaled - lin_mapped));
}

}  // namespace qriccati
