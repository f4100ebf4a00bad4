#pragma once

#include <vector>

#include "qriccati/dynamics.hpp"
#include "qriccati/models.hpp"

namespace qriccati {

struct UncertaintyRecord {
  double var_x;      // <x~^2>
  double var_p;      // <p~^2>
  double corr;       // symmetrized <x~ p~>
  double u_product;  // var_x * var_p >= hbar^2/4, equality iff real(c) = 0
  double sr_lhs;     // var_x * var_p - corr^2 = hbar^2/4, an identity of the c parametrization
};

struct InvariantValue {
  double value;
  ModelFamily family;  // which family's expression produced it
  bool degenerate;     // |value| < 1e-30, i.e. the center never moves
};

// Exact constant of the coupled center/width motion:
//   Conservative:    (1/2)[(eta_dot alpha - alpha_dot eta)^2 + (eta/alpha)^2]
//   CaldirolaKanai:  (1/2)[exp(2 gamma t)(eta_dot alpha - alpha_dot eta)^2 + (eta/alpha)^2]
//   Expanding:       (1/2) alpha^2 [(Q_dot - (alpha_dot/alpha) Q)^2 + (Q/alpha^2)^2]
//   LogNlse:         (1/2) exp(gamma t) alpha^2
//                        [(eta_dot - (alpha_dot/alpha - gamma/2) eta)^2 + (eta/alpha^2)^2]
// `cls` is the model's own classical state (canonical for Expanding).
InvariantValue ermakov_invariant(const Model& model, double t, const ClassicalState& cls,
                                 const ErmakovState& e);

// One formula set for all four families:
//   var_x = (hbar/2m)/imag(c)
//   var_p = (hbar m/2)(real(c)^2 + imag(c)^2)/imag(c)
//   corr  = (hbar/2) real(c)/imag(c)
// sr_lhs cancels to (hbar/2)^2; it is evaluated in extended precision because
// double intermediates lose the identity when |real(c)| >> imag(c).
UncertaintyRecord uncertainties(const PhysicalConstants& consts, const RiccatiVar& r);

// Width contribution to the energy, (hbar/4)[real(c)^2 + imag(c)^2 + omega^2]/imag(c).
double energy_contribution(const PhysicalConstants& consts, const RiccatiVar& r, double omega);

// Apparent uncertainty product of a CaldirolaKanai run in physical momentum,
// var_x var_p_hat exp(-2 gamma t), evaluated from the run's own canonical c.
// Falls below hbar^2/4 at late times; the bound applies to the physical-level
// variables, not to this product.
std::vector<double> ck_uncertainty_product(const Model& model, const TimeSeries& ck_run);

}  // namespace qriccati
