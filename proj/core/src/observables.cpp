#include "qriccati/observables.hpp"

#include <cmath>

namespace qriccati {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using Wide = __float128;
#else
using Wide = long double;
#endif

void require_physical(const RiccatiVar& r) {
  if (!(r.c.imag() > 0.0)) throw ValidationError("c: imag(c) must be > 0 (unphysical width)");
}

}  // namespace

InvariantValue ermakov_invariant(const Model& model, double t, const ClassicalState& cls,
                                 const ErmakovState& e) {
  if (!(e.alpha > 0.0)) throw ValidationError("alpha: must be > 0");
  double value = 0.0;
  switch (model.family) {
    case ModelFamily::Conservative: {
      double angular = cls.eta_dot * e.alpha - e.alpha_dot * cls.eta;
      double radial = cls.eta / e.alpha;
      value = 0.5 * (angular * angular + radial * radial);
      break;
    }
    case ModelFamily::CaldirolaKanai: {
      double angular = cls.eta_dot * e.alpha - e.alpha_dot * cls.eta;
      double radial = cls.eta / e.alpha;
      value = 0.5 * (std::exp(2.0 * model.gamma * t) * angular * angular + radial * radial);
      break;
    }
    case ModelFamily::Expanding: {
      // cls holds the canonical pair (Q, Q_dot).
      double shear = cls.eta_dot - (e.alpha_dot / e.alpha) * cls.eta;
      double radial = cls.eta / (e.alpha * e.alpha);
      value = 0.5 * e.alpha * e.alpha * (shear * shear + radial * radial);
      break;
    }
    case ModelFamily::LogNlse: {
      double shear = cls.eta_dot - (e.alpha_dot / e.alpha - 0.5 * model.gamma) * cls.eta;
      double radial = cls.eta / (e.alpha * e.alpha);
      value = 0.5 * std::exp(model.gamma * t) * e.alpha * e.alpha *
              (shear * shear + radial * radial);
      break;
    }
  }
  return {value, model.family, std::abs(value) < 1e-30};
}

UncertaintyRecord uncertainties(const PhysicalConstants& consts, const RiccatiVar& r) {
  require_physical(r);
  double re = r.c.real();
  double im = r.c.imag();
  double var_x = 0.5 * consts.hbar / consts.mass / im;
  double var_p = 0.5 * consts.hbar * consts.mass * (re * re + im * im) / im;
  double corr = 0.5 * consts.hbar * re / im;
  double u_product = 0.25 * consts.hbar * consts.hbar * (1.0 + (re / im) * (re / im));

  // var_x var_p - corr^2 cancels to (hbar/2)^2; at |re| >> im the products are
  // larger than the result by (re/im)^2, so the subtraction runs in Wide.
  Wide wre = re, wim = im;
  Wide wvx = Wide(0.5) * Wide(consts.hbar) / Wide(consts.mass) / wim;
  Wide wvp = Wide(0.5) * Wide(consts.hbar) * Wide(consts.mass) * (wre * wre + wim * wim) / wim;
  Wide wco = Wide(0.5) * Wide(consts.hbar) * wre / wim;
  double sr_lhs = static_cast<double>(wvx * wvp - wco * wco);

  return {var_x, var_p, corr, u_product, sr_lhs};
}

double energy_contribution(const PhysicalConstants& consts, const RiccatiVar& r, double omega) {
  require_physical(r);
  double re = r.c.real();
  double im = r.c.imag();
  return 0.25 * consts.hbar * (re * re + im * im + omega * omega) / im;
}

std::vector<double> ck_uncertainty_product(const Model& model, const TimeSeries& ck_run) {
  if (model.family != ModelFamily::CaldirolaKanai)
    throw ValidationError("family: ck_uncertainty_product needs a caldirola_kanai run");
  std::vector<double> out;
  out.reserve(ck_run.states.size());
  for (const auto& s : ck_run.states) {
    UncertaintyRecord u = uncertainties(model.constants, s.riccati);
    out.push_back(u.u_product * std::exp(-2.0 * model.gamma * s.t));
  }
  return out;
}

}  // namespace qriccati
