#include "qriccati/closed_form.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qriccati/observables.hpp"

namespace qriccati {

namespace {

// (Gamma, W^2) of the autonomous width equation 0 = -Gamma c - c^2 - W^2.
std::pair<double, double> autonomous_coefficients(const Model& model) {
  if (model.omega.kind() != FrequencyProfile::Kind::Constant)
    throw ValidationError("omega: closed-form solutions require a constant profile");
  double w2 = model.omega_sq(0.0);
  switch (model.family) {
    case ModelFamily::Conservative:
      return {0.0, w2};
    case ModelFamily::LogNlse:
      return {model.gamma, w2};
    case ModelFamily::Expanding:
      return {0.0, w2 - 0.25 * model.gamma * model.gamma};
    case ModelFamily::CaldirolaKanai:
      throw ValidationError(
          "family: caldirola_kanai has no autonomous width equation; map to log_nlse first");
  }
  return {};
}

// (exp(x) - 1)/x, series below |x| = 0.05 to keep full precision through x = 0.
Complex phi1(Complex x) {
  if (std::abs(x) >= 0.05) return (std::exp(x) - 1.0) / x;
  Complex sum = 0.0;
  Complex term = 1.0;  // x^k / (k+1)!
  for (int k = 0; k <= 10; ++k) {
    sum += term;
    term *= x / static_cast<double>(k + 2);
  }
  return sum;
}

double asymptotic_energy_at(const PhysicalConstants& consts, Complex c_tilde, double omega) {
  if (c_tilde.imag() > 0.0) return energy_contribution(consts, RiccatiVar{c_tilde}, omega);
  // imag -> 0+ limit of (hbar/4)(re^2 + im^2 + omega^2)/im.
  double numer = c_tilde.real() * c_tilde.real() + omega * omega;
  return numer == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

FamilyParameter FamilyParameter::from_initial(Complex c0, const ParticularSolution& p) {
  Complex v = c0 - p.c_tilde;
  if (v == Complex{})
    return at_particular();
  return from_w0(1.0 / v);
}

Complex FamilyParameter::w0() const {
  if (particular_) throw ValidationError("w0: the particular solution has no finite w0");
  return w0_;
}

std::array<ParticularSolution, 2> particular_solutions(const Model& model) {
  validate(model);
  auto [g, w2] = autonomous_coefficients(model);
  Complex s = std::sqrt(Complex{0.25 * g * g - w2, 0.0});
  return {ParticularSolution{-0.5 * g + s, BranchLabel::Plus},
          ParticularSolution{-0.5 * g - s, BranchLabel::Minus}};
}

BranchParameter branch_parameter(const Model& model, const ParticularSolution& p) {
  auto [g, w2] = autonomous_coefficients(model);
  (void)w2;
  return {g + 2.0 * p.c_tilde};
}

Complex bernoulli_w(const BranchParameter& a, const FamilyParameter& w0, double t) {
  Complex x = a.a * t;
  return t * phi1(x) + w0.w0() * std::exp(x);
}

RiccatiVar general_solution(const Model& model, const ParticularSolution& p,
                            const FamilyParameter& w0, double t) {
  auto [g, w2] = autonomous_coefficients(model);
  (void)w2;
  if (w0.is_particular()) return {p.c_tilde};
  BranchParameter a{g + 2.0 * p.c_tilde};
  Complex x = a.a * t;
  Complex drive = t * phi1(x);
  Complex carried = w0.w0() * std::exp(x);
  Complex w = drive + carried;
  // Cancellation of all digits means the Moebius member is at its pole.
  if (std::abs(w) <= 1e-14 * (std::abs(drive) + std::abs(carried)))
    throw SingularityError("family pole: w(t) = 0 at t = " + std::to_string(t), t);
  return {p.c_tilde + 1.0 / w};
}

const char* width_branch_class_name(WidthBranchClass c) {
  switch (c) {
    case WidthBranchClass::UnderdampedWidth: return "underdamped_width";
    case WidthBranchClass::OverdampedWidth: return "overdamped_width";
    case WidthBranchClass::FreeDamped: return "free_damped";
    case WidthBranchClass::Degenerate: return "degenerate";
  }
  return "unknown";
}

BranchReport classify_branch(const Model& model, double omega, double gamma) {
  if (!(omega >= 0.0)) throw ValidationError("omega: must be >= 0");
  if (!(gamma >= 0.0)) throw ValidationError("gamma: must be >= 0");

  Model probe = model;
  probe.omega = FrequencyProfile::constant(omega);
  probe.gamma = gamma;
  auto roots = particular_solutions(probe);

  WidthBranchClass cls;
  double quarter_g2 = 0.25 * gamma * gamma;
  double w2 = omega * omega;
  if (omega == 0.0) {
    cls = WidthBranchClass::FreeDamped;
  } else if (std::abs(w2 - quarter_g2) <= 1e-14 * std::max(w2, quarter_g2)) {
    cls = WidthBranchClass::Degenerate;
  } else if (w2 > quarter_g2) {
    cls = WidthBranchClass::UnderdampedWidth;
  } else {
    cls = WidthBranchClass::OverdampedWidth;
  }

  BranchReport report{cls, omega, gamma, {}};
  for (size_t i = 0; i < roots.size(); ++i) {
    const auto& p = roots[i];
    bool physical = p.c_tilde.imag() > 0.0;
    report.branches[i] = BranchInfo{
        p,
        branch_parameter(probe, p),
        physical,
        physical ? 1.0 / std::sqrt(p.c_tilde.imag()) : std::numeric_limits<double>::quiet_NaN(),
        asymptotic_energy_at(probe.constants, p.c_tilde, omega),
    };
  }
  return report;
}

}  // namespace qriccati
