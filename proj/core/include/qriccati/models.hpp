#pragma once

#include <vector>

#include "qriccati/errors.hpp"

namespace qriccati {

// Mass and hbar enter every formula together; both strictly positive.
struct PhysicalConstants {
  double mass = 1.0;
  double hbar = 1.0;
};

// The four wave-packet evolution families sharing one Riccati interface.
enum class ModelFamily {
  Conservative,    // unitary oscillator, omega may depend on time
  CaldirolaKanai,  // canonical description, explicitly time-dependent Hamiltonian
  Expanding,       // canonical description in coordinates Q = exp(gamma t/2) x
  LogNlse,         // physical description with logarithmic nonlinearity
};

const char* family_name(ModelFamily family);

// Trap frequency omega(t): constant, piecewise constant, or linearly
// interpolated samples. Piecewise lookup is right-continuous at breakpoints;
// integrators should evaluate stages through the hint overload so a whole
// step sees one segment.
class FrequencyProfile {
 public:
  enum class Kind { Constant, PiecewiseConstant, Sampled };

  FrequencyProfile() : FrequencyProfile(constant(1.0)) {}

  static FrequencyProfile constant(double value);
  // values[i] applies on [breakpoints[i-1], breakpoints[i]); breakpoints
  // strictly increasing, values.size() == breakpoints.size() + 1.
  static FrequencyProfile piecewise_constant(std::vector<double> breakpoints,
                                             std::vector<double> values);
  // Defined on [times.front(), times.back()] only; times strictly increasing.
  static FrequencyProfile sampled(std::vector<double> times, std::vector<double> values);

  Kind kind() const { return kind_; }

  double value(double t) const;
  // Piecewise profiles resolve the segment from `segment_hint` instead of t,
  // so RK4 stage times at a breakpoint stay inside the step's segment.
  double value(double t, double segment_hint) const;

  // Interior discontinuities (empty unless piecewise constant).
  const std::vector<double>& breakpoints() const;

  // True when every t in [t0, t1] is inside the profile domain.
  bool covers(double t0, double t1) const;

 private:
  FrequencyProfile(Kind kind, std::vector<double> knots, std::vector<double> values)
      : kind_(kind), knots_(std::move(knots)), values_(std::move(values)) {}

  Kind kind_;
  std::vector<double> knots_;  // breakpoints (piecewise) or sample times (sampled)
  std::vector<double> values_;
};

struct Model {
  ModelFamily family = ModelFamily::Conservative;
  PhysicalConstants constants{};
  double gamma = 0.0;  // friction coefficient, zero for Conservative
  FrequencyProfile omega{};

  double omega_value(double t) const { return omega.value(t); }
  double omega_sq(double t) const;
  // omega^2 - gamma^2/4, the effective frequency of Expanding and LogNlse widths.
  double reduced_omega_sq(double t) const;
};

// Throws ValidationError on non-positive constants, negative gamma, nonzero
// gamma for Conservative, or negative omega samples.
void validate(const Model& model);

}  // namespace qriccati
