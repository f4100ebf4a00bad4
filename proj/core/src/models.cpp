#include "qriccati/models.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qriccati {

const char* family_name(ModelFamily family) {
  switch (family) {
    case ModelFamily::Conservative: return "conservative";
    case ModelFamily::CaldirolaKanai: return "caldirola_kanai";
    case ModelFamily::Expanding: return "expanding";
    case ModelFamily::LogNlse: return "log_nlse";
  }
  return "unknown";
}

FrequencyProfile FrequencyProfile::constant(double value) {
  if (!(value >= 0.0)) throw ValidationError("omega: constant value must be >= 0");
  return FrequencyProfile(Kind::Constant, {}, {value});
}

FrequencyProfile FrequencyProfile::piecewise_constant(std::vector<double> breakpoints,
                                                      std::vector<double> values) {
  if (values.size() != breakpoints.size() + 1)
    throw ValidationError("omega: piecewise profile needs values.size() == breakpoints.size() + 1");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end()) ||
      std::adjacent_find(breakpoints.begin(), breakpoints.end()) != breakpoints.end())
    throw ValidationError("omega: breakpoints must be strictly increasing");
  for (double v : values)
    if (!(v >= 0.0)) throw ValidationError("omega: piecewise values must be >= 0");
  return FrequencyProfile(Kind::PiecewiseConstant, std::move(breakpoints), std::move(values));
}

FrequencyProfile FrequencyProfile::sampled(std::vector<double> times, std::vector<double> values) {
  if (times.size() < 2) throw ValidationError("omega: sampled profile needs at least 2 samples");
  if (values.size() != times.size())
    throw ValidationError("omega: sampled profile needs times.size() == values.size()");
  if (!std::is_sorted(times.begin(), times.end()) ||
      std::adjacent_find(times.begin(), times.end()) != times.end())
    throw ValidationError("omega: sample times must be strictly increasing");
  for (double v : values)
    if (!(v >= 0.0)) throw ValidationError("omega: sampled values must be >= 0");
  return FrequencyProfile(Kind::Sampled, std::move(times), std::move(values));
}

double FrequencyProfile::value(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return values_[0];
    case Kind::PiecewiseConstant: {
      // Right-continuous: t at a breakpoint belongs to the following segment.
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
      return values_[static_cast<size_t>(it - knots_.begin())];
    }
    case Kind::Sampled: {
      if (t < knots_.front() || t > knots_.back())
        throw ValidationError("omega: t = " + std::to_string(t) +
                              " outside sampled profile domain [" +
                              std::to_string(knots_.front()) + ", " +
                              std::to_string(knots_.back()) + "]");
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
      if (it == knots_.end()) return values_.back();
      if (it == knots_.begin()) return values_.front();
      size_t hi = static_cast<size_t>(it - knots_.begin());
      size_t lo = hi - 1;
      double frac = (t - knots_[lo]) / (knots_[hi] - knots_[lo]);
      return values_[lo] + frac * (values_[hi] - values_[lo]);
    }
  }
  return values_[0];
}

double FrequencyProfile::value(double t, double segment_hint) const {
  if (kind_ == Kind::PiecewiseConstant) return value(segment_hint);
  return value(t);
}

const std::vector<double>& FrequencyProfile::breakpoints() const {
  static const std::vector<double> none;
  return kind_ == Kind::PiecewiseConstant ? knots_ : none;
}

bool FrequencyProfile::covers(double t0, double t1) const {
  if (kind_ != Kind::Sampled) return true;
  return t0 >= knots_.front() && t1 <= knots_.back();
}

double Model::omega_sq(double t) const {
  double w = omega.value(t);
  return w * w;
}

double Model::reduced_omega_sq(double t) const {
  return omega_sq(t) - 0.25 * gamma * gamma;
}

void validate(const Model& model) {
  if (!(model.constants.mass > 0.0)) throw ValidationError("mass: must be > 0");
  if (!(model.constants.hbar > 0.0)) throw ValidationError("hbar: must be > 0");
  if (!(model.gamma >= 0.0)) throw ValidationError("gamma: must be >= 0");
  if (model.family == ModelFamily::Conservative && model.gamma != 0.0)
    throw ValidationError("gamma: must be 0 for the conservative family");
}

}  // namespace qriccati
