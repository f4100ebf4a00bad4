#include "qriccati/dynamics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace qriccati {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Complex riccati_rate(const Model& model, double t, double omega_sq, Complex c) {
  switch (model.family) {
    case ModelFamily::Conservative:
      return -c * c - omega_sq;
    case ModelFamily::CaldirolaKanai:
      return -std::exp(-model.gamma * t) * c * c - omega_sq * std::exp(model.gamma * t);
    case ModelFamily::Expanding:
      return -c * c - (omega_sq - 0.25 * model.gamma * model.gamma);
    case ModelFamily::LogNlse:
      return -model.gamma * c - c * c - omega_sq;
  }
  return {};
}

double classical_accel(const Model& model, double omega_sq, double eta, double eta_dot) {
  switch (model.family) {
    case ModelFamily::Conservative:
      return -omega_sq * eta;
    case ModelFamily::CaldirolaKanai:
    case ModelFamily::LogNlse:
      return -model.gamma * eta_dot - omega_sq * eta;
    case ModelFamily::Expanding:
      return -(omega_sq - 0.25 * model.gamma * model.gamma) * eta;
  }
  return 0.0;
}

// Joint propagation vector: eta, eta_dot, re c, im c, phase.
using Joint = std::array<double, 5>;

Joint joint_rhs(const Model& model, double t, double segment_hint, const Joint& u) {
  double w = model.omega.value(t, segment_hint);
  double w2 = w * w;
  Complex c{u[2], u[3]};
  Complex dc = riccati_rate(model, t, w2, c);
  return {u[1], classical_accel(model, w2, u[0], u[1]), dc.real(), dc.imag(), u[3]};
}

template <size_t N, class Rhs>
std::array<double, N> rk4_step(const Rhs& rhs, double t, double h, const std::array<double, N>& u,
                               const std::array<double, N>& k1) {
  std::array<double, N> tmp, k2, k3, k4, out;
  for (size_t i = 0; i < N; ++i) tmp[i] = u[i] + 0.5 * h * k1[i];
  k2 = rhs(t + 0.5 * h, tmp);
  for (size_t i = 0; i < N; ++i) tmp[i] = u[i] + 0.5 * h * k2[i];
  k3 = rhs(t + 0.5 * h, tmp);
  for (size_t i = 0; i < N; ++i) tmp[i] = u[i] + h * k3[i];
  k4 = rhs(t + h, tmp);
  for (size_t i = 0; i < N; ++i)
    out[i] = u[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

void check_breakpoint_alignment(const Model& model, double t0, double t_end, double dt) {
  for (double b : model.omega.breakpoints()) {
    if (b <= t0 || b >= t_end) continue;
    double k = std::round((b - t0) / dt);
    if (std::abs(t0 + k * dt - b) > 1e-9 * std::max(1.0, std::abs(b)))
      throw ValidationError("omega: breakpoint " + num(b) +
                            " does not sit on a step boundary for dt = " + num(dt));
  }
}

}  // namespace

Complex riccati_rhs(const Model& model, double t, const RiccatiVar& r) {
  return riccati_rate(model, t, model.omega_sq(t), r.c);
}

std::pair<double, double> classical_rhs(const Model& model, double t, const ClassicalState& s) {
  return {s.eta_dot, classical_accel(model, model.omega_sq(t), s.eta, s.eta_dot)};
}

std::pair<double, double> ermakov_rhs(const Model& model, double t, const ErmakovState& e) {
  double w2 = model.omega_sq(t);
  double inv_a3 = 1.0 / (e.alpha * e.alpha * e.alpha);
  switch (model.family) {
    case ModelFamily::Conservative:
      return {e.alpha_dot, -w2 * e.alpha + inv_a3};
    case ModelFamily::CaldirolaKanai:
      return {e.alpha_dot, -model.gamma * e.alpha_dot - w2 * e.alpha +
                               std::exp(-2.0 * model.gamma * t) * inv_a3};
    case ModelFamily::Expanding:
    case ModelFamily::LogNlse:
      return {e.alpha_dot, -(w2 - 0.25 * model.gamma * model.gamma) * e.alpha + inv_a3};
  }
  return {};
}

RiccatiVar riccati_from_ermakov(const Model& model, double t, const ErmakovState& e) {
  if (!(e.alpha > 0.0)) throw ValidationError("alpha: must be > 0");
  double ratio = e.alpha_dot / e.alpha;
  double re = 0.0;
  switch (model.family) {
    case ModelFamily::Conservative:
    case ModelFamily::Expanding:
      re = ratio;
      break;
    case ModelFamily::CaldirolaKanai:
      re = std::exp(model.gamma * t) * ratio;
      break;
    case ModelFamily::LogNlse:
      re = ratio - 0.5 * model.gamma;
      break;
  }
  return {Complex{re, 1.0 / (e.alpha * e.alpha)}};
}

ErmakovState ermakov_from_riccati(const Model& model, double t, const RiccatiVar& r) {
  double im = r.c.imag();
  if (!(im > 0.0)) throw ValidationError("c: imag(c) must be > 0 (unphysical width)");
  double alpha = 1.0 / std::sqrt(im);
  double re = r.c.real();
  double alpha_dot = 0.0;
  switch (model.family) {
    case ModelFamily::Conservative:
    case ModelFamily::Expanding:
      alpha_dot = alpha * re;
      break;
    case ModelFamily::CaldirolaKanai:
      alpha_dot = std::exp(-model.gamma * t) * alpha * re;
      break;
    case ModelFamily::LogNlse:
      alpha_dot = alpha * (re + 0.5 * model.gamma);
      break;
  }
  return {alpha, alpha_dot};
}

TimeSeries integrate(const Model& model, const SystemState& initial, double t_end, double dt,
                     const IntegrationOptions& options) {
  validate(model);
  if (!(dt > 0.0)) throw ValidationError("dt: must be > 0");
  if (!(t_end > initial.t)) throw ValidationError("t_end: must be > start time");
  if (options.stride < 1) throw ValidationError("stride: must be >= 1");
  if (!(initial.riccati.c.imag() > options.width_collapse_eps))
    throw WidthCollapseError("imag(c) at or below collapse guard at start", initial.t);
  if (!model.omega.covers(initial.t, t_end))
    throw ValidationError("omega: run interval outside sampled profile domain");
  check_breakpoint_alignment(model, initial.t, t_end, dt);

  double t0 = initial.t;
  double span = t_end - t0;
  long long n_full = static_cast<long long>(std::floor(span / dt + 1e-9));
  double rem = span - static_cast<double>(n_full) * dt;
  if (rem <= 1e-9 * dt) rem = 0.0;
  long long n_total = n_full + (rem > 0.0 ? 1 : 0);

  auto rhs = [&](double hint) {
    return [&model, hint](double t, const Joint& u) { return joint_rhs(model, t, hint, u); };
  };

  Joint u = {initial.classical.eta, initial.classical.eta_dot, initial.riccati.c.real(),
             initial.riccati.c.imag(), initial.phase};

  TimeSeries series;
  series.times.reserve(static_cast<size_t>(n_total / options.stride + 2));
  series.states.reserve(series.times.capacity());
  auto store = [&](double t, const Joint& v) {
    series.times.push_back(t);
    series.states.push_back(
        {t, {v[0], v[1]}, RiccatiVar{Complex{v[2], v[3]}}, v[4]});
  };
  store(t0, u);

  for (long long k = 0; k < n_total; ++k) {
    double t = t0 + static_cast<double>(k) * dt;
    double h = (k < n_full) ? dt : rem;
    double t_next = (k + 1 == n_total) ? t_end : t0 + static_cast<double>(k + 1) * dt;
    auto f = rhs(t + 0.5 * h);

    Joint k1 = f(t, u);
    Joint full = rk4_step(f, t, h, u, k1);
    Joint half = rk4_step(f, t, 0.5 * h, u, k1);
    Joint halves = rk4_step(f, t + 0.5 * h, 0.5 * h, half, f(t + 0.5 * h, half));

    // Richardson estimate |full - halves| / (2^4 - 1) in a mixed norm: the
    // unit floor keeps components that pass through zero from dividing
    // roundoff by itself, the |u| + |h u'| part keeps exponentially growing
    // canonical variables on a relative scale.
    double err = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
      double scale = 1.0 + std::abs(u[i]) + std::abs(h * k1[i]);
      err = std::max(err, std::abs(full[i] - halves[i]) / (15.0 * scale));
    }
    if (err > options.step_error_tol)
      throw AccuracyError("step error estimate " + num(err) +
                              " above tolerance at t = " + num(t_next) +
                              "; reduce dt",
                          t_next, err);
    if (err > series.max_step_error) series.max_step_error = err;

    u = halves;
    if (!(u[3] > options.width_collapse_eps))
      throw WidthCollapseError("width collapse: imag(c) = " + num(u[3]) +
                                   " at t = " + num(t_next),
                               t_next);

    if ((k + 1) % options.stride == 0 || k + 1 == n_total) store(t_next, u);
  }
  return series;
}

LambdaSeries lambda_evolve(const Model& model, Complex lambda0, Complex lambda_dot0,
                           double t_end, double dt) {
  validate(model);
  if (model.family != ModelFamily::Conservative)
    throw ValidationError("family: lambda evolution is defined for the conservative family");
  if (!(dt > 0.0)) throw ValidationError("dt: must be > 0");
  if (!(t_end > 0.0)) throw ValidationError("t_end: must be > 0");

  // (re lambda, im lambda, re lambda_dot, im lambda_dot), lambda_dd = -omega^2 lambda.
  using V = std::array<double, 4>;
  auto f = [&model](double t, const V& u) -> V {
    double w2 = model.omega_sq(t);
    return {u[2], u[3], -w2 * u[0], -w2 * u[1]};
  };

  long long n = static_cast<long long>(std::floor(t_end / dt + 1e-9));
  double rem = t_end - static_cast<double>(n) * dt;
  if (rem <= 1e-9 * dt) rem = 0.0;
  long long n_total = n + (rem > 0.0 ? 1 : 0);

  V u = {lambda0.real(), lambda0.imag(), lambda_dot0.real(), lambda_dot0.imag()};
  LambdaSeries out;
  out.times.push_back(0.0);
  out.lambda.push_back(lambda0);
  out.lambda_dot.push_back(lambda_dot0);

  double biggest = std::abs(lambda0);
  for (long long k = 0; k < n_total; ++k) {
    double t = static_cast<double>(k) * dt;
    double h = (k < n) ? dt : rem;
    double t_next = (k + 1 == n_total) ? t_end : static_cast<double>(k + 1) * dt;
    u = rk4_step(f, t, h, u, f(t, u));
    Complex lam{u[0], u[1]};
    double mag = std::abs(lam);
    biggest = std::max(biggest, mag);
    if (mag <= 1e-12 * biggest)
      throw SingularityError("lambda passed through zero near t = " + num(t_next),
                             t_next);
    out.times.push_back(t_next);
    out.lambda.push_back(lam);
    out.lambda_dot.push_back(Complex{u[2], u[3]});
  }
  return out;
}

}  // namespace qriccati
