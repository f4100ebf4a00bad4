#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qriccati/models.hpp"

namespace qriccati {

using Complex = std::complex<double>;

// Complex width variable c = (2 hbar / m) y, where y is the coefficient of
// the quadratic term in the wave-packet exponent. imag(c) = 1/alpha^2 > 0
// for a normalizable packet. For CaldirolaKanai and Expanding runs c is that
// model's own canonical variable.
struct RiccatiVar {
  Complex c{0.0, 1.0};
};

// Width amplitude alpha (dimension sqrt(time)) and its derivative.
struct ErmakovState {
  double alpha = 1.0;
  double alpha_dot = 0.0;
};

// Wave-packet center. Physical (eta, eta_dot) for Conservative,
// CaldirolaKanai and LogNlse; canonical (Q, Q_dot) with Q = exp(gamma t/2) x
// for Expanding.
struct ClassicalState {
  double eta = 0.0;
  double eta_dot = 0.0;
};

struct SystemState {
  double t = 0.0;
  ClassicalState classical{};
  RiccatiVar riccati{};
  double phase = 0.0;  // phi(t) = integral of imag(c) dt' from the run start
};

struct TimeSeries {
  std::vector<double> times;
  std::vector<SystemState> states;
  double max_step_error = 0.0;  // largest scaled Richardson estimate seen
};

// Width equation dc/dt for the family:
//   Conservative:    -c^2 - omega^2
//   CaldirolaKanai:  -exp(-gamma t) c^2 - omega^2 exp(gamma t)
//   Expanding:       -c^2 - (omega^2 - gamma^2/4)
//   LogNlse:         -gamma c - c^2 - omega^2
Complex riccati_rhs(const Model& model, double t, const RiccatiVar& r);

// Center equation, returned as (eta_dot, eta_ddot):
//   Conservative:              eta_dd = -omega^2 eta
//   CaldirolaKanai, LogNlse:   eta_dd = -gamma eta_dot - omega^2 eta
//   Expanding (canonical):     Q_dd   = -(omega^2 - gamma^2/4) Q
std::pair<double, double> classical_rhs(const Model& model, double t, const ClassicalState& s);

// Width amplitude equation, returned as (alpha_dot, alpha_ddot):
//   Conservative:        alpha_dd = -omega^2 alpha + 1/alpha^3
//   CaldirolaKanai:      alpha_dd = -gamma alpha_dot - omega^2 alpha + exp(-2 gamma t)/alpha^3
//   Expanding, LogNlse:  alpha_dd = -(omega^2 - gamma^2/4) alpha + 1/alpha^3
std::pair<double, double> ermakov_rhs(const Model& model, double t, const ErmakovState& e);

// imag(c) = 1/alpha^2 always; real(c) is the family's own alpha relation:
//   Conservative, Expanding:  alpha_dot/alpha
//   CaldirolaKanai:           exp(gamma t) alpha_dot/alpha
//   LogNlse:                  alpha_dot/alpha - gamma/2
// The CaldirolaKanai factor makes d/dt [imag(c)^{-1/2}] equal alpha_dot along
// that family's width equation; without it the flows disagree.
RiccatiVar riccati_from_ermakov(const Model& model, double t, const ErmakovState& e);

// Inverse of riccati_from_ermakov; throws ValidationError when imag(c) <= 0.
ErmakovState ermakov_from_riccati(const Model& model, double t, const RiccatiVar& r);

struct IntegrationOptions {
  double width_collapse_eps = 1e-12;  // abort when imag(c) <= eps
  double step_error_tol = 1e-8;       // per-step scaled Richardson limit
  int stride = 1;                     // store every stride-th step (endpoints always)
};

// Fixed-step classical RK4 on the joint system (eta, eta_dot, c, phi) with
// phi' = imag(c). Each step is advanced by two half steps; the difference to
// the single full step, divided by 15 and scaled per component, is the local
// error estimate. Interior breakpoints of a piecewise omega must sit on step
// boundaries. Throws WidthCollapseError / AccuracyError / ValidationError.
TimeSeries integrate(const Model& model, const SystemState& initial, double t_end, double dt,
                     const IntegrationOptions& options = {});

struct LambdaSeries {
  std::vector<double> times;
  std::vector<Complex> lambda;
  std::vector<Complex> lambda_dot;
};

// Linearized width evolution lambda_dd = -omega^2 lambda (conservative family
// only). Along the solution lambda_dot/lambda = c, |lambda| = alpha, and the
// unwrapped argument of lambda advances like phi. Throws SingularityError if
// |lambda| falls below 1e-12 of its running maximum.
LambdaSeries lambda_evolve(const Model& model, Complex lambda0, Complex lambda_dot0,
                           double t_end, double dt);

}  // namespace qriccati
