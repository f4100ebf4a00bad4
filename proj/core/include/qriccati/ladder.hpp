#pragma once

#include <vector>

#include "qriccati/dynamics.hpp"
#include "qriccati/models.hpp"

namespace qriccati {

// Wave packet of the closed class polynomial * Gaussian:
//   Psi(x) = exp(log_norm) P(x~) exp(i [ (m/(2 hbar)) c x~^2 + p_center x~ / hbar ]),
// with x~ = x - x_center. Ladder operators act on this class exactly.
struct PolyGaussianState {
  PhysicalConstants constants{};
  std::vector<Complex> coeffs{Complex{1.0, 0.0}};  // P, ascending powers of x~
  double x_center = 0.0;                           // <x>
  double p_center = 0.0;                           // <p>
  RiccatiVar width{};                              // c, imag(c) > 0
  Complex log_norm{};                              // log of the scalar prefactor
};

int degree(const PolyGaussianState& s);

Complex evaluate(const PolyGaussianState& s, double x);

// Ground packet exp(i y x^2) with normalization (m/(pi hbar alpha^2))^{1/4}
// and time-dependent phase exp(-i phi/2); `phase` is the accumulated
// phi = integral of imag(c) dt, zero at a run's start.
PolyGaussianState vacuum_state(const PhysicalConstants& consts, const RiccatiVar& c, double phase);

// Annihilation a = i sqrt(m/(2 hbar)) alpha (p_op/m - c_op x) acting on s:
//   P -> k [ (hbar/m) P' + i (c_s - c_op) x~ P + i (p_center/m - c_op x_center) P ]
// with k = sqrt(m/(2 hbar)) imag(c_op)^{-1/2}. Differentiation lowers the
// degree, the x~ term (exactly zero at matched width) raises it, the center
// term is the z shift. Width mismatch |c_s - c_op| > 1e-10 is rejected.
PolyGaussianState apply_annihilation(const PolyGaussianState& s, const RiccatiVar& op_width);

// Creation, the adjoint: P -> k [ -(hbar/m) P' - i (c_s - conj(c_op)) x~ P
//                                 - i (p_center/m - conj(c_op) x_center) P ].
// At matched width the x~ coefficient is 2 imag(c); [a, a+] = 1 exactly.
PolyGaussianState apply_creation(const PolyGaussianState& s, const RiccatiVar& op_width);

// Matched-width shorthands (operator width = state width, exact algebra).
PolyGaussianState apply_annihilation(const PolyGaussianState& s);
PolyGaussianState apply_creation(const PolyGaussianState& s);

struct Eigenvalue {
  Complex z;
};

// Physical drops the exp(gamma t/2) factor that ties the dissipative z to
// the invariant; InvariantLevel keeps it, so |z|^2 = (m/hbar) I always.
enum class ZConvention { Physical, InvariantLevel };

// z = sqrt(m/(2 hbar)) alpha [ imag(c) eta + i (eta_dot - real(c) eta) ] in the
// model's own variables. LogNlse applies its real-part convention through c
// itself; CaldirolaKanai states are mapped to physical variables first
// (c -> exp(-gamma t) c); Expanding uses the canonical (Q, Q_dot) directly,
// where the two conventions coincide.
Eigenvalue z_eigenvalue(const Model& model, double t, const ClassicalState& cls,
                        const RiccatiVar& r, ZConvention convention = ZConvention::Physical);

// Displaced ground packet with centers (eta, eta_dot) and constant phase
// exp(i <p><x> / (2 hbar)); normalized.
PolyGaussianState coherent_state(const PhysicalConstants& consts, const ClassicalState& cls,
                                 const RiccatiVar& c, double phase);

// coherent_state sampled on x_grid. `z` must agree with the centers (checked
// to 1e-8); the grid must hold all but 1e-10 of the packet's mass.
std::vector<Complex> coherent_closed_form(const PhysicalConstants& consts, const Eigenvalue& z,
                                          const RiccatiVar& c, const ClassicalState& cls,
                                          double phase, const std::vector<double>& x_grid);

// exp(-|z|^2/2) sum_{n<=n_max} z^n (a+)^n / n! applied to the vacuum: a
// degree-n_max packet still centered at the origin that converges to
// coherent_state as n_max grows.
PolyGaussianState displacement_series(const PhysicalConstants& consts, const Eigenvalue& z,
                                      const RiccatiVar& c, double phase, int n_max);

// Norm bound of the dropped tail, |z|^(n_max+1)/sqrt((n_max+1)!).
double series_tail_bound(const Eigenvalue& z, int n_max);

// integral conj(s1) s2 dx via exact complex Gaussian moments; requires both
// widths physical (the combined quadratic form must decay) and identical
// constants.
Complex inner_product(const PolyGaussianState& s1, const PolyGaussianState& s2);

struct ZDriftReport {
  Complex z_check_start;  // z(0) exp(i phi(0))
  double max_drift;       // max_t |z(t) exp(i phi(t)) - z_check_start|
};

// The phase-adjusted eigenvalue z exp(i phi) is a constant of motion for any
// conservative run, time-dependent omega included.
ZDriftReport phase_adjusted_constancy(const Model& model, const TimeSeries& run);

}  // namespace qriccati
