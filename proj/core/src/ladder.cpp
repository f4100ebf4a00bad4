#include "qriccati/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qriccati {

namespace {

constexpr double kWidthMatchTol = 1e-10;

void require_physical_width(const RiccatiVar& r, const char* who) {
  if (!(r.c.imag() > 0.0))
    throw ValidationError(std::string(who) + ": imag(c) must be > 0 (unphysical width)");
}

std::vector<Complex> derivative(const std::vector<Complex>& p) {
  if (p.size() <= 1) return {Complex{}};
  std::vector<Complex> d(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

std::vector<Complex> multiply(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out(a.size() + b.size() - 1, Complex{});
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// P(u + d) by Taylor shift.
std::vector<Complex> shift(const std::vector<Complex>& p, Complex d) {
  std::vector<Complex> out(p.size(), Complex{});
  for (size_t j = 0; j < p.size(); ++j) {
    Complex binom = 1.0;  // C(j, k) d^(j-k), built from k = j downwards
    Complex power = 1.0;
    // out[k] += C(j,k) d^(j-k) p[j]
    for (size_t back = 0; back <= j; ++back) {
      size_t k = j - back;
      out[k] += p[j] * power * binom;
      binom *= static_cast<double>(k) / static_cast<double>(back + 1);
      power *= d;
    }
  }
  return out;
}

void trim(std::vector<Complex>& p) {
  while (p.size() > 1 && p.back() == Complex{}) p.pop_back();
}

enum class LadderKind { Annihilation, Creation };

PolyGaussianState apply_ladder(const PolyGaussianState& s, const RiccatiVar& op_width,
                               LadderKind kind) {
  require_physical_width(s.width, "state");
  require_physical_width(op_width, "operator");
  if (std::abs(s.width.c - op_width.c) > kWidthMatchTol)
    throw ValidationError("operator width does not match state width (|dc| > 1e-10)");

  double m = s.constants.mass;
  double hbar = s.constants.hbar;
  double k = std::sqrt(m / (2.0 * hbar * op_width.c.imag()));

  Complex c_op = (kind == LadderKind::Annihilation) ? op_width.c : std::conj(op_width.c);
  double sign = (kind == LadderKind::Annihilation) ? 1.0 : -1.0;
  Complex rais = Complex{0.0, sign} * (s.width.c - c_op);                      // x~ P term
  Complex cent = Complex{0.0, sign} * (s.p_center / m - c_op * s.x_center);   // z shift

  std::vector<Complex> d = derivative(s.coeffs);
  std::vector<Complex> out(std::max(s.coeffs.size() + 1, d.size()), Complex{});
  for (size_t i = 0; i < d.size(); ++i) out[i] += sign * (hbar / m) * d[i];
  for (size_t i = 0; i < s.coeffs.size(); ++i) {
    out[i] += cent * s.coeffs[i];
    out[i + 1] += rais * s.coeffs[i];
  }
  for (auto& v : out) v *= k;
  trim(out);

  PolyGaussianState result = s;
  result.coeffs = std::move(out);
  return result;
}

// Conservative-form eigenvalue in whatever variables are passed in.
Complex z_form(const PhysicalConstants& consts, const ClassicalState& cls, Complex c) {
  double alpha = 1.0 / std::sqrt(c.imag());
  double k = std::sqrt(consts.mass / (2.0 * consts.hbar));
  return k * alpha *
         Complex{c.imag() * cls.eta, cls.eta_dot - c.real() * cls.eta};
}

}  // namespace

int degree(const PolyGaussianState& s) {
  size_t d = s.coeffs.size();
  while (d > 1 && s.coeffs[d - 1] == Complex{}) --d;
  return static_cast<int>(d) - 1;
}

Complex evaluate(const PolyGaussianState& s, double x) {
  double xt = x - s.x_center;
  Complex poly{};
  for (size_t k = s.coeffs.size(); k-- > 0;) poly = poly * xt + s.coeffs[k];
  Complex y = s.width.c * (s.constants.mass / (2.0 * s.constants.hbar));
  Complex exponent = s.log_norm + Complex{0.0, 1.0} * (y * xt * xt + s.p_center * xt / s.constants.hbar);
  return poly * std::exp(exponent);
}

PolyGaussianState vacuum_state(const PhysicalConstants& consts, const RiccatiVar& c, double phase) {
  require_physical_width(c, "vacuum");
  PolyGaussianState s;
  s.constants = consts;
  s.width = c;
  s.log_norm = Complex{0.25 * std::log(consts.mass * c.c.imag() / (M_PI * consts.hbar)),
                       -0.5 * phase};
  return s;
}

PolyGaussianState apply_annihilation(const PolyGaussianState& s, const RiccatiVar& op_width) {
  return apply_ladder(s, op_width, LadderKind::Annihilation);
}

PolyGaussianState apply_creation(const PolyGaussianState& s, const RiccatiVar& op_width) {
  return apply_ladder(s, op_width, LadderKind::Creation);
}

PolyGaussianState apply_annihilation(const PolyGaussianState& s) {
  return apply_ladder(s, s.width, LadderKind::Annihilation);
}

PolyGaussianState apply_creation(const PolyGaussianState& s) {
  return apply_ladder(s, s.width, LadderKind::Creation);
}

Eigenvalue z_eigenvalue(const Model& model, double t, const ClassicalState& cls,
                        const RiccatiVar& r, ZConvention convention) {
  require_physical_width(r, "z_eigenvalue");
  Complex c = r.c;
  bool dissipative_level = false;
  switch (model.family) {
    case ModelFamily::Conservative:
    case ModelFamily::Expanding:
      break;  // conventions coincide
    case ModelFamily::CaldirolaKanai:
      c *= std::exp(-model.gamma * t);  // canonical -> physical width variable
      dissipative_level = true;
      break;
    case ModelFamily::LogNlse:
      dissipative_level = true;
      break;
  }
  Complex z = z_form(model.constants, cls, c);
  if (dissipative_level && convention == ZConvention::InvariantLevel)
    z *= std::exp(0.5 * model.gamma * t);
  return {z};
}

PolyGaussianState coherent_state(const PhysicalConstants& consts, const ClassicalState& cls,
                                 const RiccatiVar& c, double phase) {
  PolyGaussianState s = vacuum_state(consts, c, phase);
  s.x_center = cls.eta;
  s.p_center = consts.mass * cls.eta_dot;
  s.log_norm += Complex{0.0, 0.5 * s.p_center * s.x_center / consts.hbar};
  return s;
}

std::vector<Complex> coherent_closed_form(const PhysicalConstants& consts, const Eigenvalue& z,
                                          const RiccatiVar& c, const ClassicalState& cls,
                                          double phase, const std::vector<double>& x_grid) {
  require_physical_width(c, "coherent_closed_form");
  if (x_grid.size() < 2 || !(x_grid.front() < x_grid.back()))
    throw ValidationError("x_grid: need at least two increasing points");

  Complex z_expected = z_form(consts, cls, c.c);
  if (std::abs(z.z - z_expected) > 1e-8 * std::max(1.0, std::abs(z_expected)))
    throw ValidationError("z: inconsistent with (eta, eta_dot, c)");

  double sigma = std::sqrt(0.5 * consts.hbar / (consts.mass * c.c.imag()));
  double mass_outside = 0.5 * std::erfc((x_grid.back() - cls.eta) / (sigma * std::sqrt(2.0))) +
                        0.5 * std::erfc((cls.eta - x_grid.front()) / (sigma * std::sqrt(2.0)));
  if (mass_outside > 1e-10)
    throw ValidationError("x_grid: packet mass outside grid exceeds 1e-10 (coverage)");

  PolyGaussianState s = coherent_state(consts, cls, c, phase);
  std::vector<Complex> samples;
  samples.reserve(x_grid.size());
  for (double x : x_grid) samples.push_back(evaluate(s, x));
  return samples;
}

PolyGaussianState displacement_series(const PhysicalConstants& consts, const Eigenvalue& z,
                                      const RiccatiVar& c, double phase, int n_max) {
  if (n_max < 0) throw ValidationError("n_max: must be >= 0");
  PolyGaussianState vac = vacuum_state(consts, c, phase);

  // Accumulate sum of z^n (a+)^n / n! at polynomial level; the shared Gaussian
  // and prefactor are untouched by creation.
  PolyGaussianState term = vac;
  std::vector<Complex> acc = term.coeffs;
  for (int n = 1; n <= n_max; ++n) {
    term = apply_creation(term);
    for (auto& v : term.coeffs) v *= z.z / static_cast<double>(n);
    if (acc.size() < term.coeffs.size()) acc.resize(term.coeffs.size(), Complex{});
    for (size_t i = 0; i < term.coeffs.size(); ++i) acc[i] += term.coeffs[i];
  }
  double weight = std::exp(-0.5 * std::norm(z.z));
  for (auto& v : acc) v *= weight;

  PolyGaussianState out = vac;
  out.coeffs = std::move(acc);
  return out;
}

double series_tail_bound(const Eigenvalue& z, int n_max) {
  if (n_max < 0) throw ValidationError("n_max: must be >= 0");
  double mag = std::abs(z.z);
  if (mag == 0.0) return 0.0;
  return std::exp(static_cast<double>(n_max + 1) * std::log(mag) -
                  0.5 * std::lgamma(static_cast<double>(n_max + 2)));
}

Complex inner_product(const PolyGaussianState& s1, const PolyGaussianState& s2) {
  if (s1.constants.mass != s2.constants.mass || s1.constants.hbar != s2.constants.hbar)
    throw ValidationError("constants: states carry different (mass, hbar)");
  double m = s1.constants.mass;
  double hbar = s1.constants.hbar;
  Complex y1 = s1.width.c * (m / (2.0 * hbar));
  Complex y2 = s2.width.c * (m / (2.0 * hbar));
  const Complex i{0.0, 1.0};

  // conj(Psi1) Psi2 = R(x) exp(A2 x^2 + A1 x + A0 + L).
  Complex a2 = i * (y2 - std::conj(y1));
  Complex a1 = 2.0 * i * (std::conj(y1) * s1.x_center - y2 * s2.x_center) +
               i * (s2.p_center - s1.p_center) / hbar;
  Complex a0 = i * (y2 * s2.x_center * s2.x_center - std::conj(y1) * s1.x_center * s1.x_center) +
               i * (s1.p_center * s1.x_center - s2.p_center * s2.x_center) / hbar;
  Complex q = -a2;
  if (!(q.real() > 0.0))
    throw ValidationError("divergent integral: combined quadratic form does not decay");

  Complex s = a1 / (2.0 * q);  // complete the square around x = s
  std::vector<Complex> p1 = s1.coeffs;
  for (auto& v : p1) v = std::conj(v);
  std::vector<Complex> r =
      multiply(shift(p1, s - s1.x_center), shift(s2.coeffs, s - s2.x_center));

  // Central moments of exp(-q u^2): even only, M_n = (n-1)/(2q) M_{n-2}.
  Complex total{};
  Complex moment = std::sqrt(M_PI / q);
  for (size_t n = 0; n < r.size(); n += 2) {
    total += r[n] * moment;
    moment *= static_cast<double>(n + 1) / (2.0 * q);
  }
  return total * std::exp(std::conj(s1.log_norm) + s2.log_norm + a0 + q * s * s);
}

ZDriftReport phase_adjusted_constancy(const Model& model, const TimeSeries& run) {
  if (model.family != ModelFamily::Conservative)
    throw ValidationError("family: phase-adjusted constancy applies to conservative runs");
  if (run.states.empty()) throw ValidationError("run: empty time series");

  ZDriftReport report{};
  for (size_t k = 0; k < run.states.size(); ++k) {
    const SystemState& st = run.states[k];
    Complex z = z_eigenvalue(model, st.t, st.classical, st.riccati).z;
    Complex adjusted = z * std::exp(Complex{0.0, st.phase});
    if (k == 0)
      report.z_check_start = adjusted;
    else
      report.max_drift = std::max(report.max_drift, std::abs(adjusted - report.z_check_start));
  }
  return report;
}

}  // namespace qriccati
