#pragma once

#include <array>
#include <vector>

#include "qriccati/dynamics.hpp"
#include "qriccati/models.hpp"

namespace qriccati {

enum class BranchLabel { Plus, Minus };

// Constant solution c~ of the width equation at constant omega, i.e. a root
// of 0 = -Gamma c - c^2 - W^2 with (Gamma, W^2) = (0, omega^2) conservative,
// (gamma, omega^2) LogNlse, (0, omega^2 - gamma^2/4) expanding:
//   c~(+|-) = -Gamma/2 +|- sqrt(Gamma^2/4 - W^2)   (principal square root)
struct ParticularSolution {
  Complex c_tilde;
  BranchLabel branch;
};

// Linear coefficient of the deviation equation: v = c - c~ obeys
// v' = -A v - v^2 with A = Gamma + 2 c~ = +|- 2 sqrt(Gamma^2/4 - W^2).
struct BranchParameter {
  Complex a;
};

// Moebius parameter labelling one member of the solution family around a
// particular solution: w0 = 1/(c0 - c~); infinity selects c~ itself.
class FamilyParameter {
 public:
  static FamilyParameter at_particular() { return FamilyParameter(true, {}); }
  static FamilyParameter from_w0(Complex w0) { return FamilyParameter(false, w0); }
  static FamilyParameter from_initial(Complex c0, const ParticularSolution& p);

  bool is_particular() const { return particular_; }
  Complex w0() const;  // throws ValidationError when is_particular()

 private:
  FamilyParameter(bool particular, Complex w0) : particular_(particular), w0_(w0) {}
  bool particular_;
  Complex w0_;
};

// Both roots, Plus first. Requires constant omega; CaldirolaKanai is not
// autonomous in its own variable, so it is rejected (map to LogNlse first).
std::array<ParticularSolution, 2> particular_solutions(const Model& model);

BranchParameter branch_parameter(const Model& model, const ParticularSolution& p);

// w(t) = (exp(A t) - 1)/A + w0 exp(A t), the solution of w' = A w + 1;
// at A = 0 this is exactly w0 + t.
Complex bernoulli_w(const BranchParameter& a, const FamilyParameter& w0, double t);

// c(t) = c~ + 1/w(t). Throws SingularityError when w(t) reaches the Moebius
// pole (only unphysical family members, imag(c) <= 0, can get there).
RiccatiVar general_solution(const Model& model, const ParticularSolution& p,
                            const FamilyParameter& w0, double t);

enum class WidthBranchClass {
  UnderdampedWidth,  // omega^2 > gamma^2/4: conjugate imaginary A pair, width oscillates
  OverdampedWidth,   // 0 < omega^2 < gamma^2/4: two real A, two distinct asymptotics
  FreeDamped,        // omega = 0: A = +gamma and -gamma
  Degenerate,        // omega^2 = gamma^2/4: double root, A = 0
};

const char* width_branch_class_name(WidthBranchClass c);

struct BranchInfo {
  ParticularSolution solution;
  BranchParameter a;
  bool physical;             // imag(c~) > 0: hosts a normalizable stationary width
  double alpha_eq;           // imag(c~)^{-1/2}; NaN when not physical
  double asymptotic_energy;  // width energy at c~; the imag->0+ limit gives 0 or +inf
};

struct BranchReport {
  WidthBranchClass classification;
  double omega;
  double gamma;
  std::array<BranchInfo, 2> branches;  // Plus first
};

// Classification of the two width branches at (omega, gamma), using the
// model's family and constants but overriding its frequency and friction.
BranchReport classify_branch(const Model& model, double omega, double gamma);

}  // namespace qriccati
