#pragma once

#include "qriccati/dynamics.hpp"
#include "qriccati/ladder.hpp"
#include "qriccati/models.hpp"

namespace qriccati {

// Which description a mapped quantity lives in. Tagged values refuse to be
// consumed under the wrong tag, so canonical and physical numbers cannot be
// mixed silently.
enum class Representation { PhysicalNl, CanonicalCk, CanonicalExpanding };

const char* representation_name(Representation rep);

struct TaggedRiccati {
  RiccatiVar var;
  Representation rep;
};

struct TaggedErmakov {
  ErmakovState state;
  Representation rep;
};

struct TaggedClassical {
  ClassicalState state;
  Representation rep;
};

// c_CK = exp(gamma t) c_NL; widths: alpha_CK = exp(-gamma t/2) alpha_NL with
// alpha_dot transported along d/dt of that relation. All maps are exact and
// each inverse undoes its forward map to roundoff.
TaggedRiccati nl_to_ck_riccati(const RiccatiVar& c_nl, double t, double gamma);
RiccatiVar ck_to_nl_riccati(const TaggedRiccati& c_ck, double t, double gamma);

// c_exp = c_NL + gamma/2 (same alpha, same alpha_dot).
TaggedRiccati nl_to_expanding_riccati(const RiccatiVar& c_nl, double gamma);
RiccatiVar expanding_to_nl_riccati(const TaggedRiccati& c_exp, double gamma);

TaggedErmakov nl_to_ck_alpha(const ErmakovState& e_nl, double t, double gamma);
ErmakovState ck_to_nl_alpha(const TaggedErmakov& e_ck, double t, double gamma);

// Q = exp(gamma t/2) eta, Q_dot = exp(gamma t/2)(eta_dot + (gamma/2) eta).
TaggedClassical physical_to_expanding(const ClassicalState& cls, double t, double gamma);
ClassicalState expanding_to_physical(const TaggedClassical& q, double t, double gamma);

// p_hat = exp(gamma t) p.
double canonical_momentum(double p_physical, double t, double gamma);
double physical_momentum(double p_canonical, double t, double gamma);

// The canonical wave function's exponent is exp(gamma t) times the physical
// one. Scales the x-dependent exponent parameters of a Gaussian packet
// (quadratic -> width, linear -> momentum) directly and via the dedicated
// maps, returning the largest parameter residual. Purely time-dependent
// terms (normalization, global phase) are outside the map and ignored.
// Requires degree(wp_nl) == 0.
double exponent_map_check(const PolyGaussianState& wp_nl, double t, double gamma);

}  // namespace qriccati
