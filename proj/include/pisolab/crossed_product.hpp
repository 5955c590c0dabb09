#pragma once

// Symbolic arithmetic in the *-algebra spanned by monomials V_x* rho(f) V_y
// acting on the constrained product basis. Multiplication rewrites a middle
// product V_y V_s* through the left LCM of y and s:
//
//   (V_x* a V_y)(V_s* b V_t) = V_{rx}* tau_r(a 1_y) tau_q(1_s b) V_{qt}
//
// where Py n Ps = Pz, z = ry = qs (zero when the left ideals are disjoint).
// Monomials are kept normalized (f = f 1_x 1_y, zero terms dropped), which
// makes equality of symbolic elements a key-by-key comparison and keeps the
// faithful action on basis vectors in exact correspondence.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pisolab/bp.hpp"
#include "pisolab/operators.hpp"
#include "pisolab/semigroup.hpp"

namespace pisolab {

struct MonomialKey {
  Element x, y;  // V_x* rho(f) V_y
  bool operator==(const MonomialKey&) const = default;
};
struct MonomialKeyLess {
  bool operator()(const MonomialKey& a, const MonomialKey& b) const {
    const int c = compare(a.x, b.x);
    return c != 0 ? c < 0 : compare(a.y, b.y) < 0;
  }
};

struct CpElement {
  Descriptor descriptor;
  std::map<MonomialKey, BpFunction, MonomialKeyLess> terms;  // normalized

  static CpElement zero(const Descriptor& d) { return {d, {}}; }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const CpElement&) const = default;
};

// f 1_x 1_y; the monomial's operator is unchanged by this projection.
BpFunction cp_normalize(const Descriptor& d, const Element& x,
                        const BpFunction& f, const Element& y);

// The single normalized monomial V_x* rho(f) V_y (zero element if f
// normalizes away).
CpElement cp_monomial(const Descriptor& d, const Element& x,
                      const BpFunction& f, const Element& y);
// rho(f) = V_e* rho(f) V_e.
CpElement cp_diagonal(const Descriptor& d, const BpFunction& f);

CpElement cp_add(const CpElement& u, const CpElement& v);
CpElement cp_scale(const Rat& c, const CpElement& u);
CpElement cp_multiply(const CpElement& u, const CpElement& v);
// (V_x* rho(f) V_y)* = V_y* rho(f) V_x for rational (self-conjugate) f.
CpElement cp_adjoint(const CpElement& u);

std::string cp_to_string(const CpElement& u);

struct BasisPointLess {
  bool operator()(const BasisPoint& a, const BasisPoint& b) const {
    const size_t n = std::min(a.coords.size(), b.coords.size());
    for (size_t i = 0; i < n; ++i) {
      const int c = compare(a.coords[i], b.coords[i]);
      if (c != 0) return c < 0;
    }
    return a.coords.size() < b.coords.size();
  }
};

// Finitely supported vector in the constrained product basis.
using BasisVector = std::map<BasisPoint, Rat, BasisPointLess>;

// The action of u on eps_b: sum over monomials of apply(V_x* rho(f) V_y, b),
// collected with zero coefficients dropped.
BasisVector cp_apply(const CpElement& u, const BasisPoint& b);
// Linear extension to finitely supported vectors.
BasisVector cp_apply(const CpElement& u, const BasisVector& v);

std::string basis_vector_to_string(const BasisVector& v);

}  // namespace pisolab
