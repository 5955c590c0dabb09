#pragma once

// The commutative diagonal algebra spanned by the characteristic functions
// 1_u of principal right ideals uP, with
//
//   1_u 1_v = 1_z   if uP n vP = zP   (0 when the ideals are disjoint)
//   tau_x(1_u) = 1_{xu}
//
// together with the Q_A projection calculus: for a finite F, the subsets
// A of F index mutually orthogonal idempotents Q_A that sum to 1_e and
// compute the sup norm of any rational combination of the 1_x.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pisolab/check_report.hpp"
#include "pisolab/rational.hpp"
#include "pisolab/semigroup.hpp"

namespace pisolab {

struct BpFunction {
  Descriptor descriptor;
  std::map<Element, Rat, ElementLess> terms;  // no zero coefficients

  static BpFunction zero(const Descriptor& d) { return {d, {}}; }
  // 1_u (the unit of the algebra is indicator(d, identity(d)) = 1_e).
  static BpFunction indicator(const Descriptor& d, const Element& u);
  static BpFunction unit(const Descriptor& d) {
    return indicator(d, identity(d));
  }

  bool is_zero() const { return terms.empty(); }
  bool operator==(const BpFunction&) const = default;
};

BpFunction bp_add(const BpFunction& f, const BpFunction& g);
BpFunction bp_sub(const BpFunction& f, const BpFunction& g);
BpFunction bp_scale(const Rat& c, const BpFunction& f);
BpFunction bp_multiply(const BpFunction& f, const BpFunction& g);

// Linear extension of 1_u -> 1_{xu}.
BpFunction tau_apply(const Descriptor& d, const Element& x,
                     const BpFunction& f);

// Value at r: the sum of coefficients of those 1_u with r in uP.
Rat bp_evaluate(const BpFunction& f, const Element& r);

std::string bp_to_string(const BpFunction& f);

struct QaEntry {
  std::vector<Element> subset;        // A, ascending in canonical order
  std::optional<Element> sigma_a;     // iterated right LCM of A (absent for {})
  bool nonzero = false;
  BpFunction q;                       // Q_A expanded in the 1_u basis
};

struct QaReport {
  Descriptor descriptor;
  std::vector<Element> f;             // F, deduplicated, canonical order
  std::vector<QaEntry> entries;       // all 2^|F| subsets, by bitmask order
};

inline constexpr std::size_t kMaxQaSet = 12;

// Q_{} = prod_{x in F} (1_e - 1_x); Q_A = prod_{x in F \ A} (1_{sA} - 1_{sA v x})
// for nonempty A with sA = sigma(A); Q_F = 1_{sF}. The nonzero flag follows
// the criterion A = {x in F : sA in xP}; Q_{} is decided by its value at e.
QaReport qa_decomposition(const Descriptor& d, const std::vector<Element>& f);

// max |sum_{x in A} lambda_x| over subsets A of the support with Q_A != 0.
Rat sup_norm_formula(const BpFunction& f);
// max_r |f(r)| over the window; equals the formula whenever the window
// contains a point of every nonzero Q_A (sigma(A) is always such a point).
Rat sup_norm_window(const BpFunction& f, const std::vector<Element>& window);

// For all pairs (x,y) of window elements and every basis point r, checks that
// the pointwise product of the indicator functions 1_x 1_y agrees with the
// indicator of the right LCM (or vanishes when the right ideals are
// disjoint) — the left-Nica covariance of the shift action on the diagonal.
CheckReport check_action_left_nica(const Descriptor& d,
                                   const std::vector<Element>& elements,
                                   const std::vector<Element>& basis);

}  // namespace pisolab
