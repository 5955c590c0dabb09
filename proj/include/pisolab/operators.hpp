#pragma once

// Weighted basis partial isometries on l2(P) and on the constrained product
// basis {(r,s) : s in rP}, stored as unevaluated words of atomic factors and
// evaluated pointwise with exact rational coefficients. An operator word
// applied to a basis point yields at most one (coefficient, point) pair, so
// no truncation is ever involved; finite windows only choose test points.
//
// Atom semantics on l2(P):
//   shift(y)    S_y : eps_r -> eps_{ry}                  (isometry)
//   coshift(y)  W_y : eps_s -> eps_x iff s = xy, else 0  (S_y adjoint)
//   diag(f)         : eps_r -> f(r) eps_r
// and on the product basis:
//   comp_shift(x)   V_x : eps_(r',s') -> eps_(r,s') iff r' = rx
//   comp_coshift(x) V_x*: eps_(r,s)  -> eps_(rx,s) iff s in (rx)P
//   comp_diag(f)    rho(f): eps_(r,s) -> [tau_r(f)](s) eps_(r,s)

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pisolab/bp.hpp"
#include "pisolab/semigroup.hpp"

namespace pisolab {

enum class Carrier { LtwoP, Pairs };

struct BasisPoint {
  std::vector<Element> coords;  // size 1 (l2(P)) or 2 (product basis)
  bool operator==(const BasisPoint&) const = default;
};

std::string basis_point_to_string(const BasisPoint& b);
// The membership constraint s in rP for product-basis points.
bool pair_constraint_ok(const Descriptor& d, const Element& r,
                        const Element& s);

struct Atom {
  enum class Kind { Shift, CoShift, Diag, CompShift, CompCoShift, CompDiag };
  Kind kind;
  Element y;      // Shift / CoShift / CompShift / CompCoShift
  BpFunction f;   // Diag / CompDiag
};

struct MonomialOp {
  Descriptor basis_descriptor;
  Carrier carrier = Carrier::LtwoP;
  std::vector<Atom> word;  // empty word = identity; evaluated right to left
};

MonomialOp identity_op(const Descriptor& d, Carrier carrier);
MonomialOp shift_op(const Descriptor& d, const Element& y);
MonomialOp coshift_op(const Descriptor& d, const Element& y);
MonomialOp diag_op(const BpFunction& f);
MonomialOp comp_shift_op(const Descriptor& d, const Element& x);
MonomialOp comp_coshift_op(const Descriptor& d, const Element& x);
MonomialOp comp_diag_op(const BpFunction& f);

using ApplyResult = std::optional<std::pair<Rat, BasisPoint>>;
ApplyResult apply(const MonomialOp& a, const BasisPoint& b);

std::string apply_result_to_string(const ApplyResult& r);

// Operator product a.b (b acts first); word concatenation.
MonomialOp compose(const MonomialOp& a, const MonomialOp& b);
// Left-to-right product of several factors: product_of({A,B,C}) = A.B.C.
MonomialOp product_of(const std::vector<MonomialOp>& factors);
// Reverses the word and swaps every atom with its adjoint; rational diagonal
// coefficients are their own conjugates.
MonomialOp adjoint(const MonomialOp& a);

struct EqualityWitness {
  BasisPoint point;
  std::string lhs, rhs;
};
struct EqualityReport {
  bool equal = true;
  std::vector<EqualityWitness> witnesses;
};
EqualityReport equal_on_window(const MonomialOp& a, const MonomialOp& b,
                               const std::vector<BasisPoint>& window,
                               std::size_t witness_cap = 8);

enum class RepKind { CanonicalW, CanonicalS, Compressed, DegenerateFree };
std::string rep_kind_name(RepKind kind);
RepKind parse_rep_kind(const std::string& name);

// A semigroup homomorphism into partial isometries, given by lazy assignment;
// the map is total on any window. `diag` is the accompanying diagonal
// representation when the kind provides one (compressed only).
struct Representation {
  RepKind kind;
  Descriptor element_descriptor;  // semigroup being represented
  Descriptor basis_descriptor;    // semigroup underlying the basis points
  Carrier carrier = Carrier::LtwoP;
  std::function<MonomialOp(const Element&)> assign;
  std::function<MonomialOp(const BpFunction&)> diag;  // may be empty

  bool has_diag() const { return static_cast<bool>(diag); }
};

// canonical_W: x -> W_x on l2(P).
// canonical_S: x -> S_x, a representation of the opposite semigroup
//              (S_x S_y = S_{yx}); isometric, so the meaningful covariance
//              is the range-projection (left Nica) condition, which it
//              satisfies; its initial projections are trivial.
// compressed:  x -> V_x on the product basis, f -> rho(f).
// degenerate_free: every word w of F_n^+ -> W_{|w|} on l2(N); a genuine
//              partial-isometric representation that factors through N and
//              violates both Nica covariance conditions.
Representation build_representation(const Descriptor& d, RepKind kind);

std::vector<BasisPoint> basis_points_l2(const std::vector<Element>& window);
// Constrained pairs (r,s), s in rP, r-major in the given orders.
std::vector<BasisPoint> basis_points_pairs(const Descriptor& d,
                                           const std::vector<Element>& rs,
                                           const std::vector<Element>& ss);
// Basis points matching a representation's carrier, built from a window.
std::vector<BasisPoint> carrier_points(const Representation& rep,
                                       const std::vector<Element>& window);

}  // namespace pisolab
