#pragma once

// Pointwise checker suites for the covariance conditions satisfied (or
// violated) by partial-isometric semigroup representations:
//
//   right Nica:  V_x*V_x V_y*V_y = V_z*V_z   (Px n Py = Pz, else 0)
//   left Nica:   V_rV_r* V_sV_s* = V_tV_t*   (rP n sP = tP, else 0)
//   covariant pair: pi(tau_x(f)) = V_x pi(f) V_x*, initial projections
//     commute with the diagonal, and V_xV_x* = pi(1_x)
//
// plus equivalence audits for the characterization lemmas (free monoid
// generator orthogonality, coprime commutation in N^x, *-commuting power
// partial isometries for N^2) and the product-representation construction.
// Every check is exact on the sampled windows; a pass certifies the sampled
// set only.

#include <optional>
#include <string>
#include <vector>

#include "pisolab/check_report.hpp"
#include "pisolab/operators.hpp"

namespace pisolab {

// V_e = 1, V_x V_y = V_{xy}, and V V*V = V, pointwise.
CheckReport check_piso_rep(const Representation& rep,
                           const std::vector<Element>& elements,
                           const std::vector<BasisPoint>& basis);

CheckReport check_right_nica(const Representation& rep,
                             const std::vector<Element>& elements,
                             const std::vector<BasisPoint>& basis);

CheckReport check_left_nica(const Representation& rep,
                            const std::vector<Element>& elements,
                            const std::vector<BasisPoint>& basis);

// Requires rep.diag; generators are diagonal functions (typically 1_y).
CheckReport check_covariant_pair(const Representation& rep,
                                 const std::vector<Element>& elements,
                                 const std::vector<BpFunction>& generators,
                                 const std::vector<BasisPoint>& basis);

enum class AuditKind { FreeRight, FreeLeft, NTimesBicov, N2Bicov };
std::string audit_kind_name(AuditKind kind);

struct AuditReport {
  std::string kind;
  CheckReport criterion;               // the lemma's workable criterion
  std::vector<CheckReport> direct;     // the covariance checks themselves
  bool criterion_verdict = false;
  bool direct_verdict = false;
  bool agree = false;                  // the audited equivalence
};

// Evaluates BOTH sides of the characterization on the windows and reports
// whether the verdicts agree; a disagreement on a built-in representation
// would contradict the corresponding lemma.
AuditReport criterion_equivalence_audit(const Representation& rep,
                                        AuditKind kind,
                                        const std::vector<Element>& elements,
                                        const std::vector<BasisPoint>& basis);

struct ProductRepResult {
  std::optional<Representation> rep;  // absent when the precheck fails
  CheckReport precheck;               // pointwise *-commutation of the factors
};

// U_{(p,s)} = V_p W_s on the shared carrier; refused unless V_p and W_s
// *-commute pointwise on the sampled basis. The inverse direction is
// recovered by evaluating U at (p, e) and (e, s).
ProductRepResult product_rep(const Representation& rep_p,
                             const Representation& rep_q,
                             const std::vector<Element>& elements_p,
                             const std::vector<Element>& elements_q,
                             const std::vector<BasisPoint>& basis);

}  // namespace pisolab
