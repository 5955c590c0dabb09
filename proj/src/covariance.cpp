#include "pisolab/covariance.hpp"

#include <stdexcept>

#include "pisolab/parallel.hpp"

namespace pisolab {

namespace {

// Compares two operators pointwise and appends failures as check witnesses.
void compare_pointwise(CheckReport& report,
                       const std::vector<std::string>& elements,
                       const MonomialOp& lhs, const MonomialOp& rhs,
                       const std::vector<BasisPoint>& basis) {
  const auto eq = equal_on_window(lhs, rhs, basis, kWitnessCap);
  if (eq.equal) return;
  report.pass = false;
  for (const auto& w : eq.witnesses) {
    if (report.witnesses.size() >= kWitnessCap) break;
    report.witnesses.push_back(
        {elements, basis_point_to_string(w.point), w.lhs, w.rhs});
  }
}

// Requires the product to vanish at every basis point.
void require_zero(CheckReport& report,
                  const std::vector<std::string>& elements,
                  const MonomialOp& lhs, const std::vector<BasisPoint>& basis) {
  for (const auto& pt : basis) {
    const auto out = apply(lhs, pt);
    if (out) {
      report.pass = false;
      if (report.witnesses.size() >= kWitnessCap) break;
      report.witnesses.push_back({elements, basis_point_to_string(pt),
                                  apply_result_to_string(out), "0"});
    }
  }
}

void merge(CheckReport& into, CheckReport&& part) {
  if (part.pass) return;
  into.pass = false;
  for (auto& w : part.witnesses) {
    if (into.witnesses.size() >= kWitnessCap) break;
    into.witnesses.push_back(std::move(w));
  }
}

std::string rep_label(const Representation& rep) {
  return descriptor_to_string(rep.element_descriptor);
}

}  // namespace

CheckReport check_piso_rep(const Representation& rep,
                           const std::vector<Element>& elements,
                           const std::vector<BasisPoint>& basis) {
  if (elements.empty() || basis.empty())
    throw std::invalid_argument("empty check window");
  CheckReport report{"piso_rep", rep_label(rep), true, {}};
  const Descriptor& d = rep.element_descriptor;

  compare_pointwise(report, {element_to_string(identity(d))},
                    rep.assign(identity(d)),
                    identity_op(rep.basis_descriptor, rep.carrier), basis);

  for (const auto& x : elements) {
    const auto vx = rep.assign(x);
    compare_pointwise(report, {element_to_string(x)},
                      product_of({vx, adjoint(vx), vx}), vx, basis);
  }

  auto parts = parallel_collect<CheckReport>(
      elements.size(), [&](size_t i) {
        CheckReport part{report.check, report.semigroup, true, {}};
        const auto& x = elements[i];
        const auto vx = rep.assign(x);
        for (const auto& y : elements) {
          compare_pointwise(part, {element_to_string(x), element_to_string(y)},
                            compose(vx, rep.assign(y)),
                            rep.assign(multiply(d, x, y)), basis);
        }
        return part;
      });
  for (auto& part : parts) merge(report, std::move(part));
  return report;
}

namespace {

CheckReport nica_check(const Representation& rep,
                       const std::vector<Element>& elements,
                       const std::vector<BasisPoint>& basis, bool right) {
  if (elements.empty() || basis.empty())
    throw std::invalid_argument("empty check window");
  CheckReport report{right ? "right_nica" : "left_nica", rep_label(rep), true,
                     {}};
  const Descriptor& d = rep.element_descriptor;
  auto parts = parallel_collect<CheckReport>(
      elements.size(), [&](size_t i) {
        CheckReport part{report.check, report.semigroup, true, {}};
        const auto& x = elements[i];
        const auto vx = rep.assign(x);
        for (const auto& y : elements) {
          const auto vy = rep.assign(y);
          const auto lhs =
              right ? product_of({adjoint(vx), vx, adjoint(vy), vy})
                    : product_of({vx, adjoint(vx), vy, adjoint(vy)});
          const auto z = right ? left_lcm(d, x, y) : right_lcm(d, x, y);
          const std::vector<std::string> label{element_to_string(x),
                                               element_to_string(y)};
          if (z) {
            const auto vz = rep.assign(*z);
            const auto rhs = right ? product_of({adjoint(vz), vz})
                                   : product_of({vz, adjoint(vz)});
            compare_pointwise(part, label, lhs, rhs, basis);
          } else {
            require_zero(part, label, lhs, basis);
          }
        }
        return part;
      });
  for (auto& part : parts) merge(report, std::move(part));
  return report;
}

}  // namespace

CheckReport check_right_nica(const Representation& rep,
                             const std::vector<Element>& elements,
                             const std::vector<BasisPoint>& basis) {
  return nica_check(rep, elements, basis, true);
}

CheckReport check_left_nica(const Representation& rep,
                            const std::vector<Element>& elements,
                            const std::vector<BasisPoint>& basis) {
  return nica_check(rep, elements, basis, false);
}

CheckReport check_covariant_pair(const Representation& rep,
                                 const std::vector<Element>& elements,
                                 const std::vector<BpFunction>& generators,
                                 const std::vector<BasisPoint>& basis) {
  if (!rep.has_diag())
    throw std::invalid_argument(
        "covariant-pair check requires a diagonal representation");
  CheckReport report{"covariant_pair", rep_label(rep), true, {}};
  const Descriptor& d = rep.element_descriptor;
  for (const auto& x : elements) {
    const auto vx = rep.assign(x);
    for (const auto& f : generators) {
      const auto pf = rep.diag(f);
      const std::vector<std::string> label{element_to_string(x),
                                           bp_to_string(f)};
      // pi(tau_x(f)) = V_x pi(f) V_x*
      compare_pointwise(report, label, rep.diag(tau_apply(d, x, f)),
                        product_of({vx, pf, adjoint(vx)}), basis);
      // V_x*V_x commutes with pi(f)
      compare_pointwise(report, label,
                        product_of({adjoint(vx), vx, pf}),
                        product_of({pf, adjoint(vx), vx}), basis);
    }
    // V_x V_x* = pi(1_x)
    compare_pointwise(report, {element_to_string(x)},
                      product_of({vx, adjoint(vx)}),
                      rep.diag(BpFunction::indicator(d, x)), basis);
  }
  return report;
}

std::string audit_kind_name(AuditKind kind) {
  switch (kind) {
    case AuditKind::FreeRight:
      return "free_right";
    case AuditKind::FreeLeft:
      return "free_left";
    case AuditKind::NTimesBicov:
      return "ntimes_bicov";
    case AuditKind::N2Bicov:
      return "n2_bicov";
  }
  throw std::logic_error("unreachable");
}

namespace {

std::vector<Element> free_generators(const Descriptor& d) {
  std::vector<Element> gens;
  for (int i = 0; i < d.param; ++i)
    gens.push_back(Element{Element::Word{kFreeLetters[i]}});
  return gens;
}

Int element_int(const Element& x) { return std::get<Int>(x.payload); }

}  // namespace

AuditReport criterion_equivalence_audit(const Representation& rep,
                                        AuditKind kind,
                                        const std::vector<Element>& elements,
                                        const std::vector<BasisPoint>& basis) {
  AuditReport audit;
  audit.kind = audit_kind_name(kind);
  const Descriptor base = kind == AuditKind::FreeRight || kind == AuditKind::FreeLeft
          ? (rep.element_descriptor.kind == Descriptor::Kind::Opposite
                 ? rep.element_descriptor.parts[0]
                 : rep.element_descriptor)
          : rep.element_descriptor;

  switch (kind) {
    case AuditKind::FreeRight:
    case AuditKind::FreeLeft: {
      if (base.kind != Descriptor::Kind::FreeMonoid)
        throw std::invalid_argument("audit kind requires a free monoid");
      const bool right = kind == AuditKind::FreeRight;
      CheckReport crit{right ? "free_generator_initial_orthogonality"
                             : "free_generator_range_orthogonality",
                       rep_label(rep), true, {}};
      const auto gens = free_generators(base);
      for (const auto& a : gens)
        for (const auto& b : gens) {
          if (a == b) continue;
          const auto va = rep.assign(a);
          const auto vb = rep.assign(b);
          const auto prod =
              right ? product_of({adjoint(va), va, adjoint(vb), vb})
                    : product_of({va, adjoint(va), vb, adjoint(vb)});
          require_zero(crit, {element_to_string(a), element_to_string(b)},
                       prod, basis);
        }
      audit.criterion = std::move(crit);
      audit.direct.push_back(right ? check_right_nica(rep, elements, basis)
                                   : check_left_nica(rep, elements, basis));
      break;
    }
    case AuditKind::NTimesBicov: {
      if (base.kind != Descriptor::Kind::NTimes)
        throw std::invalid_argument("audit kind requires NTimes");
      CheckReport crit{"coprime_star_commutation", rep_label(rep), true, {}};
      for (const auto& m : elements)
        for (const auto& n : elements) {
          Int g;
          mpz_gcd(g.get_mpz_t(), element_int(m).get_mpz_t(),
                  element_int(n).get_mpz_t());
          if (g != 1 || is_identity(base, m) || is_identity(base, n)) continue;
          const auto vm = rep.assign(m);
          const auto vn = rep.assign(n);
          // V_m* V_n = V_n V_m* for relatively prime pairs.
          compare_pointwise(crit, {element_to_string(m), element_to_string(n)},
                            compose(adjoint(vm), vn), compose(vn, adjoint(vm)),
                            basis);
        }
      audit.criterion = std::move(crit);
      audit.direct.push_back(check_right_nica(rep, elements, basis));
      audit.direct.push_back(check_left_nica(rep, elements, basis));
      break;
    }
    case AuditKind::N2Bicov: {
      if (!(base == naturals(2)))
        throw std::invalid_argument("audit kind requires N^2");
      CheckReport crit{"star_commuting_power_partial_isometries",
                       rep_label(rep), true, {}};
      const Element g1{Element::Vec{1, 0}}, g2{Element::Vec{0, 1}};
      const auto v = rep.assign(g1);
      const auto w = rep.assign(g2);
      // *-commutation of the generator pair.
      compare_pointwise(crit, {"(1,0)", "(0,1)"}, compose(v, w),
                        compose(w, v), basis);
      compare_pointwise(crit, {"(1,0)*", "(0,1)"}, compose(adjoint(v), w),
                        compose(w, adjoint(v)), basis);
      // Every power of each generator is a partial isometry.
      std::int64_t maxpow = 1;
      for (const auto& x : elements) {
        const auto& vec = std::get<Element::Vec>(x.payload);
        maxpow = std::max({maxpow, vec[0], vec[1]});
      }
      const std::vector<std::pair<std::string, MonomialOp>> gens{
          {"(1,0)", v}, {"(0,1)", w}};
      for (const auto& [name, op] : gens) {
        MonomialOp pw = identity_op(rep.basis_descriptor, rep.carrier);
        for (std::int64_t p = 1; p <= maxpow; ++p) {
          pw = compose(pw, op);
          compare_pointwise(crit, {name + "^" + std::to_string(p)},
                            product_of({pw, adjoint(pw), pw}), pw, basis);
        }
      }
      audit.criterion = std::move(crit);
      audit.direct.push_back(check_right_nica(rep, elements, basis));
      audit.direct.push_back(check_left_nica(rep, elements, basis));
      break;
    }
  }

  audit.criterion_verdict = audit.criterion.pass;
  audit.direct_verdict = true;
  for (const auto& c : audit.direct) audit.direct_verdict &= c.pass;
  audit.agree = audit.criterion_verdict == audit.direct_verdict;
  return audit;
}

ProductRepResult product_rep(const Representation& rep_p,
                             const Representation& rep_q,
                             const std::vector<Element>& elements_p,
                             const std::vector<Element>& elements_q,
                             const std::vector<BasisPoint>& basis) {
  if (rep_p.carrier != rep_q.carrier ||
      !(rep_p.basis_descriptor == rep_q.basis_descriptor))
    throw std::invalid_argument(
        "product representation requires a shared carrier");
  ProductRepResult result;
  CheckReport pre{"product_star_commutation_precheck",
                  descriptor_to_string(rep_p.element_descriptor) + "|" +
                      descriptor_to_string(rep_q.element_descriptor),
                  true,
                  {}};
  for (const auto& p : elements_p)
    for (const auto& s : elements_q) {
      const auto vp = rep_p.assign(p);
      const auto ws = rep_q.assign(s);
      const std::vector<std::string> label{element_to_string(p),
                                           element_to_string(s)};
      compare_pointwise(pre, label, compose(vp, ws), compose(ws, vp), basis);
      compare_pointwise(pre, label, compose(adjoint(vp), ws),
                        compose(ws, adjoint(vp)), basis);
    }
  result.precheck = pre;
  if (!pre.pass) return result;

  Representation u;
  u.kind = rep_p.kind;
  u.element_descriptor =
      product({rep_p.element_descriptor, rep_q.element_descriptor});
  u.basis_descriptor = rep_p.basis_descriptor;
  u.carrier = rep_p.carrier;
  u.assign = [rep_p, rep_q](const Element& pair) {
    const auto& t = std::get<Element::Tuple>(pair.payload);
    return compose(rep_p.assign(t[0]), rep_q.assign(t[1]));
  };
  result.rep = std::move(u);
  return result;
}

}  // namespace pisolab
