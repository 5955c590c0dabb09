#include "pisolab/operators.hpp"

#include <stdexcept>

namespace pisolab {

std::string basis_point_to_string(const BasisPoint& b) {
  if (b.coords.size() == 1) return element_to_string(b.coords[0]);
  return "(" + element_to_string(b.coords[0]) + ";" +
         element_to_string(b.coords[1]) + ")";
}

bool pair_constraint_ok(const Descriptor& d, const Element& r,
                        const Element& s) {
  return ideal_quotient(d, s, r, Side::RightIdeal).has_value();
}

MonomialOp identity_op(const Descriptor& d, Carrier carrier) {
  return {d, carrier, {}};
}

MonomialOp shift_op(const Descriptor& d, const Element& y) {
  return {d, Carrier::LtwoP, {{Atom::Kind::Shift, y, BpFunction::zero(d)}}};
}

MonomialOp coshift_op(const Descriptor& d, const Element& y) {
  return {d, Carrier::LtwoP, {{Atom::Kind::CoShift, y, BpFunction::zero(d)}}};
}

MonomialOp diag_op(const BpFunction& f) {
  return {f.descriptor, Carrier::LtwoP,
          {{Atom::Kind::Diag, identity(f.descriptor), f}}};
}

MonomialOp comp_shift_op(const Descriptor& d, const Element& x) {
  return {d, Carrier::Pairs, {{Atom::Kind::CompShift, x, BpFunction::zero(d)}}};
}

MonomialOp comp_coshift_op(const Descriptor& d, const Element& x) {
  return {d, Carrier::Pairs,
          {{Atom::Kind::CompCoShift, x, BpFunction::zero(d)}}};
}

MonomialOp comp_diag_op(const BpFunction& f) {
  return {f.descriptor, Carrier::Pairs,
          {{Atom::Kind::CompDiag, identity(f.descriptor), f}}};
}

namespace {

void require_carrier(const MonomialOp& a, const BasisPoint& b) {
  const size_t want = a.carrier == Carrier::LtwoP ? 1 : 2;
  if (b.coords.size() != want)
    throw std::invalid_argument("basis point does not match operator carrier");
}

}  // namespace

ApplyResult apply(const MonomialOp& a, const BasisPoint& b) {
  require_carrier(a, b);
  const Descriptor& d = a.basis_descriptor;
  Rat coeff = make_rat(1);
  BasisPoint cur = b;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) {
    switch (it->kind) {
      case Atom::Kind::Shift:
        cur.coords[0] = multiply(d, cur.coords[0], it->y);
        break;
      case Atom::Kind::CoShift: {
        auto x = ideal_quotient(d, cur.coords[0], it->y, Side::LeftIdeal);
        if (!x) return std::nullopt;
        cur.coords[0] = std::move(*x);
        break;
      }
      case Atom::Kind::Diag: {
        const Rat v = bp_evaluate(it->f, cur.coords[0]);
        if (v == 0) return std::nullopt;
        coeff *= v;
        break;
      }
      case Atom::Kind::CompShift: {
        auto r = ideal_quotient(d, cur.coords[0], it->y, Side::LeftIdeal);
        if (!r) return std::nullopt;
        cur.coords[0] = std::move(*r);
        break;
      }
      case Atom::Kind::CompCoShift: {
        Element rx = multiply(d, cur.coords[0], it->y);
        if (!pair_constraint_ok(d, rx, cur.coords[1])) return std::nullopt;
        cur.coords[0] = std::move(rx);
        break;
      }
      case Atom::Kind::CompDiag: {
        const Rat v =
            bp_evaluate(tau_apply(d, cur.coords[0], it->f), cur.coords[1]);
        if (v == 0) return std::nullopt;
        coeff *= v;
        break;
      }
    }
  }
  return std::make_pair(std::move(coeff), std::move(cur));
}

std::string apply_result_to_string(const ApplyResult& r) {
  if (!r) return "0";
  return rat_to_string(r->first) + "*eps[" + basis_point_to_string(r->second) +
         "]";
}

MonomialOp compose(const MonomialOp& a, const MonomialOp& b) {
  if (a.carrier != b.carrier || !(a.basis_descriptor == b.basis_descriptor))
    throw std::invalid_argument("composing operators on different carriers");
  MonomialOp out = a;
  out.word.insert(out.word.end(), b.word.begin(), b.word.end());
  return out;
}

MonomialOp product_of(const std::vector<MonomialOp>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty operator product");
  MonomialOp out = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) out = compose(out, factors[i]);
  return out;
}

MonomialOp adjoint(const MonomialOp& a) {
  MonomialOp out{a.basis_descriptor, a.carrier, {}};
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) {
    Atom atom = *it;
    switch (atom.kind) {
      case Atom::Kind::Shift:
        atom.kind = Atom::Kind::CoShift;
        break;
      case Atom::Kind::CoShift:
        atom.kind = Atom::Kind::Shift;
        break;
      case Atom::Kind::CompShift:
        atom.kind = Atom::Kind::CompCoShift;
        break;
      case Atom::Kind::CompCoShift:
        atom.kind = Atom::Kind::CompShift;
        break;
      case Atom::Kind::Diag:
      case Atom::Kind::CompDiag:
        break;  // real coefficients: self-adjoint
    }
    out.word.push_back(std::move(atom));
  }
  return out;
}

EqualityReport equal_on_window(const MonomialOp& a, const MonomialOp& b,
                               const std::vector<BasisPoint>& window,
                               std::size_t witness_cap) {
  EqualityReport report;
  for (const auto& pt : window) {
    const auto lhs = apply(a, pt);
    const auto rhs = apply(b, pt);
    if (lhs != rhs) {
      report.equal = false;
      if (report.witnesses.size() < witness_cap)
        report.witnesses.push_back(
            {pt, apply_result_to_string(lhs), apply_result_to_string(rhs)});
    }
  }
  return report;
}

std::string rep_kind_name(RepKind kind) {
  switch (kind) {
    case RepKind::CanonicalW:
      return "canonical_W";
    case RepKind::CanonicalS:
      return "canonical_S";
    case RepKind::Compressed:
      return "compressed";
    case RepKind::DegenerateFree:
      return "degenerate_free";
  }
  throw std::logic_error("unreachable");
}

RepKind parse_rep_kind(const std::string& name) {
  if (name == "canonical_W") return RepKind::CanonicalW;
  if (name == "canonical_S") return RepKind::CanonicalS;
  if (name == "compressed") return RepKind::Compressed;
  if (name == "degenerate_free") return RepKind::DegenerateFree;
  throw std::invalid_argument("unknown representation kind: '" + name + "'");
}

Representation build_representation(const Descriptor& d, RepKind kind) {
  Representation rep;
  rep.kind = kind;
  switch (kind) {
    case RepKind::CanonicalW:
      rep.element_descriptor = d;
      rep.basis_descriptor = d;
      rep.carrier = Carrier::LtwoP;
      rep.assign = [d](const Element& x) { return coshift_op(d, x); };
      return rep;
    case RepKind::CanonicalS:
      // S_x S_y = S_{yx}: a homomorphism of the opposite semigroup.
      rep.element_descriptor = opposite(d);
      rep.basis_descriptor = d;
      rep.carrier = Carrier::LtwoP;
      rep.assign = [d](const Element& x) { return shift_op(d, x); };
      return rep;
    case RepKind::Compressed:
      rep.element_descriptor = d;
      rep.basis_descriptor = d;
      rep.carrier = Carrier::Pairs;
      rep.assign = [d](const Element& x) { return comp_shift_op(d, x); };
      rep.diag = [](const BpFunction& f) { return comp_diag_op(f); };
      return rep;
    case RepKind::DegenerateFree: {
      if (d.kind != Descriptor::Kind::FreeMonoid)
        throw std::invalid_argument(
            "degenerate_free requires a free monoid descriptor");
      const Descriptor line = naturals(1);
      rep.element_descriptor = d;
      rep.basis_descriptor = line;
      rep.carrier = Carrier::LtwoP;
      rep.assign = [line](const Element& w) {
        const auto& word = std::get<Element::Word>(w.payload);
        return coshift_op(
            line, Element{Element::Vec{static_cast<std::int64_t>(word.size())}});
      };
      return rep;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<BasisPoint> basis_points_l2(const std::vector<Element>& window) {
  std::vector<BasisPoint> pts;
  pts.reserve(window.size());
  for (const auto& r : window) pts.push_back({{r}});
  return pts;
}

std::vector<BasisPoint> basis_points_pairs(const Descriptor& d,
                                           const std::vector<Element>& rs,
                                           const std::vector<Element>& ss) {
  std::vector<BasisPoint> pts;
  for (const auto& r : rs)
    for (const auto& s : ss)
      if (pair_constraint_ok(d, r, s)) pts.push_back({{r, s}});
  return pts;
}

std::vector<BasisPoint> carrier_points(const Representation& rep,
                                       const std::vector<Element>& window) {
  if (rep.carrier == Carrier::LtwoP) return basis_points_l2(window);
  return basis_points_pairs(rep.basis_descriptor, window, window);
}

}  // namespace pisolab
