#include "pisolab/crossed_product.hpp"

#include <sstream>
#include <stdexcept>

namespace pisolab {

BpFunction cp_normalize(const Descriptor& d, const Element& x,
                        const BpFunction& f, const Element& y) {
  return bp_multiply(bp_multiply(f, BpFunction::indicator(d, x)),
                     BpFunction::indicator(d, y));
}

namespace {

void add_term(CpElement& u, const Element& x, const BpFunction& f,
              const Element& y) {
  const BpFunction g = cp_normalize(u.descriptor, x, f, y);
  if (g.is_zero()) return;
  const MonomialKey key{x, y};
  auto it = u.terms.find(key);
  if (it == u.terms.end()) {
    u.terms.emplace(key, g);
    return;
  }
  it->second = bp_add(it->second, g);
  if (it->second.is_zero()) u.terms.erase(it);
}

}  // namespace

CpElement cp_monomial(const Descriptor& d, const Element& x,
                      const BpFunction& f, const Element& y) {
  if (!conforms(d, x) || !conforms(d, y))
    throw std::invalid_argument("monomial index outside the semigroup");
  CpElement u = CpElement::zero(d);
  add_term(u, x, f, y);
  return u;
}

CpElement cp_diagonal(const Descriptor& d, const BpFunction& f) {
  return cp_monomial(d, identity(d), f, identity(d));
}

CpElement cp_add(const CpElement& u, const CpElement& v) {
  if (!(u.descriptor == v.descriptor))
    throw std::invalid_argument("mixed-semigroup sum");
  CpElement w = u;
  for (const auto& [key, f] : v.terms) add_term(w, key.x, f, key.y);
  return w;
}

CpElement cp_scale(const Rat& c, const CpElement& u) {
  CpElement w = CpElement::zero(u.descriptor);
  if (c == 0) return w;
  for (const auto& [key, f] : u.terms) w.terms.emplace(key, bp_scale(c, f));
  return w;
}

CpElement cp_multiply(const CpElement& u, const CpElement& v) {
  if (!(u.descriptor == v.descriptor))
    throw std::invalid_argument("mixed-semigroup product");
  const Descriptor& d = u.descriptor;
  CpElement w = CpElement::zero(d);
  for (const auto& [ku, a] : u.terms) {
    for (const auto& [kv, b] : v.terms) {
      const auto z = left_lcm(d, ku.y, kv.x);
      if (!z) continue;
      const Element r = *ideal_quotient(d, *z, ku.y, Side::LeftIdeal);
      const Element q = *ideal_quotient(d, *z, kv.x, Side::LeftIdeal);
      const BpFunction middle = bp_multiply(
          tau_apply(d, r, bp_multiply(a, BpFunction::indicator(d, ku.y))),
          tau_apply(d, q, bp_multiply(BpFunction::indicator(d, kv.x), b)));
      if (middle.is_zero()) continue;
      add_term(w, multiply(d, r, ku.x), middle, multiply(d, q, kv.y));
    }
  }
  return w;
}

CpElement cp_adjoint(const CpElement& u) {
  CpElement w = CpElement::zero(u.descriptor);
  for (const auto& [key, f] : u.terms) add_term(w, key.y, f, key.x);
  return w;
}

std::string cp_to_string(const CpElement& u) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, f] : u.terms) {
    if (!first) out << " + ";
    first = false;
    out << "V[" << element_to_string(key.x) << "]*.(" << bp_to_string(f)
        << ").V[" << element_to_string(key.y) << "]";
  }
  return out.str();
}

namespace {

void accumulate(BasisVector& into, const Rat& c, const BasisPoint& b) {
  auto it = into.find(b);
  if (it == into.end()) {
    if (c != 0) into.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second == 0) into.erase(it);
}

}  // namespace

BasisVector cp_apply(const CpElement& u, const BasisPoint& b) {
  const Descriptor& d = u.descriptor;
  BasisVector out;
  for (const auto& [key, f] : u.terms) {
    const MonomialOp op = product_of(
        {comp_coshift_op(d, key.x), comp_diag_op(f), comp_shift_op(d, key.y)});
    if (const auto hit = apply(op, b)) accumulate(out, hit->first, hit->second);
  }
  return out;
}

BasisVector cp_apply(const CpElement& u, const BasisVector& v) {
  BasisVector out;
  for (const auto& [b, c] : v)
    for (const auto& [pt, coeff] : cp_apply(u, b))
      accumulate(out, c * coeff, pt);
  return out;
}

std::string basis_vector_to_string(const BasisVector& v) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [pt, c] : v) {
    if (!first) out << " + ";
    first = false;
    out << rat_to_string(c) << "*eps[" << basis_point_to_string(pt) << "]";
  }
  return out.str();
}

}  // namespace pisolab
