#include "pisolab/bp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pisolab {

BpFunction BpFunction::indicator(const Descriptor& d, const Element& u) {
  if (!conforms(d, u))
    throw std::invalid_argument("indicator element does not conform");
  BpFunction f{d, {}};
  f.terms.emplace(u, make_rat(1));
  return f;
}

namespace {

void require_same(const BpFunction& f, const BpFunction& g) {
  if (!(f.descriptor == g.descriptor))
    throw std::invalid_argument("mixed semigroup descriptors");
}

void add_term(BpFunction& f, const Element& u, const Rat& c) {
  auto [it, inserted] = f.terms.emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) f.terms.erase(it);
  }
}

}  // namespace

BpFunction bp_add(const BpFunction& f, const BpFunction& g) {
  require_same(f, g);
  BpFunction out = f;
  for (const auto& [u, c] : g.terms) add_term(out, u, c);
  return out;
}

BpFunction bp_sub(const BpFunction& f, const BpFunction& g) {
  require_same(f, g);
  BpFunction out = f;
  for (const auto& [u, c] : g.terms) add_term(out, u, Rat(-c));
  return out;
}

BpFunction bp_scale(const Rat& c, const BpFunction& f) {
  BpFunction out{f.descriptor, {}};
  if (c == 0) return out;
  for (const auto& [u, v] : f.terms) out.terms.emplace(u, Rat(c * v));
  return out;
}

BpFunction bp_multiply(const BpFunction& f, const BpFunction& g) {
  require_same(f, g);
  BpFunction out{f.descriptor, {}};
  for (const auto& [u, a] : f.terms)
    for (const auto& [v, b] : g.terms)
      if (auto z = right_lcm(f.descriptor, u, v)) add_term(out, *z, Rat(a * b));
  return out;
}

BpFunction tau_apply(const Descriptor& d, const Element& x,
                     const BpFunction& f) {
  if (!(d == f.descriptor))
    throw std::invalid_argument("mixed semigroup descriptors");
  BpFunction out{d, {}};
  for (const auto& [u, c] : f.terms) add_term(out, multiply(d, x, u), c);
  return out;
}

Rat bp_evaluate(const BpFunction& f, const Element& r) {
  Rat v = make_rat(0);
  for (const auto& [u, c] : f.terms)
    if (ideal_quotient(f.descriptor, r, u, Side::RightIdeal)) v += c;
  return v;
}

std::string bp_to_string(const BpFunction& f) {
  if (f.terms.empty()) return "0";
  std::string s;
  for (const auto& [u, c] : f.terms) {
    if (!s.empty()) s += " + ";
    s += rat_to_string(c) + "*1_[" + element_to_string(u) + "]";
  }
  return s;
}

QaReport qa_decomposition(const Descriptor& d, const std::vector<Element>& f) {
  if (f.empty()) throw std::invalid_argument("qa_decomposition of empty set");
  std::set<Element, ElementLess> dedup(f.begin(), f.end());
  std::vector<Element> fs(dedup.begin(), dedup.end());
  if (fs.size() > kMaxQaSet)
    throw std::length_error("qa_decomposition set larger than 12");
  for (const auto& x : fs)
    if (!conforms(d, x))
      throw std::invalid_argument("set element does not conform");

  QaReport report{d, fs, {}};
  const Element e = identity(d);
  const size_t n = fs.size();
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    QaEntry entry;
    std::vector<Element> rest;
    for (size_t i = 0; i < n; ++i)
      (mask >> i & 1 ? entry.subset : rest).push_back(fs[i]);

    if (entry.subset.empty()) {
      BpFunction q = BpFunction::unit(d);
      for (const auto& x : rest)
        q = bp_multiply(q, bp_sub(BpFunction::unit(d),
                                  BpFunction::indicator(d, x)));
      entry.nonzero = bp_evaluate(q, e) != 0;
      entry.q = std::move(q);
    } else {
      entry.sigma_a = sigma(d, entry.subset);
      if (!entry.sigma_a) {
        entry.q = BpFunction::zero(d);
        entry.nonzero = false;
      } else {
        const auto la = BpFunction::indicator(d, *entry.sigma_a);
        BpFunction q = la;
        for (const auto& x : rest) {
          auto zx = right_lcm(d, *entry.sigma_a, x);
          q = bp_multiply(q, zx ? bp_sub(la, BpFunction::indicator(d, *zx))
                                : la);
        }
        entry.q = std::move(q);
        // Nonzero iff A is exactly the set of x in F whose right ideal
        // contains sigma(A).
        entry.nonzero = true;
        for (size_t i = 0; i < n; ++i) {
          const bool member =
              ideal_quotient(d, *entry.sigma_a, fs[i], Side::RightIdeal)
                  .has_value();
          if (member != bool(mask >> i & 1)) {
            entry.nonzero = false;
            break;
          }
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

Rat sup_norm_formula(const BpFunction& f) {
  if (f.terms.empty()) return make_rat(0);
  if (f.terms.size() > kMaxQaSet)
    throw std::length_error("support larger than 12");
  std::vector<Element> support;
  std::vector<Rat> coeff;
  for (const auto& [u, c] : f.terms) {
    support.push_back(u);
    coeff.push_back(c);
  }
  const Descriptor& d = f.descriptor;
  const Element e = identity(d);
  const size_t n = support.size();
  Rat best = make_rat(0);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    bool nonzero;
    if (mask == 0) {
      // Q_{} vanishes exactly when some support element is the identity.
      nonzero = std::none_of(support.begin(), support.end(), [&](const auto& x) {
        return x == e;
      });
    } else {
      std::vector<Element> a;
      for (size_t i = 0; i < n; ++i)
        if (mask >> i & 1) a.push_back(support[i]);
      auto sa = sigma(d, a);
      nonzero = sa.has_value();
      for (size_t i = 0; nonzero && i < n; ++i) {
        const bool member =
            ideal_quotient(d, *sa, support[i], Side::RightIdeal).has_value();
        if (member != bool(mask >> i & 1)) nonzero = false;
      }
    }
    if (!nonzero) continue;
    Rat sum = make_rat(0);
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sum += coeff[i];
    best = std::max(best, rat_abs(sum));
  }
  return best;
}

Rat sup_norm_window(const BpFunction& f, const std::vector<Element>& window) {
  Rat best = make_rat(0);
  for (const auto& r : window) best = std::max(best, rat_abs(bp_evaluate(f, r)));
  return best;
}

CheckReport check_action_left_nica(const Descriptor& d,
                                   const std::vector<Element>& elements,
                                   const std::vector<Element>& basis) {
  CheckReport report{"action_left_nica", descriptor_to_string(d), true, {}};
  for (const auto& x : elements)
    for (const auto& y : elements) {
      const auto z = right_lcm(d, x, y);
      for (const auto& r : basis) {
        const bool in_x =
            ideal_quotient(d, r, x, Side::RightIdeal).has_value();
        const bool in_y =
            ideal_quotient(d, r, y, Side::RightIdeal).has_value();
        const bool in_z =
            z && ideal_quotient(d, r, *z, Side::RightIdeal).has_value();
        if ((in_x && in_y) != in_z) {
          report.pass = false;
          if (report.witnesses.size() < kWitnessCap)
            report.witnesses.push_back(
                {{element_to_string(x), element_to_string(y)},
                 element_to_string(r),
                 std::to_string(int(in_x && in_y)),
                 std::to_string(int(in_z))});
        }
      }
    }
  return report;
}

}  // namespace pisolab
