#include "pisolab/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace pisolab {

const std::string kFreeLetters = "abcdfghijklmnopqrstuvwxyz";

Descriptor naturals(int k) {
  if (k < 1) throw std::invalid_argument("NaturalsK requires k >= 1");
  return {Descriptor::Kind::NaturalsK, k, {}};
}

Descriptor ntimes() { return {Descriptor::Kind::NTimes, 0, {}}; }

Descriptor free_monoid(int n) {
  if (n < 2) throw std::invalid_argument("FreeMonoid requires n >= 2");
  if (n > static_cast<int>(kFreeLetters.size()))
    throw std::invalid_argument("FreeMonoid alphabet capped at 25 letters");
  return {Descriptor::Kind::FreeMonoid, n, {}};
}

Descriptor product(std::vector<Descriptor> parts) {
  if (parts.empty()) throw std::invalid_argument("Product of no factors");
  return {Descriptor::Kind::Product, 0, std::move(parts)};
}

Descriptor opposite(Descriptor inner) {
  if (inner.kind == Descriptor::Kind::Opposite) return inner.parts[0];
  return {Descriptor::Kind::Opposite, 0, {std::move(inner)}};
}

std::string descriptor_to_string(const Descriptor& d) {
  switch (d.kind) {
    case Descriptor::Kind::NaturalsK:
      return "Nk:k=" + std::to_string(d.param);
    case Descriptor::Kind::NTimes:
      return "NTimes";
    case Descriptor::Kind::FreeMonoid:
      return "Free:n=" + std::to_string(d.param);
    case Descriptor::Kind::Product: {
      std::string s = "Prod:";
      for (size_t i = 0; i < d.parts.size(); ++i) {
        if (i) s += "|";
        s += descriptor_to_string(d.parts[i]);
      }
      return s;
    }
    case Descriptor::Kind::Opposite:
      return "Op:" + descriptor_to_string(d.parts[0]);
  }
  throw std::logic_error("unreachable");
}

int compare(const Element& a, const Element& b) {
  if (a.payload.index() != b.payload.index())
    return a.payload.index() < b.payload.index() ? -1 : 1;
  if (const auto* av = std::get_if<Element::Vec>(&a.payload)) {
    const auto& bv = std::get<Element::Vec>(b.payload);
    if (*av == bv) return 0;
    return std::lexicographical_compare(av->begin(), av->end(), bv.begin(),
                                        bv.end())
               ? -1
               : 1;
  }
  if (const auto* ai = std::get_if<Int>(&a.payload)) {
    return cmp(*ai, std::get<Int>(b.payload));
  }
  if (const auto* aw = std::get_if<Element::Word>(&a.payload)) {
    const auto& bw = std::get<Element::Word>(b.payload);
    if (aw->size() != bw.size()) return aw->size() < bw.size() ? -1 : 1;
    const int c = aw->compare(bw);
    return c < 0 ? -1 : (c == 0 ? 0 : 1);
  }
  const auto& at = std::get<Element::Tuple>(a.payload);
  const auto& bt = std::get<Element::Tuple>(b.payload);
  if (at.size() != bt.size()) return at.size() < bt.size() ? -1 : 1;
  for (size_t i = 0; i < at.size(); ++i)
    if (int c = compare(at[i], bt[i])) return c;
  return 0;
}

Element identity(const Descriptor& d) {
  switch (d.kind) {
    case Descriptor::Kind::NaturalsK:
      return {Element::Vec(static_cast<size_t>(d.param), 0)};
    case Descriptor::Kind::NTimes:
      return {Int(1)};
    case Descriptor::Kind::FreeMonoid:
      return {Element::Word{}};
    case Descriptor::Kind::Product: {
      Element::Tuple t;
      for (const auto& p : d.parts) t.push_back(identity(p));
      return {std::move(t)};
    }
    case Descriptor::Kind::Opposite:
      return identity(d.parts[0]);
  }
  throw std::logic_error("unreachable");
}

bool conforms(const Descriptor& d, const Element& x) {
  switch (d.kind) {
    case Descriptor::Kind::NaturalsK: {
      const auto* v = std::get_if<Element::Vec>(&x.payload);
      if (!v || v->size() != static_cast<size_t>(d.param)) return false;
      return std::all_of(v->begin(), v->end(), [](auto c) { return c >= 0; });
    }
    case Descriptor::Kind::NTimes: {
      const auto* i = std::get_if<Int>(&x.payload);
      return i && *i >= 1;
    }
    case Descriptor::Kind::FreeMonoid: {
      const auto* w = std::get_if<Element::Word>(&x.payload);
      if (!w) return false;
      const std::string alphabet = kFreeLetters.substr(0, d.param);
      return std::all_of(w->begin(), w->end(), [&](char c) {
        return alphabet.find(c) != std::string::npos;
      });
    }
    case Descriptor::Kind::Product: {
      const auto* t = std::get_if<Element::Tuple>(&x.payload);
      if (!t || t->size() != d.parts.size()) return false;
      for (size_t i = 0; i < t->size(); ++i)
        if (!conforms(d.parts[i], (*t)[i])) return false;
      return true;
    }
    case Descriptor::Kind::Opposite:
      return conforms(d.parts[0], x);
  }
  throw std::logic_error("unreachable");
}

bool is_identity(const Descriptor& d, const Element& x) {
  return x == identity(d);
}

namespace {

[[noreturn]] void shape_error(const Descriptor& d) {
  throw std::invalid_argument("element does not conform to semigroup " +
                              descriptor_to_string(d));
}

void require_conforms(const Descriptor& d, const Element& x) {
  if (!conforms(d, x)) shape_error(d);
}

}  // namespace

Element multiply(const Descriptor& d, const Element& x, const Element& y) {
  require_conforms(d, x);
  require_conforms(d, y);
  switch (d.kind) {
    case Descriptor::Kind::NaturalsK: {
      auto v = std::get<Element::Vec>(x.payload);
      const auto& w = std::get<Element::Vec>(y.payload);
      for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];
      return {std::move(v)};
    }
    case Descriptor::Kind::NTimes:
      return {Int(std::get<Int>(x.payload) * std::get<Int>(y.payload))};
    case Descriptor::Kind::FreeMonoid:
      return {std::get<Element::Word>(x.payload) +
              std::get<Element::Word>(y.payload)};
    case Descriptor::Kind::Product: {
      Element::Tuple t;
      const auto& xt = std::get<Element::Tuple>(x.payload);
      const auto& yt = std::get<Element::Tuple>(y.payload);
      for (size_t i = 0; i < d.parts.size(); ++i)
        t.push_back(multiply(d.parts[i], xt[i], yt[i]));
      return {std::move(t)};
    }
    case Descriptor::Kind::Opposite:
      return multiply(d.parts[0], y, x);
  }
  throw std::logic_error("unreachable");
}

std::optional<Element> ideal_quotient(const Descriptor& d, const Element& r,
                                      const Element& y, Side side) {
  require_conforms(d, r);
  require_conforms(d, y);
  switch (d.kind) {
    case Descriptor::Kind::NaturalsK: {
      // Abelian: both sides reduce to componentwise subtraction.
      auto v = std::get<Element::Vec>(r.payload);
      const auto& w = std::get<Element::Vec>(y.payload);
      for (size_t i = 0; i < v.size(); ++i) {
        v[i] -= w[i];
        if (v[i] < 0) return std::nullopt;
      }
      return Element{std::move(v)};
    }
    case Descriptor::Kind::NTimes: {
      const auto& rn = std::get<Int>(r.payload);
      const auto& yn = std::get<Int>(y.payload);
      if (rn % yn != 0) return std::nullopt;
      return Element{Int(rn / yn)};
    }
    case Descriptor::Kind::FreeMonoid: {
      const auto& rw = std::get<Element::Word>(r.payload);
      const auto& yw = std::get<Element::Word>(y.payload);
      if (yw.size() > rw.size()) return std::nullopt;
      if (side == Side::LeftIdeal) {  // r = s*y: y must be a suffix
        if (rw.compare(rw.size() - yw.size(), yw.size(), yw) != 0)
          return std::nullopt;
        return Element{rw.substr(0, rw.size() - yw.size())};
      }
      if (rw.compare(0, yw.size(), yw) != 0) return std::nullopt;
      return Element{rw.substr(yw.size())};
    }
    case Descriptor::Kind::Product: {
      Element::Tuple t;
      const auto& rt = std::get<Element::Tuple>(r.payload);
      const auto& yt = std::get<Element::Tuple>(y.payload);
      for (size_t i = 0; i < d.parts.size(); ++i) {
        auto q = ideal_quotient(d.parts[i], rt[i], yt[i], side);
        if (!q) return std::nullopt;
        t.push_back(std::move(*q));
      }
      return Element{std::move(t)};
    }
    case Descriptor::Kind::Opposite:
      // r = s*y in the opposite is r = y.s in the base, and vice versa.
      return ideal_quotient(
          d.parts[0], r, y,
          side == Side::LeftIdeal ? Side::RightIdeal : Side::LeftIdeal);
  }
  throw std::logic_error("unreachable");
}

namespace {

std::optional<Element> lcm_impl(const Descriptor& d, const Element& x,
                                const Element& y, bool left) {
  switch (d.kind) {
    case Descriptor::Kind::NaturalsK: {
      auto v = std::get<Element::Vec>(x.payload);
      const auto& w = std::get<Element::Vec>(y.payload);
      for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], w[i]);
      return Element{std::move(v)};
    }
    case Descriptor::Kind::NTimes: {
      const auto& a = std::get<Int>(x.payload);
      const auto& b = std::get<Int>(y.payload);
      Int g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      return Element{Int(a / g * b)};
    }
    case Descriptor::Kind::FreeMonoid: {
      // Left ideals are suffix sets, right ideals prefix sets: the
      // intersection is principal iff one word extends the other.
      const Side s = left ? Side::LeftIdeal : Side::RightIdeal;
      if (ideal_quotient(d, x, y, s)) return x;
      if (ideal_quotient(d, y, x, s)) return y;
      return std::nullopt;
    }
    case Descriptor::Kind::Product: {
      Element::Tuple t;
      const auto& xt = std::get<Element::Tuple>(x.payload);
      const auto& yt = std::get<Element::Tuple>(y.payload);
      for (size_t i = 0; i < d.parts.size(); ++i) {
        auto z = left ? left_lcm(d.parts[i], xt[i], yt[i])
                      : right_lcm(d.parts[i], xt[i], yt[i]);
        if (!z) return std::nullopt;
        t.push_back(std::move(*z));
      }
      return Element{std::move(t)};
    }
    case Descriptor::Kind::Opposite:
      return left ? right_lcm(d.parts[0], x, y) : left_lcm(d.parts[0], x, y);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::optional<Element> left_lcm(const Descriptor& d, const Element& x,
                                const Element& y) {
  require_conforms(d, x);
  require_conforms(d, y);
  return lcm_impl(d, x, y, true);
}

std::optional<Element> right_lcm(const Descriptor& d, const Element& x,
                                 const Element& y) {
  require_conforms(d, x);
  require_conforms(d, y);
  return lcm_impl(d, x, y, false);
}

std::optional<Element> sigma(const Descriptor& d,
                             const std::vector<Element>& f) {
  if (f.empty()) throw std::invalid_argument("sigma of an empty set");
  std::optional<Element> acc = f.front();
  for (size_t i = 1; i < f.size() && acc; ++i) acc = right_lcm(d, *acc, f[i]);
  return acc;
}

std::string element_to_string(const Element& x) {
  if (const auto* v = std::get_if<Element::Vec>(&x.payload)) {
    if (v->size() == 1) return std::to_string((*v)[0]);
    std::string s = "(";
    for (size_t i = 0; i < v->size(); ++i) {
      if (i) s += ",";
      s += std::to_string((*v)[i]);
    }
    return s + ")";
  }
  if (const auto* i = std::get_if<Int>(&x.payload)) return i->get_str();
  if (const auto* w = std::get_if<Element::Word>(&x.payload))
    return w->empty() ? "e" : *w;
  const auto& t = std::get<Element::Tuple>(x.payload);
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += "|";
    s += element_to_string(t[i]);
  }
  return s + ")";
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

namespace {

std::int64_t parse_int64(const std::string& s) {
  size_t pos = 0;
  long long v;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed integer: '" + s + "'");
  }
  if (pos != s.size())
    throw std::invalid_argument("malformed integer: '" + s + "'");
  return v;
}

}  // namespace

Element parse_element(const Descriptor& d, const std::string& text) {
  switch (d.kind) {
    case Descriptor::Kind::NaturalsK: {
      Element::Vec v;
      if (d.param == 1 && (text.empty() || text.front() != '(')) {
        v.push_back(parse_int64(text));
      } else {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
          throw std::invalid_argument("expected (..) tuple: '" + text + "'");
        for (const auto& part :
             split_top_level(text.substr(1, text.size() - 2), ','))
          v.push_back(parse_int64(part));
      }
      Element x{std::move(v)};
      if (!conforms(d, x)) shape_error(d);
      return x;
    }
    case Descriptor::Kind::NTimes: {
      Int n;
      if (text.empty() || n.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed integer: '" + text + "'");
      Element x{std::move(n)};
      if (!conforms(d, x)) shape_error(d);
      return x;
    }
    case Descriptor::Kind::FreeMonoid: {
      Element x{text == "e" ? Element::Word{} : Element::Word{text}};
      if (!conforms(d, x)) shape_error(d);
      return x;
    }
    case Descriptor::Kind::Product: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("expected (..|..) tuple: '" + text + "'");
      auto parts = split_top_level(text.substr(1, text.size() - 2), '|');
      if (parts.size() != d.parts.size())
        throw std::invalid_argument("tuple arity mismatch: '" + text + "'");
      Element::Tuple t;
      for (size_t i = 0; i < parts.size(); ++i)
        t.push_back(parse_element(d.parts[i], parts[i]));
      return Element{std::move(t)};
    }
    case Descriptor::Kind::Opposite:
      return parse_element(d.parts[0], text);
  }
  throw std::logic_error("unreachable");
}

}  // namespace pisolab
