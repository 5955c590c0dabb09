#include "pisolab/window.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pisolab {

Descriptor WindowSpec::descriptor() const {
  switch (kind) {
    case Kind::Nk:
      return naturals(k);
    case Kind::Free:
      return free_monoid(n);
    case Kind::NTimes:
      return ntimes();
    case Kind::Prod: {
      std::vector<Descriptor> ds;
      for (const auto& p : parts) ds.push_back(p.descriptor());
      return product(std::move(ds));
    }
    case Kind::Op:
      return opposite(parts[0].descriptor());
  }
  throw std::logic_error("unreachable");
}

WindowSpec WindowSpec::scaled(std::int64_t factor) const {
  WindowSpec s = *this;
  s.bound = bound * factor;
  for (auto& p : s.parts) p = p.scaled(factor);
  return s;
}

std::string WindowSpec::to_string() const {
  switch (kind) {
    case Kind::Nk:
      return "Nk:k=" + std::to_string(k) + ",max=" + std::to_string(bound);
    case Kind::Free:
      return "Free:n=" + std::to_string(n) + ",len=" + std::to_string(bound);
    case Kind::NTimes: {
      std::string s = "NTimes:primes=";
      for (size_t i = 0; i < primes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(primes[i]);
      }
      return s + ";maxexp=" + std::to_string(bound);
    }
    case Kind::Prod: {
      std::string s = "Prod:";
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "|";
        s += parts[i].to_string();
      }
      return s;
    }
    case Kind::Op:
      return "Op:" + parts[0].to_string();
  }
  throw std::logic_error("unreachable");
}

namespace {

[[noreturn]] void malformed(const std::string& text) {
  throw std::invalid_argument("malformed window spec: '" + text + "'");
}

bool is_small_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::int64_t parse_bound(const std::string& text, const std::string& key,
                         const std::string& whole) {
  if (text.rfind(key, 0) != 0) malformed(whole);
  const std::string v = text.substr(key.size());
  size_t pos = 0;
  long long b;
  try {
    b = std::stoll(v, &pos);
  } catch (const std::exception&) {
    malformed(whole);
  }
  if (pos != v.size() || b < 0) malformed(whole);
  return b;
}

}  // namespace

WindowSpec parse_window_spec(const std::string& text) {
  WindowSpec spec;
  if (text.rfind("Nk:", 0) == 0) {
    auto fields = split_top_level(text.substr(3), ',');
    if (fields.size() != 2) malformed(text);
    spec.kind = WindowSpec::Kind::Nk;
    spec.k = static_cast<int>(parse_bound(fields[0], "k=", text));
    spec.bound = parse_bound(fields[1], "max=", text);
    if (spec.k < 1) malformed(text);
    return spec;
  }
  if (text.rfind("Free:", 0) == 0) {
    auto fields = split_top_level(text.substr(5), ',');
    if (fields.size() != 2) malformed(text);
    spec.kind = WindowSpec::Kind::Free;
    spec.n = static_cast<int>(parse_bound(fields[0], "n=", text));
    spec.bound = parse_bound(fields[1], "len=", text);
    if (spec.n < 2) malformed(text);
    return spec;
  }
  if (text.rfind("NTimes:", 0) == 0) {
    auto fields = split_top_level(text.substr(7), ';');
    if (fields.size() != 2) malformed(text);
    if (fields[0].rfind("primes=", 0) != 0) malformed(text);
    spec.kind = WindowSpec::Kind::NTimes;
    for (const auto& p : split_top_level(fields[0].substr(7), ',')) {
      const auto v = parse_bound("x=" + p, "x=", text);
      if (!is_small_prime(v)) malformed(text);
      if (std::find(spec.primes.begin(), spec.primes.end(), v) !=
          spec.primes.end())
        malformed(text);
      spec.primes.push_back(v);
    }
    if (spec.primes.empty()) malformed(text);
    spec.bound = parse_bound(fields[1], "maxexp=", text);
    return spec;
  }
  if (text.rfind("Prod:", 0) == 0) {
    spec.kind = WindowSpec::Kind::Prod;
    for (const auto& part : split_top_level(text.substr(5), '|'))
      spec.parts.push_back(parse_window_spec(part));
    if (spec.parts.size() < 2) malformed(text);
    return spec;
  }
  if (text.rfind("Op:", 0) == 0) {
    spec.kind = WindowSpec::Kind::Op;
    spec.parts.push_back(parse_window_spec(text.substr(3)));
    return spec;
  }
  malformed(text);
}

namespace {

void enumerate_box(int k, std::int64_t max, Element::Vec& cur,
                   std::vector<Element>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(Element{cur});
    return;
  }
  for (std::int64_t v = 0; v <= max; ++v) {
    cur.push_back(v);
    enumerate_box(k, max, cur, out);
    cur.pop_back();
  }
}

void enumerate_exponents(const std::vector<std::int64_t>& primes,
                         std::int64_t maxexp, size_t i, Int acc,
                         std::vector<Int>& out) {
  if (i == primes.size()) {
    out.push_back(acc);
    return;
  }
  for (std::int64_t e = 0; e <= maxexp; ++e) {
    enumerate_exponents(primes, maxexp, i + 1, acc, out);
    acc *= primes[i];
  }
}

}  // namespace

std::vector<Element> enumerate_window(const WindowSpec& spec) {
  std::vector<Element> out;
  switch (spec.kind) {
    case WindowSpec::Kind::Nk: {
      Element::Vec cur;
      enumerate_box(spec.k, spec.bound, cur, out);
      return out;
    }
    case WindowSpec::Kind::Free: {
      // Length-lex: breadth-first over the alphabet.
      const std::string alphabet = kFreeLetters.substr(0, spec.n);
      std::vector<std::string> layer{""};
      out.push_back(Element{Element::Word{}});
      for (std::int64_t len = 1; len <= spec.bound; ++len) {
        std::vector<std::string> next;
        for (const auto& w : layer)
          for (char c : alphabet) {
            next.push_back(w + c);
            out.push_back(Element{next.back()});
          }
        layer = std::move(next);
      }
      return out;
    }
    case WindowSpec::Kind::NTimes: {
      std::vector<Int> vals;
      enumerate_exponents(spec.primes, spec.bound, 0, Int(1), vals);
      std::sort(vals.begin(), vals.end());
      for (auto& v : vals) out.push_back(Element{std::move(v)});
      return out;
    }
    case WindowSpec::Kind::Prod: {
      std::vector<std::vector<Element>> factors;
      for (const auto& p : spec.parts) factors.push_back(enumerate_window(p));
      out.push_back(Element{Element::Tuple{}});
      for (const auto& f : factors) {
        std::vector<Element> next;
        for (const auto& partial : out)
          for (const auto& x : f) {
            auto t = std::get<Element::Tuple>(partial.payload);
            t.push_back(x);
            next.push_back(Element{std::move(t)});
          }
        out = std::move(next);
      }
      return out;
    }
    case WindowSpec::Kind::Op:
      return enumerate_window(spec.parts[0]);
  }
  throw std::logic_error("unreachable");
}

std::vector<Element> basis_window(const WindowSpec& spec) {
  const Descriptor d = spec.descriptor();
  auto big = enumerate_window(spec.scaled(2));
  const size_t base = big.size();
  const auto small = enumerate_window(spec);
  std::set<Element, ElementLess> seen(big.begin(), big.end());
  for (const auto& x : small)
    for (const auto& y : small) {
      for (auto z : {left_lcm(d, x, y), right_lcm(d, x, y)})
        if (z && seen.insert(*z).second) big.push_back(std::move(*z));
    }
  // Keep the scaled window's enumeration order, then any extra LCM points in
  // canonical order at the end.
  std::sort(big.begin() + static_cast<std::ptrdiff_t>(base), big.end(),
            ElementLess{});
  return big;
}

}  // namespace pisolab
