#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pisolab {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(n, d) does not reduce; every rational entering the library goes
// through here or through arithmetic (which canonicalizes).
inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Canonical form "p/q" with q >= 1 and gcd(p,q) = 1; "0/1" for zero.
inline std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    Int num(slash == std::string::npos ? s : s.substr(0, slash));
    Int den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num);
    r /= Rat(den);
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

}  // namespace pisolab
