#pragma once

// Exact number theory behind the finite-level Bunce-Deddens picture:
// multiplicative orders with their p-power stabilization exponent, summand
// counts and supernatural invariants, unit-group coset counts, the truncated
// add-one odometer, and the averaging action beta on the rational group
// algebra of Z/(p^k q^l) together with its Fourier-side pullback alpha and a
// floating-point DFT conjugacy probe. Everything except the probe is exact.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pisolab/rational.hpp"

namespace pisolab {

bool is_prime(const Int& n);
// Trial-division factorization, ascending primes; desk-scale inputs.
std::vector<std::pair<Int, unsigned>> factorize(Int n);
// Least t >= 1 with m^t = 1 (mod n); computed by divisor descent from the
// Carmichael function lambda(n). Requires n >= 2 and gcd(m, n) = 1.
Int mult_order(const Int& m, const Int& n);
// Exponent of p in n (n nonzero).
unsigned padic_valuation(Int n, const Int& p);

// L = max{l >= 1 : ord_{p^l}(q) = ord_p(q)}, computed as the p-adic
// valuation of q^{ord_p(q)} - 1 and cross-checked against directly computed
// orders ord_{p^l}(q) for l <= L+2 (throws if the two routes disagree).
// Requires p an odd prime and q a prime distinct from p.
unsigned stability_exponent(const Int& p, const Int& q);

struct Supernatural {
  Int finite = 1;
  std::vector<Int> infinite;  // primes carried with exponent infinity
  bool operator==(const Supernatural&) const = default;
};
// Display form "<finite>·<p>^inf" (middle dot), e.g. "3·7^inf".
std::string supernatural_to_string(const Supernatural& s);

struct BdInvariants {
  Int p, q;
  Int ord;         // ord_p(q)
  unsigned L = 1;  // stability exponent
  Int count;       // p^{L-1}(p-1)/ord
  Supernatural supernatural;  // ord * p^inf
};
// Requires p an odd prime and q a prime distinct from p.
BdInvariants bd_invariants(const Int& p, const Int& q);

// |U(Z/p^k)| / ord_{p^k}(q) = p^{k-1}(p-1)/ord_{p^k}(q); stabilizes to
// bd_invariants(p, q).count for k >= L. Requires p odd prime, gcd(q, p) = 1.
Int coset_count(const Int& p, unsigned k, const Int& q);

// A point of the depth-D truncation {0..d-1} x {0..p-1}^D of the odometer
// space, digits leftmost-first (digit 0 has radix d, the rest radix p).
struct OdometerPoint {
  std::int64_t d = 2, p = 3;
  std::vector<std::int64_t> digits;  // size D+1, digit i < radix(i)
  bool operator==(const OdometerPoint&) const = default;
};
OdometerPoint odometer_zero(std::int64_t d, std::int64_t p, int depth);
OdometerPoint odometer_point(std::int64_t d, std::int64_t p,
                             const std::vector<std::int64_t>& digits);
// Add one to digit 0 and carry rightward; overflow past the last digit
// wraps to all zeros (the truncation is the cyclic group Z/(d p^D)).
OdometerPoint odometer_step(const OdometerPoint& pt);
std::string odometer_to_string(const OdometerPoint& pt);  // "(1,2,0)"

// The finite quotient Z/M, M = p^k q^l, carrying the group algebra.
struct GaContext {
  Int p, q;
  unsigned k = 1, l = 1;
  Int modulus() const;
  bool operator==(const GaContext&) const = default;
};
// Validates primality/distinctness and positive exponents.
GaContext make_ga_context(const Int& p, const Int& q, unsigned k, unsigned l);

// Element sum c_r u_r of the rational group algebra of Z/M.
struct GaElement {
  Int modulus;
  std::map<Int, Rat> coeffs;  // residue in [0, M) -> nonzero coefficient
  bool operator==(const GaElement&) const = default;
};
GaElement ga_zero(const Int& modulus);
GaElement ga_unit(const Int& modulus, const Int& r);  // u_r
GaElement ga_add(const GaElement& a, const GaElement& b);
GaElement ga_scale(const Rat& c, const GaElement& a);
// Convolution: u_r u_s = u_{r+s}.
GaElement ga_multiply(const GaElement& a, const GaElement& b);
std::string ga_to_string(const GaElement& a);

// beta_{(m,n)}: u_r -> (1/p^m q^n) sum of u_s over solutions s of
// p^m q^n s = r (mod M); empty solution sets give 0. Exact rationals.
GaElement beta_apply(const GaContext& ctx, unsigned m, unsigned n,
                     const GaElement& elem);

// Rational function on the grid Z/p^k x Z/q^l (finite support).
struct GridFunction {
  GaContext ctx;
  std::map<std::pair<Int, Int>, Rat> values;
  bool operator==(const GridFunction&) const = default;
};
// Pullback alpha_{(m,n)}: output at (x,y) is the input at
// (x/(p^m q^n), y/(p^m q^n)), dividing canonical representatives (the p-part
// by integer division after a divisibility check, the coprime part by a
// modular inverse); points failing the divisibility check map to 0.
GridFunction alpha_apply(const GaContext& ctx, unsigned m, unsigned n,
                         const GridFunction& fn);

// The canonical division underlying alpha on one coordinate: for residue x
// mod base^exp, requires base^min(m_div, exp) to divide the canonical
// representative, then multiplies the integer quotient by unit^{-n_inv}.
// Returns false when the divisibility fails.
bool alpha_divide(const Int& x, const Int& base, unsigned exp, unsigned m_div,
                  const Int& unit, unsigned n_inv, Int& out);

struct DftProbeResult {
  unsigned m = 0, n = 0;
  double max_deviation = 0.0;  // worst |entry - expected| over the matrix
  bool support_match = false;  // DFT-side support = alpha divisibility grid
  bool canonical_on_pattern = false;  // alpha's canonical preimage hits 1/c
  bool pass = false;
};
// Conjugates the matrix of beta_{(m,n)} by the discrete Fourier transform of
// Z/M (complex floating point) and compares every entry against the exact
// pullback pattern (1/p^m q^n at j = p^m q^n j', 0 elsewhere), then checks
// the nonzero rows against alpha's divisibility grid and alpha's canonical
// quotient against the pattern. Tolerance is entrywise.
DftProbeResult dft_probe(const GaContext& ctx, unsigned m, unsigned n,
                         double tol);

}  // namespace pisolab
