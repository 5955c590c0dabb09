#include "pisolab/padic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pisolab {

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n <= 0) throw std::domain_error("factorize requires a positive integer");
  std::vector<std::pair<Int, unsigned>> out;
  auto divide_out = [&](const Int& d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  };
  divide_out(2);
  for (Int d = 3; d * d <= n; d += 2) divide_out(d);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

Int powm(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

Int pow_ui(const Int& base, unsigned exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int invert(const Int& a, const Int& mod) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("not invertible in the given modulus");
  return r;
}

// Carmichael function of n from its factorization.
Int carmichael(const Int& n) {
  Int lam = 1;
  for (const auto& [p, e] : factorize(n)) {
    Int piece;
    if (p == 2)
      piece = e <= 1 ? Int(1) : (e == 2 ? Int(2) : pow_ui(2, e - 2));
    else
      piece = pow_ui(p, e - 1) * (p - 1);
    mpz_lcm(lam.get_mpz_t(), lam.get_mpz_t(), piece.get_mpz_t());
  }
  return lam;
}

}  // namespace

Int mult_order(const Int& m, const Int& n) {
  if (n < 2) throw std::domain_error("mult_order requires modulus >= 2");
  Int g;
  mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw std::domain_error("mult_order requires coprime arguments");
  Int t = carmichael(n);
  for (const auto& [p, e] : factorize(t)) {
    (void)e;
    while (t % p == 0 && powm(m, t / p, n) == 1) t /= p;
  }
  return t;
}

unsigned padic_valuation(Int n, const Int& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  if (n < 0) n = -n;
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

unsigned stability_exponent(const Int& p, const Int& q) {
  if (!is_prime(p) || p == 2)
    throw std::domain_error("stability_exponent requires an odd prime p");
  if (!is_prime(q) || q == p)
    throw std::domain_error("stability_exponent requires a prime q != p");
  const Int ord1 = mult_order(q, p);
  Int lifted;
  mpz_pow_ui(lifted.get_mpz_t(), q.get_mpz_t(), ord1.get_ui());
  const unsigned L = padic_valuation(lifted - 1, p);
  // The valuation route must reproduce the directly computed orders: equal
  // to ord_p(q) through level L, multiplied by p per level beyond it.
  for (unsigned l = 1; l <= L + 2; ++l) {
    const Int direct = mult_order(q, pow_ui(p, l));
    const Int predicted = l <= L ? ord1 : ord1 * pow_ui(p, l - L);
    if (direct != predicted)
      throw std::runtime_error(
          "stability exponent cross-check failed at level " +
          std::to_string(l));
  }
  return L;
}

std::string supernatural_to_string(const Supernatural& s) {
  std::string out = s.finite.get_str();
  for (const auto& p : s.infinite) out += "·" + p.get_str() + "^inf";
  return out;
}

BdInvariants bd_invariants(const Int& p, const Int& q) {
  BdInvariants inv;
  inv.p = p;
  inv.q = q;
  inv.L = stability_exponent(p, q);  // also validates p, q
  inv.ord = mult_order(q, p);
  inv.count = pow_ui(p, inv.L - 1) * (p - 1) / inv.ord;
  inv.supernatural = Supernatural{inv.ord, {p}};
  return inv;
}

Int coset_count(const Int& p, unsigned k, const Int& q) {
  if (!is_prime(p) || p == 2)
    throw std::domain_error("coset_count requires an odd prime p");
  if (k < 1) throw std::domain_error("coset_count requires k >= 1");
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (g != 1) throw std::domain_error("coset_count requires gcd(q, p) = 1");
  return pow_ui(p, k - 1) * (p - 1) / mult_order(q, pow_ui(p, k));
}

OdometerPoint odometer_zero(std::int64_t d, std::int64_t p, int depth) {
  if (d < 2 || p < 2 || depth < 0)
    throw std::domain_error("odometer radices must be >= 2, depth >= 0");
  OdometerPoint pt;
  pt.d = d;
  pt.p = p;
  pt.digits.assign(static_cast<size_t>(depth) + 1, 0);
  return pt;
}

OdometerPoint odometer_point(std::int64_t d, std::int64_t p,
                             const std::vector<std::int64_t>& digits) {
  if (digits.empty()) throw std::domain_error("odometer point needs digits");
  OdometerPoint pt = odometer_zero(d, p, static_cast<int>(digits.size()) - 1);
  for (size_t i = 0; i < digits.size(); ++i) {
    const std::int64_t radix = i == 0 ? d : p;
    if (digits[i] < 0 || digits[i] >= radix)
      throw std::domain_error("odometer digit outside its radix");
    pt.digits[i] = digits[i];
  }
  return pt;
}

OdometerPoint odometer_step(const OdometerPoint& pt) {
  OdometerPoint out = pt;
  for (size_t i = 0; i < out.digits.size(); ++i) {
    const std::int64_t radix = i == 0 ? out.d : out.p;
    if (++out.digits[i] < radix) return out;
    out.digits[i] = 0;  // carry right; falling off the end wraps to zero
  }
  return out;
}

std::string odometer_to_string(const OdometerPoint& pt) {
  std::string out = "(";
  for (size_t i = 0; i < pt.digits.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pt.digits[i]);
  }
  return out + ")";
}

Int GaContext::modulus() const {
  Int m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), k);
  Int n;
  mpz_pow_ui(n.get_mpz_t(), q.get_mpz_t(), l);
  return m * n;
}

GaContext make_ga_context(const Int& p, const Int& q, unsigned k, unsigned l) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw std::domain_error("context requires distinct primes");
  if (k < 1 || l < 1) throw std::domain_error("context requires k, l >= 1");
  return GaContext{p, q, k, l};
}

GaElement ga_zero(const Int& modulus) { return GaElement{modulus, {}}; }

namespace {

Int mod_reduce(const Int& r, const Int& m) {
  Int out = r % m;
  if (out < 0) out += m;
  return out;
}

void ga_accumulate(GaElement& a, const Int& r, const Rat& c) {
  if (c == 0) return;
  const Int key = mod_reduce(r, a.modulus);
  auto it = a.coeffs.find(key);
  if (it == a.coeffs.end()) {
    a.coeffs.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) a.coeffs.erase(it);
}

}  // namespace

GaElement ga_unit(const Int& modulus, const Int& r) {
  GaElement u = ga_zero(modulus);
  ga_accumulate(u, r, make_rat(1));
  return u;
}

GaElement ga_add(const GaElement& a, const GaElement& b) {
  if (a.modulus != b.modulus)
    throw std::invalid_argument("mixed-modulus group algebra sum");
  GaElement out = a;
  for (const auto& [r, c] : b.coeffs) ga_accumulate(out, r, c);
  return out;
}

GaElement ga_scale(const Rat& c, const GaElement& a) {
  GaElement out = ga_zero(a.modulus);
  if (c == 0) return out;
  for (const auto& [r, v] : a.coeffs) out.coeffs.emplace(r, c * v);
  return out;
}

GaElement ga_multiply(const GaElement& a, const GaElement& b) {
  if (a.modulus != b.modulus)
    throw std::invalid_argument("mixed-modulus group algebra product");
  GaElement out = ga_zero(a.modulus);
  for (const auto& [r, cr] : a.coeffs)
    for (const auto& [s, cs] : b.coeffs) ga_accumulate(out, r + s, cr * cs);
  return out;
}

std::string ga_to_string(const GaElement& a) {
  if (a.coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [r, c] : a.coeffs) {
    if (!first) out << " + ";
    first = false;
    out << rat_to_string(c) << "*u[" << r.get_str() << "]";
  }
  return out.str();
}

GaElement beta_apply(const GaContext& ctx, unsigned m, unsigned n,
                     const GaElement& elem) {
  const Int M = ctx.modulus();
  if (elem.modulus != M)
    throw std::invalid_argument("element modulus does not match context");
  const Int c = pow_ui(ctx.p, m) * pow_ui(ctx.q, n);
  const Rat scale = Rat(1) / Rat(c);
  Int g;
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
  const Int step = M / g;
  const Int cg = c / g;  // invertible mod M/g
  GaElement out = ga_zero(M);
  for (const auto& [r, coeff] : elem.coeffs) {
    if (r % g != 0) continue;  // p^m q^n s = r (mod M) unsolvable
    const Int base =
        step == 1 ? Int(0) : mod_reduce((r / g) * invert(cg, step), step);
    for (Int t = 0; t < g; ++t)
      ga_accumulate(out, base + t * step, coeff * scale);
  }
  return out;
}

bool alpha_divide(const Int& x, const Int& base, unsigned exp, unsigned m_div,
                  const Int& unit, unsigned n_inv, Int& out) {
  const Int mod = pow_ui(base, exp);
  const Int rep = mod_reduce(x, mod);
  const Int divisor = pow_ui(base, std::min(m_div, exp));
  if (rep % divisor != 0) return false;
  Int quotient = rep / divisor;
  if (n_inv > 0)
    quotient = quotient * powm(invert(unit, mod), Int(n_inv), mod);
  out = mod_reduce(quotient, mod);
  return true;
}

GridFunction alpha_apply(const GaContext& ctx, unsigned m, unsigned n,
                         const GridFunction& fn) {
  const Int pk = pow_ui(ctx.p, ctx.k);
  const Int ql = pow_ui(ctx.q, ctx.l);
  GridFunction out;
  out.ctx = ctx;
  for (Int x = 0; x < pk; ++x) {
    Int x0;
    if (!alpha_divide(x, ctx.p, ctx.k, m, ctx.q, n, x0)) continue;
    for (Int y = 0; y < ql; ++y) {
      Int y0;
      if (!alpha_divide(y, ctx.q, ctx.l, n, ctx.p, m, y0)) continue;
      const auto it = fn.values.find({x0, y0});
      if (it != fn.values.end() && it->second != 0)
        out.values.emplace(std::make_pair(x, y), it->second);
    }
  }
  return out;
}

DftProbeResult dft_probe(const GaContext& ctx, unsigned m, unsigned n,
                         double tol) {
  using C = std::complex<double>;
  const Int Mz = ctx.modulus();
  const long M = Mz.get_si();
  const Int cz = pow_ui(ctx.p, m) * pow_ui(ctx.q, n);
  const double cval = cz.get_d();

  // Matrix of beta in the u basis: column r lists beta(u_r).
  std::vector<std::vector<double>> B(M, std::vector<double>(M, 0.0));
  for (long r = 0; r < M; ++r) {
    const GaElement col = beta_apply(ctx, m, n, ga_unit(Mz, r));
    for (const auto& [s, coeff] : col.coeffs)
      B[s.get_si()][r] = coeff.get_d();
  }

  // Conjugate by the DFT: Bhat = F B F^{-1}, F[j][s] = omega^{js}.
  const double two_pi = 8.0 * std::atan(1.0);
  auto omega = [&](long e) {
    const double t = two_pi * static_cast<double>(e % M) / M;
    return C(std::cos(t), std::sin(t));
  };
  std::vector<std::vector<C>> FB(M, std::vector<C>(M));
  for (long j = 0; j < M; ++j)
    for (long r = 0; r < M; ++r) {
      C acc(0, 0);
      for (long s = 0; s < M; ++s)
        if (B[s][r] != 0.0) acc += omega(j * s) * B[s][r];
      FB[j][r] = acc;
    }
  std::vector<std::vector<C>> Bhat(M, std::vector<C>(M));
  for (long j = 0; j < M; ++j)
    for (long jp = 0; jp < M; ++jp) {
      C acc(0, 0);
      for (long r = 0; r < M; ++r)
        acc += FB[j][r] * std::conj(omega(r * jp));
      Bhat[j][jp] = acc / static_cast<double>(M);
    }

  DftProbeResult result;
  result.m = m;
  result.n = n;

  // Expected pullback pattern: 1/c at j = c j' (mod M), 0 elsewhere.
  const long cmod = static_cast<long>(mod_reduce(cz, Mz).get_si());
  for (long j = 0; j < M; ++j)
    for (long jp = 0; jp < M; ++jp) {
      const bool on = j == (cmod * jp) % M;
      const double expect = on ? 1.0 / cval : 0.0;
      result.max_deviation =
          std::max(result.max_deviation, std::abs(Bhat[j][jp] - expect));
    }

  // Rows carrying mass must be exactly the alpha divisibility grid
  // (CRT coordinates of j divisible by p^min(m,k), q^min(n,l)).
  const Int pk = pow_ui(ctx.p, ctx.k);
  const Int ql = pow_ui(ctx.q, ctx.l);
  const Int pdiv = pow_ui(ctx.p, std::min(m, ctx.k));
  const Int qdiv = pow_ui(ctx.q, std::min(n, ctx.l));
  result.support_match = true;
  result.canonical_on_pattern = true;
  for (long j = 0; j < M; ++j) {
    double row_mass = 0.0;
    for (long jp = 0; jp < M; ++jp)
      row_mass = std::max(row_mass, std::abs(Bhat[j][jp]));
    const bool divisible =
        mod_reduce(Int(j), pk) % pdiv == 0 && mod_reduce(Int(j), ql) % qdiv == 0;
    if (divisible != (row_mass > tol)) result.support_match = false;
    if (!divisible) continue;
    // Alpha's canonical quotient of j (per CRT coordinate) must land on a
    // pattern entry of full weight 1/c.
    Int a0, b0;
    if (!alpha_divide(Int(j), ctx.p, ctx.k, m, ctx.q, n, a0) ||
        !alpha_divide(Int(j), ctx.q, ctx.l, n, ctx.p, m, b0)) {
      result.canonical_on_pattern = false;
      continue;
    }
    // CRT-combine (a0 mod p^k, b0 mod q^l) into j0 mod M.
    const Int j0 = mod_reduce(
        a0 * ql * invert(ql, pk) + b0 * pk * invert(pk, ql), Mz);
    if (std::abs(Bhat[j][j0.get_si()] - 1.0 / cval) > tol)
      result.canonical_on_pattern = false;
  }

  result.pass = result.max_deviation <= tol && result.support_match &&
                result.canonical_on_pattern;
  return result;
}

}  // namespace pisolab
