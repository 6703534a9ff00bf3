#include "sparsefac/univariate_q.hpp"

#include <algorithm>
#include <functional>

#include "sparsefac/errors.hpp"
#include "sparsefac/upoly_zp.hpp"
#include "sparsefac/zp.hpp"

namespace sparsefac {

namespace zpoly {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& a) {
  if (a.empty()) return a;
  Integer c = content(a);
  if (a.back() < 0) c = -c;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

namespace {
// Pseudo-remainder of a by b.
ZPoly prem(ZPoly a, const ZPoly& b) {
  int db = deg(b);
  const Integer& lb = b.back();
  while (deg(a) >= db) {
    Integer la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[j + shift] -= la * b[j];
    trim(a);
  }
  return a;
}
}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  ZPoly r0 = primitive_part(a), r1 = primitive_part(b);
  if (deg(r0) < deg(r1)) std::swap(r0, r1);
  while (!r1.empty()) {
    ZPoly r = prem(r0, r1);
    r0 = std::move(r1);
    r1 = r.empty() ? r : primitive_part(r);
  }
  return primitive_part(r0);
}

std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DivisionByZero("integer polynomial division by zero");
  if (a.empty()) return ZPoly{};
  if (deg(a) < deg(b)) return std::nullopt;
  ZPoly r = a;
  int db = deg(b);
  ZPoly q(a.size() - b.size() + 1, 0);
  for (int k = deg(a); k >= db; --k) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  for (int j = 0; j < db; ++j)
    if (r[j] != 0) return std::nullopt;
  trim(q);
  return q;
}

Integer norm2_ceil(const ZPoly& a) {
  Integer s = 0;
  for (const auto& c : a) s += c * c;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

}  // namespace zpoly

std::pair<Rational, ZPoly> to_primitive(const QPoly& f) {
  Integer den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) z[i] = f[i].get_num() * (den / f[i].get_den());
  zpoly::trim(z);
  if (z.empty()) return {Rational(0), z};
  Integer c = zpoly::content(z);
  if (z.back() < 0) c = -c;
  ZPoly p = zpoly::primitive_part(z);
  Rational scalar(c, den);
  scalar.canonicalize();
  return {scalar, p};
}

QPoly to_monic_q(const ZPoly& f) {
  QPoly q(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    q[i] = Rational(f[i], f.back());
    q[i].canonicalize();
  }
  return q;
}

std::vector<std::pair<ZPoly, unsigned>> squarefree_z(const ZPoly& f) {
  std::vector<std::pair<ZPoly, unsigned>> out;
  if (zpoly::deg(f) <= 0) return out;
  ZPoly g = zpoly::gcd(f, zpoly::derivative(f));
  ZPoly h = zpoly::primitive_part(*zpoly::exact_div(f, g));
  for (unsigned i = 1; zpoly::deg(h) > 0; ++i) {
    ZPoly h2 = zpoly::gcd(g, h);
    ZPoly part = zpoly::primitive_part(*zpoly::exact_div(h, h2));
    if (zpoly::deg(part) > 0) out.emplace_back(part, i);
    if (zpoly::deg(h2) > 0) g = zpoly::primitive_part(*zpoly::exact_div(g, h2));
    h = h2;
  }
  return out;
}

namespace {

using upz::UPoly;

UPoly reduce_mod(const ZPoly& f, const Zp& F) {
  UPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = F.reduce(f[i]);
  upz::trim(r);
  return r;
}

void mod_inplace(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  zpoly::trim(a);
}

ZPoly mulmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = zpoly::mul(a, b);
  mod_inplace(r, m);
  return r;
}

ZPoly addmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  mod_inplace(r, m);
  return r;
}

ZPoly submod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = zpoly::sub(a, b);
  mod_inplace(r, m);
  return r;
}

// Division by a monic b modulo m.
std::pair<ZPoly, ZPoly> divrem_monic(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (zpoly::deg(a) < zpoly::deg(b)) return {ZPoly{}, a};
  ZPoly r = a;
  int db = zpoly::deg(b);
  ZPoly q(a.size() - b.size() + 1, 0);
  for (int k = zpoly::deg(r); k >= db; --k) {
    Integer c = r[k];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  r.resize(db);
  mod_inplace(r, m);
  mod_inplace(q, m);
  return {q, r};
}

struct LiftState {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m2 = m^2.
void hensel_step(const ZPoly& f, LiftState& st, const Integer& m2) {
  ZPoly e = submod(f, mulmod(st.g, st.h, m2), m2);
  auto [q, r] = divrem_monic(mulmod(st.s, e, m2), st.h, m2);
  ZPoly gs = addmod(st.g, addmod(mulmod(st.t, e, m2), mulmod(q, st.g, m2), m2), m2);
  ZPoly hs = addmod(st.h, r, m2);
  ZPoly b = submod(addmod(mulmod(st.s, gs, m2), mulmod(st.t, hs, m2), m2), ZPoly{Integer(1)}, m2);
  auto [c, d] = divrem_monic(mulmod(st.s, b, m2), hs, m2);
  ZPoly ss = submod(st.s, d, m2);
  ZPoly ts = submod(submod(st.t, mulmod(st.t, b, m2), m2), mulmod(c, gs, m2), m2);
  st = {gs, hs, ss, ts};
}

ZPoly lift_poly(const UPoly& u) {
  ZPoly z(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) z[i] = static_cast<unsigned long>(u[i]);
  return z;
}

// Lifts monic factors (mod p) of f (monic mod p^k) to modulus p^k.
void multifactor_lift(const ZPoly& f, const std::vector<UPoly>& mods, std::size_t lo, std::size_t hi,
                      const Zp& F, unsigned k, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out[lo] = f;
    return;
  }
  std::size_t mid = (lo + hi) / 2;
  UPoly g{1}, h{1};
  for (std::size_t i = lo; i < mid; ++i) g = upz::mul(g, mods[i], F);
  for (std::size_t i = mid; i < hi; ++i) h = upz::mul(h, mods[i], F);
  upz::Xgcd x = upz::xgcd(g, h, F);
  LiftState st{lift_poly(g), lift_poly(h), lift_poly(x.s), lift_poly(x.t)};
  Integer p = static_cast<unsigned long>(F.q);
  unsigned prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    Integer m2 = integer_pow(p, prec);
    ZPoly fm = f;
    mod_inplace(fm, m2);
    hensel_step(fm, st, m2);
  }
  multifactor_lift(st.g, mods, lo, mid, F, k, out);
  multifactor_lift(st.h, mods, mid, hi, F, k, out);
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  zpoly::trim(a);
  return a;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f_in) {
  ZPoly f = zpoly::primitive_part(f_in);
  int n = zpoly::deg(f);
  if (n <= 0) throw InternalError("zassenhaus on a constant");
  if (n == 1) return {f};
  // choose among the first few good primes the one with fewest modular factors
  std::uint32_t best_p = 0;
  std::vector<UPoly> best;
  int good_seen = 0;
  for (std::uint32_t p = 3; good_seen < 5 && p < 20000; p += 2) {
    if (!is_prime_u64(p)) continue;
    Zp F{p};
    if (F.reduce(f.back()) == 0) continue;
    if (static_cast<std::uint32_t>(n) >= p) continue;
    UPoly fp = upz::monic(reduce_mod(f, F), F);
    if (!upz::is_squarefree(fp, F)) continue;
    ++good_seen;
    std::vector<UPoly> fac = upz::berlekamp(fp, F);
    if (best.empty() || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best.empty()) throw InternalError("no good prime for univariate factorization");
  if (best.size() == 1) return {f};
  std::sort(best.begin(), best.end());
  Zp F{best_p};
  Integer lc = f.back();
  Integer bound = 2 * abs(lc) * zpoly::norm2_ceil(f) * integer_pow(Integer(2), static_cast<unsigned>(n));
  unsigned k = 1;
  Integer M = best_p;
  while (M <= bound) {
    M *= best_p;
    ++k;
  }
  // monic version of f mod M
  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
  ZPoly fm = f;
  for (auto& c : fm) c *= lc_inv;
  mod_inplace(fm, M);
  std::vector<ZPoly> lifted(best.size());
  multifactor_lift(fm, best, 0, best.size(), F, k, lifted);

  std::vector<ZPoly> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly cur = f;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly prod{cur.back()};
      for (auto i : idx) prod = mulmod(prod, lifted[remaining[i]], M);
      ZPoly cand = zpoly::primitive_part(symmetric(prod, M));
      if (cand.empty()) continue;
      if (cur[0] != 0 && cand[0] != 0 && !mpz_divisible_p(cur[0].get_mpz_t(), cand[0].get_mpz_t())) continue;
      auto q = zpoly::exact_div(cur, cand);
      if (!q) continue;
      result.push_back(cand);
      cur = zpoly::primitive_part(*q);
      std::vector<std::size_t> rest;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (pos < s && idx[pos] == i) {
          ++pos;
          continue;
        }
        rest.push_back(remaining[i]);
      }
      remaining = std::move(rest);
      found = true;
      break;
    } while (next_subset(idx, remaining.size()));
    if (!found) ++s;
  }
  if (zpoly::deg(cur) > 0) result.push_back(cur);
  return result;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

UnivariateFactorization factor_univariate(const QPoly& f_in) {
  QPoly f = f_in;
  while (!f.empty() && f.back() == 0) f.pop_back();
  if (f.empty()) throw ZeroPolynomialError("cannot factor the zero polynomial");
  UnivariateFactorization out;
  out.scalar = f.back();
  if (f.size() == 1) return out;
  auto [scalar, prim] = to_primitive(f);
  (void)scalar;
  for (const auto& [part, e] : squarefree_z(prim)) {
    for (const auto& g : zassenhaus(part)) out.factors.push_back({to_monic_q(g), e});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const UnivariateFactor& a, const UnivariateFactor& b) {
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    for (std::size_t i = a.poly.size(); i-- > 0;)
      if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace sparsefac
