#include "sparsefac/pit.hpp"

#include <algorithm>

#include "sparsefac/errors.hpp"
#include "sparsefac/univariate_q.hpp"

namespace sparsefac {

HittingSet trivial_hitting_set(std::size_t n, unsigned d) {
  HittingSet hs;
  hs.n = n;
  hs.d = d;
  std::vector<unsigned> idx(n, 1);
  while (true) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = idx[i];
    hs.points.push_back(std::move(p));
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == d + 1) idx[--k] = 1;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return hs;
}

Point find_nonzero_point_whitebox(const SparsePoly& f, unsigned d, std::size_t* probes) {
  std::size_t count = 0;
  if (f.is_zero()) {
    if (probes) *probes = 1;
    throw ZeroPolynomialError("polynomial is identically zero");
  }
  Point a(f.nvars());
  SparsePoly cur = f;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    bool ok = false;
    for (unsigned v = 1; v <= d + 1; ++v) {
      SparsePoly next = partial_evaluate(cur, i, Rational(v));
      ++count;
      if (!sparse_pit(next)) {
        a[i] = v;
        cur = std::move(next);
        ok = true;
        break;
      }
    }
    if (!ok) {
      if (probes) *probes = count;
      throw ZeroPolynomialError("no nonzero value in {1..d+1}; degree bound too small");
    }
  }
  if (probes) *probes = count;
  return a;
}

Point find_nonzero_point_blackbox(const Evaluator& f, const HittingSet& hs, unsigned d) {
  for (const auto& a : hs.points) {
    if (f(a) == 0) continue;
    if (std::none_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; })) return a;
    Rational M = 0;
    for (const auto& c : a)
      if (-c > M) M = -c;
    for (unsigned j = 0; j <= d; ++j) {
      Point b = a;
      for (auto& c : b) c += M + 1 + j;
      if (std::any_of(b.begin(), b.end(), [](const Rational& c) { return c == 0; })) continue;
      if (f(b) != 0) return b;
    }
    throw InternalError("shift search failed; degree bound too small");
  }
  throw ZeroPolynomialError("polynomial vanishes on the whole hitting set");
}

bool sparse_pit(const SparsePoly& f) { return f.is_zero(); }

std::vector<unsigned> first_primes(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned c = 2; out.size() < n; ++c) {
    bool prime = true;
    for (unsigned p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

EvaluationPlan interpolation_plan(std::size_t s, std::size_t n, unsigned d) {
  if (s == 0) throw ArityError("sparsity bound must be positive");
  EvaluationPlan plan{s, n, d, {}};
  auto primes = first_primes(n);
  Point cur(n, Rational(1));
  for (std::size_t i = 0; i < 2 * s; ++i) {
    plan.points.push_back(cur);
    for (std::size_t k = 0; k < n; ++k) cur[k] *= primes[k];
  }
  return plan;
}

std::vector<Rational> evaluate_plan(const SparsePoly& f, const EvaluationPlan& plan) {
  std::vector<Rational> out;
  out.reserve(plan.points.size());
  for (const auto& p : plan.points) out.push_back(f.evaluate(p));
  return out;
}

std::vector<Rational> berlekamp_massey(std::span<const Rational> seq) {
  std::vector<Rational> C{1}, B{1};
  std::size_t L = 0, m = 1;
  Rational b = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational disc = seq[n];
    for (std::size_t i = 1; i <= L && i < C.size(); ++i) disc += C[i] * seq[n - i];
    if (disc == 0) {
      ++m;
      continue;
    }
    Rational coef = disc / b;
    std::vector<Rational> T = C;
    if (C.size() < B.size() + m) C.resize(B.size() + m, Rational(0));
    for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
    if (2 * L <= n) {
      L = n + 1 - L;
      B = std::move(T);
      b = disc;
      m = 1;
    } else {
      ++m;
    }
  }
  C.resize(L + 1, Rational(0));
  return C;
}

namespace {

Rational eval_q(const QPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

void enumerate_monomials(std::size_t n, unsigned d, const std::function<void(const Monomial&)>& fn) {
  Monomial e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == n) {
      fn(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
}

std::size_t monomial_count(std::size_t n, unsigned d, std::size_t limit) {
  // C(n+d, d) with early saturation
  Integer c = 1;
  for (unsigned k = 1; k <= d; ++k) {
    c *= Integer(static_cast<unsigned long>(n + k));
    c /= k;
    if (c > limit) return limit + 1;
  }
  return c.get_ui();
}

constexpr std::size_t kEnumerateLimit = 20000;

std::vector<Integer> locator_roots(const QPoly& lambda, std::size_t L, const std::vector<unsigned>& primes,
                                   unsigned d) {
  std::vector<Integer> roots;
  std::size_t n = primes.size();
  if (monomial_count(n, d, kEnumerateLimit) <= kEnumerateLimit) {
    enumerate_monomials(n, d, [&](const Monomial& e) {
      if (roots.size() > L) return;
      Integer m = 1;
      for (std::size_t k = 0; k < n; ++k) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), Integer(primes[k]).get_mpz_t(), e[k]);
        m *= pk;
      }
      if (eval_q(lambda, Rational(m)) == 0) roots.push_back(m);
    });
    if (roots.size() == L) return roots;
    roots.clear();
  }
  UnivariateFactorization u = factor_univariate(lambda);
  for (const auto& f : u.factors) {
    if (f.poly.size() != 2 || f.multiplicity != 1)
      throw InterpolationFailure("term locator has a non-linear or repeated factor");
    Rational r = -f.poly[0];
    if (r.get_den() != 1 || r <= 0) throw InterpolationFailure("term locator root is not a positive integer");
    roots.push_back(r.get_num());
  }
  return roots;
}

Monomial root_to_monomial(Integer r, const std::vector<unsigned>& primes, unsigned d) {
  Monomial e(primes.size(), 0);
  for (std::size_t k = 0; k < primes.size(); ++k) {
    while (mpz_divisible_ui_p(r.get_mpz_t(), primes[k])) {
      r /= primes[k];
      ++e[k];
    }
  }
  if (r != 1) throw InterpolationFailure("term locator root is not a product of the plan primes");
  if (monomial_degree(e) > d) throw InterpolationFailure("recovered monomial exceeds the degree bound");
  return e;
}

}  // namespace

SparsePoly sparse_interpolate(std::span<const Rational> values, const EvaluationPlan& plan) {
  if (values.size() != plan.points.size()) throw ArityError("value count does not match the evaluation plan");
  std::size_t n = plan.n;
  std::vector<Rational> C = berlekamp_massey(values);
  std::size_t L = C.size() - 1;
  if (L == 0) return SparsePoly(n);
  if (L > plan.s) throw InterpolationFailure("recovered sparsity exceeds the bound");
  QPoly lambda(L + 1);
  for (std::size_t i = 0; i <= L; ++i) lambda[L - i] = C[i];
  auto primes = first_primes(n);
  std::vector<Integer> roots = locator_roots(lambda, L, primes, plan.d);
  if (roots.size() != L) throw InterpolationFailure("term locator does not split into distinct plan roots");
  std::sort(roots.begin(), roots.end());
  if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
    throw InterpolationFailure("repeated term locator root");
  // transposed Vandermonde: c_j = (sum_i q_{j,i} v_i) / q_j(m_j), q_j = lambda / (X - m_j)
  SparsePoly out(n);
  std::vector<Rational> coeffs(L);
  for (std::size_t j = 0; j < L; ++j) {
    Rational m = roots[j];
    QPoly q(L);
    Rational carry = 0;
    for (std::size_t i = L; i-- > 0;) {
      carry = carry * m + lambda[i + 1];
      q[i] = carry;
    }
    Rational num = 0;
    for (std::size_t i = 0; i < L; ++i) num += q[i] * values[i];
    Rational den = eval_q(q, m);
    if (den == 0) throw InterpolationFailure("singular Vandermonde system");
    coeffs[j] = num / den;
    if (coeffs[j] == 0) throw InterpolationFailure("zero coefficient recovered");
    out.add_term(root_to_monomial(roots[j], primes, plan.d), coeffs[j]);
  }
  // residual check on the whole plan
  for (std::size_t i = 0; i < values.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < L; ++j) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), roots[j].get_mpz_t(), i);
      acc += coeffs[j] * Rational(pw);
    }
    if (acc != values[i]) throw InterpolationFailure("interpolant does not reproduce the given values");
  }
  return out;
}

SparsePoly sparse_interpolate(std::span<const Rational> values, std::size_t s, std::size_t n, unsigned d) {
  return sparse_interpolate(values, interpolation_plan(s, n, d));
}

}  // namespace sparsefac
