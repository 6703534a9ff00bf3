#include "sparsefac/divisibility.hpp"

#include "sparsefac/errors.hpp"

namespace sparsefac {

DivisionResult divides_exact(const SparsePoly& f, const SparsePoly& g) {
  if (g.is_zero()) throw DivisionByZero("divisor is the zero polynomial");
  auto q = exact_divide(f, g);
  return {q.has_value(), q};
}

SparsePoly shift(const SparsePoly& f, const Point& a) {
  std::vector<SparsePoly> img;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    img.push_back(SparsePoly::variable(f.nvars(), i) + SparsePoly::constant(f.nvars(), a[i]));
  return substitute(f, img);
}

SparsePoly scale_vars(const SparsePoly& f, const Rational& b) {
  SparsePoly out(f.nvars());
  std::vector<Rational> pw{Rational(1)};
  for (const auto& [m, c] : f.terms()) {
    unsigned k = monomial_degree(m);
    while (pw.size() <= k) pw.push_back(pw.back() * b);
    out.add_term(m, c * pw[k]);
  }
  return out;
}

namespace {

// sum_{k<=d} coefficient of X^k in the Lagrange basis polynomial of node b over nodes 1..N
std::vector<Rational> truncation_weights(unsigned N, unsigned d) {
  // master = prod (X - m)
  std::vector<Rational> master{Rational(1)};
  for (unsigned m = 1; m <= N; ++m) {
    std::vector<Rational> next(master.size() + 1, Rational(0));
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] -= master[i] * m;
    }
    master = std::move(next);
  }
  std::vector<Rational> lambda(N);
  for (unsigned b = 1; b <= N; ++b) {
    // q = master / (X - b)
    std::vector<Rational> q(N);
    Rational carry = 0;
    for (std::size_t i = N; i-- > 0;) {
      carry = carry * b + master[i + 1];
      q[i] = carry;
    }
    Rational den = 1;
    for (unsigned m = 1; m <= N; ++m)
      if (m != b) den *= Rational(static_cast<long>(b) - static_cast<long>(m));
    Rational s = 0;
    for (unsigned k = 0; k <= d && k < N; ++k) s += q[k];
    lambda[b - 1] = s / den;
  }
  return lambda;
}

Rational binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace

WitnessIdentity divisibility_witness(const SparsePoly& f, const SparsePoly& g) {
  if (g.is_zero()) throw DivisionByZero("divisor is the zero polynomial");
  if (f.nvars() != g.nvars()) throw ArityError("variable count mismatch");
  WitnessIdentity w;
  unsigned df = f.is_zero() ? 0 : f.total_degree();
  unsigned dg = g.total_degree();
  w.d = std::max(df, dg);
  w.alpha = find_nonzero_point_whitebox(g, dg);
  const unsigned d = w.d;
  const unsigned N = 2 * d * d + 1;
  SparsePoly F = shift(f, w.alpha), G = shift(g, w.alpha);
  Rational G0 = G.constant_term();
  if (G0 == 0) throw InternalError("witness point is a root of the divisor");
  // kappa_i = (1/G0) (-1/G0)^i C(d+1, i+1);  c_{beta,i} = lambda_beta kappa_i
  std::vector<Rational> kappa(d + 1);
  Rational pw = Rational(1) / G0;
  for (unsigned i = 0; i <= d; ++i) {
    kappa[i] = pw * binomial(d + 1, i + 1);
    pw *= Rational(-1) / G0;
  }
  std::vector<Rational> lambda = truncation_weights(N, d);
  w.S.resize(N);
  w.c.assign(N, std::vector<Rational>(d + 1));
  for (unsigned b = 0; b < N; ++b) {
    w.S[b] = b + 1;
    for (unsigned i = 0; i <= d; ++i) w.c[b][i] = lambda[b] * kappa[i];
  }
  // h~ = sum_beta sum_i c_{beta,i} f(beta z + alpha) g(beta z + alpha)^i, with f(beta z+alpha) = F(beta z)
  // and c_{beta,i} = lambda_beta kappa_i, so the inner sum is lambda_beta P(beta z), P = sum_i kappa_i F G^i.
  SparsePoly P(f.nvars()), cur = F;
  for (unsigned i = 0; i <= d; ++i) {
    P += cur * kappa[i];
    if (i < d) cur = cur * G;
  }
  SparsePoly h(f.nvars());
  for (unsigned b = 0; b < N; ++b) h += scale_vars(P * lambda[b], w.S[b]);
  w.h_tilde = h;
  w.holds = sparse_pit(F - G * h);
  if (w.holds) {
    Point neg = w.alpha;
    for (auto& c : neg) c = -c;
    w.quotient = shift(h, neg);
  }
  return w;
}

SparsePoly truncated_quotient_series(const SparsePoly& f, const SparsePoly& g, const Point& alpha, unsigned d) {
  SparsePoly F = shift(f, alpha), G = shift(g, alpha);
  Rational G0 = G.constant_term();
  if (G0 == 0) throw DivisionByZero("series expansion at a root");
  // Q with Q*G = F mod degree > d, solved degree by degree
  SparsePoly Q(f.nvars());
  for (unsigned k = 0; k <= d; ++k) {
    SparsePoly r = hom_component(F - G * Q, k);
    Q += r * (Rational(1) / G0);
  }
  return Q;
}

bool constant_degree_divides(const SparsePoly& f, const SparsePoly& g, unsigned delta, DivBackend backend) {
  if (g.is_zero()) throw DivisionByZero("divisor is the zero polynomial");
  if (g.total_degree() > delta) throw ArityError("divisor degree exceeds delta");
  if (backend == DivBackend::Witness) return divisibility_witness(f, g).holds;
  return divides_exact(f, g).divides;
}

}  // namespace sparsefac
