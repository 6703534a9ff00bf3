#include "sparsefac/base_factor.hpp"

#include <algorithm>

#include "sparsefac/errors.hpp"
#include "sparsefac/modular_factor.hpp"

namespace sparsefac {

namespace {

constexpr std::size_t kExactRecomposeCells = 4096;

FactorList from_dense_factors(const std::vector<std::pair<DensePoly3, unsigned>>& fac) {
  FactorList out;
  for (const auto& [g, e] : fac) out.factors.push_back({from_dense(g), e});
  out.canonicalize();
  return out;
}

void check_recomposition(const FactorList& fl, const SparsePoly& f) {
  if (!(fl.expand(f.nvars()) == f)) throw InternalError("factorization does not recompose to its input");
}

FactorList factor_monic_dense(const DensePoly3& f) {
  if (!f.is_monic_in_x()) throw ArityError("dense factorization requires an input monic in x");
  FactorList out = from_dense_factors(modular::factor_monic(f));
  if (f.data().size() <= kExactRecomposeCells) check_recomposition(out, from_dense(f));
  return out;
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const DensePoly3& f) {
  SquarefreeDecomposition out;
  FactorList fl = factor_monic_dense(f);
  // group irreducible factors by multiplicity
  std::map<unsigned, SparsePoly> parts;
  for (const auto& fac : fl.factors) {
    auto [lc, monic] = normalize_canonical(fac.poly);
    auto it = parts.find(fac.multiplicity);
    if (it == parts.end()) parts.emplace(fac.multiplicity, fac.poly);
    else it->second = it->second * fac.poly;
  }
  for (auto& [e, p] : parts) {
    DensePoly3 d = to_dense(p);
    // make monic in x
    unsigned m = d.degree_x();
    Rational lc = d.at(m, 0, 0);
    SparsePoly pm = p * (Rational(1) / lc);
    out.parts.push_back({to_dense(pm), e});
  }
  return out;
}

FactorList factor_univariate_q(const QPoly& f) {
  UnivariateFactorization u = factor_univariate(f);
  FactorList out;
  out.scalar = u.scalar;
  for (const auto& fac : u.factors) {
    SparsePoly p(1);
    for (std::size_t i = 0; i < fac.poly.size(); ++i) p.add_term(Monomial{static_cast<std::uint32_t>(i)}, fac.poly[i]);
    out.factors.push_back({p, fac.multiplicity});
  }
  out.canonicalize();
  return out;
}

FactorList factor_univariate_q(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError("cannot factor the zero polynomial");
  auto support = var_support(f);
  if (support.size() > 1) throw ArityError("factor_univariate_q expects a univariate polynomial");
  if (support.empty()) {
    FactorList out;
    out.scalar = f.constant_term();
    return out;
  }
  std::size_t v = *support.begin();
  QPoly q(f.degree_in(v) + 1, Rational(0));
  for (const auto& [m, c] : f.terms()) q[m[v]] = c;
  FactorList u = factor_univariate_q(q);
  FactorList out;
  out.scalar = u.scalar;
  for (const auto& fac : u.factors) {
    out.factors.push_back({remap_variables(fac.poly, f.nvars(), {v}), fac.multiplicity});
  }
  out.canonicalize();
  return out;
}

FactorList factor_bivariate(const DensePoly3& f) {
  if (f.degree_t() != 0) throw ArityError("factor_bivariate expects no t-dependence");
  return factor_monic_dense(f);
}

FactorList factor_trivariate(const DensePoly3& f) { return factor_monic_dense(f); }

FactorList factor_lowvar(const SparsePoly& f) {
  if (f.is_zero()) throw ZeroPolynomialError("cannot factor the zero polynomial");
  auto support = var_support(f);
  std::vector<std::size_t> vars(support.begin(), support.end());
  if (vars.size() > 3) throw ArityError("factor_lowvar supports at most three variables");
  if (vars.empty()) {
    FactorList out;
    out.scalar = f.constant_term();
    return out;
  }
  if (vars.size() == 1) return factor_univariate_q(f);
  unsigned d = f.total_degree();
  SparsePoly top = hom_component(f, d);
  std::size_t k = vars.size();
  // z_{v0} = X, z_{vi} = c_i X + W_i makes the X-leading coefficient the constant Hom_d(1, c)
  std::vector<long> c(k, 0);
  c[0] = 1;
  std::vector<long> seq{0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5};
  bool found = false;
  Rational lead;
  for (long r = 0; r < 40 && !found; ++r) {
    for (long a1 = 0; a1 < static_cast<long>(seq.size()) && !found; ++a1) {
      for (long a2 = 0; a2 < static_cast<long>(seq.size()) && !found; ++a2) {
        if (a1 + a2 != r) continue;
        if (k == 2 && a2 != 0) continue;
        c[1] = seq[a1];
        if (k == 3) c[2] = seq[a2];
        std::vector<Rational> pt(f.nvars(), Rational(0));
        for (std::size_t i = 0; i < k; ++i) pt[vars[i]] = c[i];
        lead = top.evaluate(pt);
        if (lead != 0) found = true;
      }
    }
  }
  if (!found) throw InternalError("no monic change of variables found");
  std::vector<SparsePoly> images(f.nvars(), SparsePoly(k));
  for (std::size_t v = 0; v < f.nvars(); ++v) images[v] = SparsePoly(k);
  images[vars[0]] = SparsePoly::variable(k, 0);
  for (std::size_t i = 1; i < k; ++i)
    images[vars[i]] = SparsePoly::variable(k, 0) * Rational(c[i]) + SparsePoly::variable(k, i);
  SparsePoly g = substitute(f, images) * (Rational(1) / lead);
  auto fac = modular::factor_monic(to_dense(g));
  // back: X = z_{v0}, W_i = z_{vi} - c_i z_{v0}
  std::vector<SparsePoly> back(k, SparsePoly(f.nvars()));
  back[0] = SparsePoly::variable(f.nvars(), vars[0]);
  for (std::size_t i = 1; i < k; ++i)
    back[i] = SparsePoly::variable(f.nvars(), vars[i]) - SparsePoly::variable(f.nvars(), vars[0]) * Rational(c[i]);
  FactorList out;
  out.scalar = lead;
  for (const auto& [h, e] : fac) out.factors.push_back({substitute(from_dense(h), back), e});
  out.canonicalize();
  if (f.sparsity() <= kExactRecomposeCells && d <= 24) check_recomposition(out, f);
  return out;
}

bool is_irreducible_lowvar(const SparsePoly& f) {
  if (f.is_constant()) return false;
  FactorList fl = factor_lowvar(f);
  return fl.factors.size() == 1 && fl.factors[0].multiplicity == 1;
}

}  // namespace sparsefac
