#include "sparsefac/factor_engine.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "sparsefac/base_factor.hpp"
#include "sparsefac/errors.hpp"
#include "sparsefac/modular_factor.hpp"

namespace sparsefac {

namespace {

struct CanonLess {
  bool operator()(const SparsePoly& a, const SparsePoly& b) const { return canonical_less(a, b); }
};

SparsePoly canonical(const SparsePoly& f) { return normalize_canonical(f).second; }

// Leading coefficient in x (variable 0); must be a constant.
Rational x_leading_constant(const SparsePoly& p) {
  unsigned dx = p.degree_in(0);
  Rational lc = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m[0] != dx) continue;
    if (monomial_degree(m) != dx) throw InternalError("leading x-coefficient is not constant");
    lc = c;
  }
  return lc;
}

SparsePoly make_x_monic(const SparsePoly& p) { return p * (Rational(1) / x_leading_constant(p)); }

// Scalar c with f = c * prod g^e, or 1 when the factors do not exhaust f.
Rational exhausting_scalar(const SparsePoly& f, const FactorList& fl) {
  SparsePoly prod = fl.expand(f.nvars());
  if (prod.is_zero()) return 1;
  auto q = exact_divide(f, prod);
  if (q && q->is_constant()) return q->constant_term();
  return 1;
}

std::uint64_t enumeration_limit(const IrredProjOracle& oracle, const Point& alpha, const Config& cfg) {
  std::uint64_t n = oracle.count(alpha);
  if (dynamic_cast<const ConstantDegreeOracle*>(&oracle)) n = std::min<std::uint64_t>(n, cfg.cd_oracle_limit);
  return n;
}

}  // namespace

std::vector<std::pair<SparsePoly, unsigned>> factor_x_monic(const SparsePoly& p) {
  if (p.nvars() == 0 || p.nvars() > 3) throw ArityError("factor_x_monic expects 1 to 3 variables");
  SparsePoly q = make_x_monic(p);
  std::vector<std::pair<SparsePoly, unsigned>> out;
  if (q.degree_in(0) == 0) return out;
  for (auto& [g, e] : modular::factor_monic(to_dense(q))) out.push_back({from_dense(g), e});
  return out;
}

SparsePoly tau(const SparsePoly& g, const Point& alpha) {
  std::size_t n = g.nvars();
  std::vector<SparsePoly> img;
  for (std::size_t i = 0; i < n; ++i)
    img.push_back(SparsePoly::variable(n + 1, 0) * alpha[i] + SparsePoly::variable(n + 1, i + 1));
  return substitute(g, img);
}

std::pair<MonicShift, SparsePoly> monicize(const SparsePoly& f) {
  if (f.is_zero() || f.is_constant()) throw ArityError("monicize needs a nonconstant polynomial");
  unsigned d = f.total_degree();
  SparsePoly top = hom_component(f, d);
  MonicShift s;
  s.alpha = find_nonzero_point_whitebox(top, d);
  s.normalizer = top.evaluate(s.alpha);
  SparsePoly fa = tau(f, s.alpha) * (Rational(1) / s.normalizer);
  return {s, fa};
}

SparsePoly unmonicize(const SparsePoly& g_hat, const MonicShift& shift) {
  // g_hat(x, z) = c * g(alpha x + z): the slice x = 0 is c * g(z)
  std::size_t n = g_hat.nvars() - 1;
  (void)shift;
  SparsePoly g(n);
  for (const auto& [m, c] : g_hat.terms()) {
    if (m[0] != 0) continue;
    g.add_term(Monomial(m.begin() + 1, m.end()), c);
  }
  return canonical(g);
}

ProjectedFactorSet projected_factoring(const SparsePoly& f, unsigned delta, const Config& cfg) {
  ProjectedFactorSet out;
  auto [shift, fa] = monicize(f);
  out.shift = shift;
  out.scheme = psi_scheme(f.nvars(), delta, cfg);
  DensePoly3 image = psi_map(fa, out.scheme, cfg.max_dense_cells);
  out.image_degree_x = image.degree_x();
  if (out.image_degree_x != f.total_degree()) throw InternalError("Psi changed the x-degree of f_alpha");
  auto fac = modular::factor_monic(image);
  out.total_factors = fac.size();
  for (auto& [h, e] : fac)
    if (h.degree_x() <= delta) out.factors.push_back({h, e});
  return out;
}

FactorList factor_constant_degree_promise(const SparsePoly& f, unsigned delta, const Config& cfg) {
  ProjectedFactorSet pf = projected_factoring(f, delta, cfg);
  if (pf.factors.size() != pf.total_factors)
    throw PromiseViolation("a projected factor has x-degree above delta");
  FactorList out;
  for (const auto& [h, e] : pf.factors) {
    SparsePoly g_hat;
    try {
      g_hat = psi_invert(h, pf.scheme);
    } catch (const NotInCodomain& ex) {
      throw PromiseViolation(std::string("projected factor outside the image of Psi: ") + ex.what());
    }
    out.factors.push_back({unmonicize(g_hat, pf.shift), e});
  }
  out.canonicalize();
  SparsePoly prod = out.expand(f.nvars());
  Rational c = f.leading_coefficient() / prod.leading_coefficient();
  if (!(prod * c == f)) throw PromiseViolation("recovered factors do not recompose to the input");
  out.scalar = c;
  return out;
}

unsigned factor_multiplicity(const SparsePoly& f, const SparsePoly& g) {
  if (g.is_zero() || g.is_constant()) throw ArityError("multiplicity needs a nonconstant factor");
  std::size_t z = *var_support(g).begin();
  unsigned e = 0;
  SparsePoly cur = f;
  while (!cur.is_zero() && exact_divide(cur, g)) {
    ++e;
    cur = derivative(cur, z);
  }
  return e;
}

FactorList constant_degree_factors(const SparsePoly& f, unsigned delta, const Config& cfg, DivBackend backend,
                                   std::vector<std::string>* diagnostics) {
  ProjectedFactorSet pf = projected_factoring(f, delta, cfg);
  std::set<SparsePoly, CanonLess> seen;
  FactorList out;
  for (const auto& [h, e] : pf.factors) {
    SparsePoly g_hat;
    try {
      g_hat = psi_invert(h, pf.scheme);
    } catch (const NotInCodomain& ex) {
      if (diagnostics) diagnostics->push_back(std::string("dropped projected factor: ") + ex.what());
      continue;
    }
    SparsePoly g = unmonicize(g_hat, pf.shift);
    if (g.is_constant() || g.total_degree() > delta) continue;
    if (!seen.insert(g).second) continue;
    if (!constant_degree_divides(f, g, delta, backend)) {
      if (diagnostics) diagnostics->push_back("dropped candidate that does not divide f");
      continue;
    }
    out.factors.push_back({g, factor_multiplicity(f, g)});
  }
  out.canonicalize();
  out.scalar = exhausting_scalar(f, out);
  return out;
}

namespace {

SparsePoly project3(const SparsePoly& f, const Point& alpha, const ProjectionRecord& r, const Point& omega) {
  std::vector<SparsePoly> img;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    SparsePoly l = SparsePoly::variable(3, 0) * alpha[i];
    l += SparsePoly::variable(3, 1) * r.beta[i];
    l += SparsePoly::variable(3, 2) * (omega[i] - r.gamma[i]);
    l += SparsePoly::constant(3, r.gamma[i]);
    img.push_back(std::move(l));
  }
  return substitute(f, img);
}

SparsePoly slice_t2_zero(const SparsePoly& g3) {
  SparsePoly out(2);
  for (const auto& [m, c] : g3.terms())
    if (m[2] == 0) out.add_term(Monomial{m[0], m[1]}, c);
  return out;
}

// Irreducibility of a divisor P of f certified by one irreducible projection.
bool projection_irreducible(const SparsePoly& p, const Point& alpha, const ProjectionRecord& r) {
  auto fac = factor_x_monic(project2(p, alpha, r));
  return fac.size() == 1 && fac[0].second == 1;
}

struct OmegaResult {
  std::vector<std::pair<SparsePoly, unsigned>> factors;
  std::exception_ptr error;
};

}  // namespace

bool sparse_irreducible_test(const SparsePoly& f, const IrredProjOracle& oracle, const Config& cfg) {
  if (f.is_zero() || f.is_constant()) throw ArityError("irreducibility test needs a nonconstant polynomial");
  unsigned d = f.total_degree();
  if (d == 1) return true;
  Point alpha = find_nonzero_point_whitebox(hom_component(f, d), d);
  std::uint64_t limit = enumeration_limit(oracle, alpha, cfg);
  for (std::uint64_t k = 0; k < limit; ++k)
    if (projection_irreducible(f, alpha, oracle.at(alpha, k))) return true;
  if (limit == oracle.count(alpha) && oracle.complete()) return false;
  if (var_support(f).size() <= 3) return is_irreducible_lowvar(f);
  throw CapError("irreducibility undecided within the oracle enumeration limit");
}

SparseFactorReport sparse_factors(const SparsePoly& f, std::size_t s, const IrredProjOracle& oracle,
                                  const Config& cfg) {
  if (f.is_zero() || f.is_constant()) throw ArityError("sparse_factors needs a nonconstant polynomial");
  SparseFactorReport rep;
  const std::size_t n = f.nvars();
  const unsigned d = f.total_degree();
  Point alpha = find_nonzero_point_whitebox(hom_component(f, d), d);
  EvaluationPlan plan = interpolation_plan(s, n, d);
  std::uint64_t limit = enumeration_limit(oracle, alpha, cfg);
  rep.exhaustive = oracle.complete() && limit == oracle.count(alpha);

  std::vector<SparsePoly> found;  // canonical, pairwise distinct
  auto is_found = [&](const SparsePoly& g) {
    return std::any_of(found.begin(), found.end(), [&](const SparsePoly& h) { return h == g; });
  };
  auto accept = [&](const SparsePoly& cand, const ProjectionRecord& rec, const SparsePoly* g_hat) -> bool {
    SparsePoly P = canonical(cand);
    if (P.is_constant() || is_found(P)) return false;
    if (P.sparsity() > s) return false;
    if (!oracle.member(P)) {
      rep.diagnostics.push_back("candidate outside the oracle class dropped");
      return false;
    }
    if (!exact_divide(f, P)) return false;
    bool irreducible = false;
    if (g_hat && make_x_monic(project2(P, alpha, rec)) == *g_hat) irreducible = true;
    else irreducible = sparse_irreducible_test(P, oracle, cfg);
    if (!irreducible) return false;
    found.push_back(P);
    return true;
  };
  auto cofactor = [&]() {
    SparsePoly r = f;
    for (const auto& g : found) {
      while (auto q = exact_divide(r, g)) r = *q;
    }
    return r;
  };

  [[maybe_unused]] const int jobs = static_cast<int>(std::max(1u, cfg.jobs));
  for (std::uint64_t k = 0; k < limit; ++k) {
    ProjectionRecord rec = oracle.at(alpha, k);
    ++rep.projections_tried;
    SparsePoly fhat = project2(f, alpha, rec);
    auto F = factor_x_monic(fhat);
    std::vector<std::size_t> todo;
    std::vector<SparsePoly> known;
    for (const auto& g : found) known.push_back(make_x_monic(project2(g, alpha, rec)));
    for (std::size_t j = 0; j < F.size(); ++j)
      if (std::find(known.begin(), known.end(), F[j].first) == known.end()) todo.push_back(j);
    if (!todo.empty()) {
      std::vector<OmegaResult> res(plan.points.size());
      const long P = static_cast<long>(plan.points.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
      for (long w = 0; w < P; ++w) {
        try {
          res[w].factors = factor_x_monic(project3(f, alpha, rec, plan.points[w]));
        } catch (...) {
          res[w].error = std::current_exception();
        }
      }
      for (auto& r : res)
        if (r.error) std::rethrow_exception(r.error);
      bool good = true;
      std::vector<std::vector<Rational>> values(todo.size());
      std::vector<bool> alive(todo.size(), true);
      for (std::size_t w = 0; w < res.size() && good; ++w) {
        std::vector<SparsePoly> slices;
        for (const auto& [g3, e] : res[w].factors) slices.push_back(slice_t2_zero(g3));
        for (std::size_t jj = 0; jj < todo.size(); ++jj) {
          if (!alive[jj]) continue;
          const auto& [gj, ej] = F[todo[jj]];
          std::vector<std::size_t> hits;
          for (std::size_t i = 0; i < slices.size(); ++i)
            if (slices[i] == gj) hits.push_back(i);
          if (hits.size() > 1) {
            std::vector<std::size_t> same;
            for (auto i : hits)
              if (res[w].factors[i].second == ej) same.push_back(i);
            hits = same;
            if (hits.size() > 1) {
              good = false;
              break;
            }
          }
          if (hits.empty()) {
            alive[jj] = false;
            continue;
          }
          const SparsePoly& g3 = res[w].factors[hits[0]].first;
          std::vector<Rational> pt{Rational(0), Rational(0), Rational(1)};
          values[jj].push_back(g3.evaluate(pt));
        }
      }
      if (!good) {
        rep.diagnostics.push_back("projection " + std::to_string(k) + " has ambiguous slices; skipped");
      } else {
        for (std::size_t jj = 0; jj < todo.size(); ++jj) {
          if (!alive[jj]) continue;
          SparsePoly cand;
          try {
            cand = sparse_interpolate(values[jj], plan);
          } catch (const InterpolationFailure&) {
            continue;
          }
          if (cand.is_zero()) continue;
          accept(cand, rec, &F[todo[jj]].first);
        }
      }
    }
    // stop once the found factors exhaust f, or the remaining cofactor is certified irreducible
    SparsePoly r = cofactor();
    if (r.is_constant()) {
      rep.exhaustive = true;
      break;
    }
    auto rf = factor_x_monic(project2(r, alpha, rec));
    if (rf.size() == 1 && rf[0].second == 1) {
      accept(r, rec, &rf[0].first);
      rep.diagnostics.push_back("remaining cofactor certified irreducible");
      rep.exhaustive = true;
      break;
    }
  }
  if (rep.projections_tried == limit && !rep.exhaustive)
    rep.diagnostics.push_back("oracle enumeration limit reached; result may be incomplete");
  for (const auto& g : found) rep.factors.factors.push_back({g, factor_multiplicity(f, g)});
  rep.factors.canonicalize();
  rep.factors.scalar = exhausting_scalar(f, rep.factors);
  return rep;
}

}  // namespace sparsefac
