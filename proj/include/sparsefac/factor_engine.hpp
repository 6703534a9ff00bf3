#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sparsefac/config.hpp"
#include "sparsefac/dense_poly3.hpp"
#include "sparsefac/divisibility.hpp"
#include "sparsefac/factor_list.hpp"
#include "sparsefac/irredproj.hpp"
#include "sparsefac/isolation.hpp"
#include "sparsefac/pit.hpp"

namespace sparsefac {

struct MonicShift {
  Point alpha;
  Rational normalizer;  // Hom_d[f](alpha)
};

// g(alpha x + z) over (x, z1..zn).
SparsePoly tau(const SparsePoly& g, const Point& alpha);
// f_alpha = f(alpha x + z) / Hom_d[f](alpha), monic in x of degree deg f.
std::pair<MonicShift, SparsePoly> monicize(const SparsePoly& f);
// Inverse change of coordinates followed by x -> 0; canonical up to scalar.
SparsePoly unmonicize(const SparsePoly& g_hat, const MonicShift& shift);

struct ProjectedFactor {
  DensePoly3 poly;
  unsigned multiplicity;
};

struct ProjectedFactorSet {
  MonicShift shift;
  IsolationScheme scheme;
  unsigned image_degree_x = 0;
  std::vector<ProjectedFactor> factors;  // deg_x <= delta
  std::size_t total_factors = 0;         // before the degree filter
};

ProjectedFactorSet projected_factoring(const SparsePoly& f, unsigned delta, const Config& cfg = {});

// Requires every irreducible factor of f to have degree <= delta; throws PromiseViolation otherwise.
FactorList factor_constant_degree_promise(const SparsePoly& f, unsigned delta, const Config& cfg = {});

// All irreducible factors of degree <= delta with multiplicities; scalar is set only when they exhaust f.
FactorList constant_degree_factors(const SparsePoly& f, unsigned delta, const Config& cfg = {},
                                   DivBackend backend = DivBackend::Exact,
                                   std::vector<std::string>* diagnostics = nullptr);

unsigned factor_multiplicity(const SparsePoly& f, const SparsePoly& g);

struct SparseFactorReport {
  FactorList factors;
  std::vector<std::string> diagnostics;
  std::uint64_t projections_tried = 0;
  bool exhaustive = true;  // false when the oracle was sampled or cut off by a limit
};

SparseFactorReport sparse_factors(const SparsePoly& f, std::size_t s, const IrredProjOracle& oracle,
                                  const Config& cfg = {});

bool sparse_irreducible_test(const SparsePoly& f, const IrredProjOracle& oracle, const Config& cfg = {});

// Factors of a polynomial over <= 3 variables whose variable 0 is x, after scaling to be monic in x.
std::vector<std::pair<SparsePoly, unsigned>> factor_x_monic(const SparsePoly& p);

}  // namespace sparsefac
