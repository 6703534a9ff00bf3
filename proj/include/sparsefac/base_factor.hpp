#pragma once

#include <utility>
#include <vector>

#include "sparsefac/dense_poly3.hpp"
#include "sparsefac/factor_list.hpp"
#include "sparsefac/sparse_poly.hpp"
#include "sparsefac/univariate_q.hpp"

namespace sparsefac {

struct SquarefreeDecomposition {
  Rational content = 1;
  std::vector<std::pair<DensePoly3, unsigned>> parts;
};

// Monic-in-x input; parts monic in x.
SquarefreeDecomposition squarefree_decomposition(const DensePoly3& f);

FactorList factor_univariate_q(const QPoly& f);
// Univariate SparsePoly in any single variable of its ring.
FactorList factor_univariate_q(const SparsePoly& f);

// Dense inputs monic in x; factors are returned over the input's variables (x, y[, t]).
FactorList factor_bivariate(const DensePoly3& f);
FactorList factor_trivariate(const DensePoly3& f);

// Any polynomial depending on at most three variables (of any ambient ring).
FactorList factor_lowvar(const SparsePoly& f);
bool is_irreducible_lowvar(const SparsePoly& f);

}  // namespace sparsefac
