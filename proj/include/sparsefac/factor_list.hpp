#pragma once

#include <string>
#include <vector>

#include "sparsefac/poly_text.hpp"
#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

struct Factor {
  SparsePoly poly;
  unsigned multiplicity = 1;
};

struct FactorList {
  Rational scalar = 1;
  std::vector<Factor> factors;

  // Normalizes every factor (folding scalars into `scalar`), merges equal factors, sorts canonically.
  void canonicalize();
  SparsePoly expand(std::size_t nvars) const;
  std::string to_json(const VarNames& names) const;
  std::string to_text(const VarNames& names) const;
};

bool same_factors(const FactorList& a, const FactorList& b);

}  // namespace sparsefac
