#pragma once

#include <optional>
#include <vector>

#include "sparsefac/pit.hpp"
#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

struct DivisionResult {
  bool divides = false;
  std::optional<SparsePoly> quotient;
};

DivisionResult divides_exact(const SparsePoly& f, const SparsePoly& g);

struct WitnessIdentity {
  Point alpha;                               // g(alpha) != 0
  unsigned d = 0;                            // degree bound used
  std::vector<Rational> S;                   // scalings 1..2d^2+1
  std::vector<std::vector<Rational>> c;      // c[beta][i]
  SparsePoly h_tilde;
  bool holds = false;
  std::optional<SparsePoly> quotient;        // h_tilde(z - alpha) when holds
};

// Reduces g | f to the identity f(z+alpha) = g(z+alpha) h~(z).
WitnessIdentity divisibility_witness(const SparsePoly& f, const SparsePoly& g);

// Brute-force truncated power series of f(z+alpha)/g(z+alpha) up to degree d (validation oracle).
SparsePoly truncated_quotient_series(const SparsePoly& f, const SparsePoly& g, const Point& alpha, unsigned d);

enum class DivBackend { Exact, Witness };

bool constant_degree_divides(const SparsePoly& f, const SparsePoly& g, unsigned delta,
                             DivBackend backend = DivBackend::Exact);

// Translation z -> z + a.
SparsePoly shift(const SparsePoly& f, const Point& a);
// z -> b z.
SparsePoly scale_vars(const SparsePoly& f, const Rational& b);

}  // namespace sparsefac
