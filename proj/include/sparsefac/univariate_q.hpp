#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sparsefac/rational.hpp"

namespace sparsefac {

// Dense univariate polynomials, low degree first, no trailing zeros.
using QPoly = std::vector<Rational>;
using ZPoly = std::vector<Integer>;

namespace zpoly {
void trim(ZPoly& a);
int deg(const ZPoly& a);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly derivative(const ZPoly& a);
Integer content(const ZPoly& a);
// Divides by the content and makes the leading coefficient positive.
ZPoly primitive_part(const ZPoly& a);
ZPoly gcd(const ZPoly& a, const ZPoly& b);  // primitive, positive leading coefficient
std::optional<ZPoly> exact_div(const ZPoly& a, const ZPoly& b);
Integer norm2_ceil(const ZPoly& a);
}  // namespace zpoly

// Clears denominators: f = scalar * F with F primitive in Z[x] and positive leading coefficient.
std::pair<Rational, ZPoly> to_primitive(const QPoly& f);
QPoly to_monic_q(const ZPoly& f);

// Squarefree decomposition of a primitive polynomial (parts primitive, positive leading coefficient).
std::vector<std::pair<ZPoly, unsigned>> squarefree_z(const ZPoly& f);

// Irreducible factors over Z of a primitive squarefree polynomial of positive degree.
std::vector<ZPoly> zassenhaus(const ZPoly& f);

struct UnivariateFactor {
  QPoly poly;  // monic
  unsigned multiplicity;
};

struct UnivariateFactorization {
  Rational scalar;
  std::vector<UnivariateFactor> factors;  // sorted by degree then coefficients
};

UnivariateFactorization factor_univariate(const QPoly& f);

QPoly qpoly_mul(const QPoly& a, const QPoly& b);

}  // namespace sparsefac
