#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sparsefac/zp.hpp"

namespace sparsefac::upz {

// Dense univariate polynomial over F_q, low degree first, no trailing zeros.
using UPoly = std::vector<std::uint32_t>;

void trim(UPoly& a);
int deg(const UPoly& a);  // -1 for zero
UPoly add(const UPoly& a, const UPoly& b, const Zp& f);
UPoly sub(const UPoly& a, const UPoly& b, const Zp& f);
UPoly mul(const UPoly& a, const UPoly& b, const Zp& f);
UPoly scale(const UPoly& a, std::uint32_t c, const Zp& f);
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b, const Zp& f);
UPoly rem(const UPoly& a, const UPoly& b, const Zp& f);
UPoly monic(const UPoly& a, const Zp& f);
UPoly gcd(UPoly a, UPoly b, const Zp& f);  // monic
// Returns (g, s, t) with s*a + t*b = g, g monic.
struct Xgcd {
  UPoly g, s, t;
};
Xgcd xgcd(const UPoly& a, const UPoly& b, const Zp& f);
UPoly derivative(const UPoly& a, const Zp& f);
std::uint32_t eval(const UPoly& a, std::uint32_t x, const Zp& f);
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m, const Zp& f);

// Yun decomposition of a monic polynomial: (part, exponent) with parts monic, squarefree, coprime.
// Valid when deg a < q.
std::vector<std::pair<UPoly, unsigned>> squarefree(const UPoly& a, const Zp& f);
bool is_squarefree(const UPoly& a, const Zp& f);

// Irreducible monic factors of a monic squarefree polynomial (Berlekamp; intended for small q).
std::vector<UPoly> berlekamp(const UPoly& a, const Zp& f);

}  // namespace sparsefac::upz
