#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sparsefac/dense_poly3.hpp"
#include "sparsefac/ntt.hpp"
#include "sparsefac/zp.hpp"

namespace sparsefac::modular {

// Dense array mod q in (x, t, y) order, y fastest: entry (i, a, b) is the coefficient of x^i t^a y^b.
struct Grid {
  unsigned nx = 0, nt = 0, ny = 0;  // counts, not degrees
  std::vector<std::uint32_t> c;
  Grid() = default;
  Grid(unsigned nx_, unsigned nt_, unsigned ny_) : nx(nx_), nt(nt_), ny(ny_), c(std::size_t(nx_) * nt_ * ny_, 0) {}
  std::uint32_t& at(unsigned i, unsigned a, unsigned b) { return c[(std::size_t(i) * nt + a) * ny + b]; }
  std::uint32_t at(unsigned i, unsigned a, unsigned b) const { return c[(std::size_t(i) * nt + a) * ny + b]; }
};

// Truncated power series ring F_q[t, y] / (t^T, y^Y) with transform-domain multiplication.
class SeriesRing {
 public:
  using Elem = std::vector<std::uint32_t>;  // T*Y, t-major
  using Freq = std::vector<std::uint32_t>;

  SeriesRing(std::uint32_t q, unsigned T, unsigned Y);

  unsigned T() const { return T_; }
  unsigned Y() const { return Y_; }
  const Zp& field() const { return f_; }
  std::size_t size() const { return std::size_t(T_) * Y_; }

  Elem zero() const { return Elem(size(), 0); }
  Elem one() const;
  Freq forward(const Elem& e) const;
  Elem backward(Freq fr) const;
  Elem mul(const Elem& a, const Elem& b) const;
  std::size_t transform_length() const { return L_; }
  const Ntt& ntt() const { return *ntt_; }

 private:
  Zp f_;
  unsigned T_, Y_, SY_;
  std::size_t L_;
  const Ntt* ntt_;
};

using XPoly = std::vector<SeriesRing::Elem>;

XPoly xmul(const SeriesRing& R, const XPoly& a, const XPoly& b);
XPoly xadd(const SeriesRing& R, const XPoly& a, const XPoly& b);
XPoly xsub(const SeriesRing& R, const XPoly& a, const XPoly& b);
// Division by a polynomial whose leading x-coefficient is 1.
std::pair<XPoly, XPoly> xdivrem(const SeriesRing& R, const XPoly& a, const XPoly& h);
// Changes the truncation of every coefficient.
XPoly resize(const XPoly& a, unsigned T0, unsigned Y0, unsigned T1, unsigned Y1);

// Taylor shift p(z) -> p(z + a) of a coefficient vector, via convolution. Requires len < q.
void taylor_shift(std::vector<std::uint32_t>& p, std::uint32_t a, const Zp& f);
// Shifts a grid: t -> t + ta, y -> y + ya.
Grid shift_grid(const Grid& g, std::uint32_t ta, std::uint32_t ya, const Zp& f);

XPoly grid_to_xpoly(const Grid& g, unsigned T, unsigned Y);
Grid xpoly_to_grid(const XPoly& p, unsigned T, unsigned Y);

// Multifactor quadratic Hensel lifting of a factorization F(x,0,0) = prod u_i (monic, pairwise coprime mod q)
// to precision (T, Y). F is given at precision (T, Y) with leading coefficient 1.
std::vector<XPoly> hensel_lift(const XPoly& F, const std::vector<std::vector<std::uint32_t>>& univariate_factors,
                               std::uint32_t q, unsigned T, unsigned Y);

// Complete factorization over Q of a dense polynomial monic in x (x-degree >= 1).
std::vector<std::pair<DensePoly3, unsigned>> factor_monic(const DensePoly3& F);

}  // namespace sparsefac::modular
