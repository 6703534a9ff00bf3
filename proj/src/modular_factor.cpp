#include "sparsefac/modular_factor.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "sparsefac/errors.hpp"
#include "sparsefac/univariate_q.hpp"
#include "sparsefac/upoly_zp.hpp"

namespace sparsefac::modular {

SeriesRing::SeriesRing(std::uint32_t q, unsigned T, unsigned Y)
    : f_{q}, T_(T), Y_(Y), SY_(2 * Y - 1), L_(next_pow2(std::size_t(2 * T - 1) * (2 * Y - 1))), ntt_(&Ntt::get(q)) {
  if (log2_exact(L_) > ntt_->max_log()) throw InternalError("series ring too large for the chosen prime");
}

SeriesRing::Elem SeriesRing::one() const {
  Elem e = zero();
  e[0] = 1;
  return e;
}

SeriesRing::Freq SeriesRing::forward(const Elem& e) const {
  Freq fr(L_, 0);
  for (unsigned a = 0; a < T_; ++a)
    std::copy(e.begin() + std::size_t(a) * Y_, e.begin() + std::size_t(a + 1) * Y_, fr.begin() + std::size_t(a) * SY_);
  ntt_->forward(fr.data(), L_);
  return fr;
}

SeriesRing::Elem SeriesRing::backward(Freq fr) const {
  ntt_->inverse(fr.data(), L_);
  Elem e(size());
  for (unsigned a = 0; a < T_; ++a)
    std::copy(fr.begin() + std::size_t(a) * SY_, fr.begin() + std::size_t(a) * SY_ + Y_, e.begin() + std::size_t(a) * Y_);
  return e;
}

SeriesRing::Elem SeriesRing::mul(const Elem& a, const Elem& b) const {
  Freq fa = forward(a);
  Freq fb = forward(b);
  ntt_->pointwise(fa.data(), fb.data(), L_);
  return backward(std::move(fa));
}

namespace {

bool is_zero_elem(const SeriesRing::Elem& e) {
  return std::all_of(e.begin(), e.end(), [](std::uint32_t v) { return v == 0; });
}

void xtrim(XPoly& p) {
  while (!p.empty() && is_zero_elem(p.back())) p.pop_back();
}

std::vector<SeriesRing::Freq> forward_all(const SeriesRing& R, const XPoly& a) {
  std::vector<SeriesRing::Freq> out;
  out.reserve(a.size());
  for (const auto& e : a) out.push_back(is_zero_elem(e) ? SeriesRing::Freq{} : R.forward(e));
  return out;
}

XPoly xmul_freq(const SeriesRing& R, const std::vector<SeriesRing::Freq>& fa,
                const std::vector<SeriesRing::Freq>& fb) {
  if (fa.empty() || fb.empty()) return {};
  std::size_t L = R.transform_length();
  std::vector<SeriesRing::Freq> acc(fa.size() + fb.size() - 1);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    if (fa[i].empty()) continue;
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (fb[j].empty()) continue;
      auto& slot = acc[i + j];
      if (slot.empty()) slot.assign(L, 0);
      R.ntt().pointwise_acc(slot.data(), fa[i].data(), fb[j].data(), L);
    }
  }
  XPoly out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = acc[k].empty() ? R.zero() : R.backward(std::move(acc[k]));
  xtrim(out);
  return out;
}

}  // namespace

XPoly xmul(const SeriesRing& R, const XPoly& a, const XPoly& b) {
  return xmul_freq(R, forward_all(R, a), forward_all(R, b));
}

XPoly xadd(const SeriesRing& R, const XPoly& a, const XPoly& b) {
  XPoly out(std::max(a.size(), b.size()), R.zero());
  const Zp& f = R.field();
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < R.size(); ++k) out[i][k] = f.add(out[i][k], b[i][k]);
  xtrim(out);
  return out;
}

XPoly xsub(const SeriesRing& R, const XPoly& a, const XPoly& b) {
  XPoly out(std::max(a.size(), b.size()), R.zero());
  const Zp& f = R.field();
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = 0; k < R.size(); ++k) out[i][k] = f.sub(out[i][k], b[i][k]);
  xtrim(out);
  return out;
}

std::pair<XPoly, XPoly> xdivrem(const SeriesRing& R, const XPoly& a, const XPoly& h) {
  if (h.empty()) throw InternalError("series division by zero");
  std::size_t m = h.size() - 1;
  if (a.size() <= m) return {XPoly{}, a};
  const Zp& f = R.field();
  std::size_t L = R.transform_length();
  std::vector<SeriesRing::Freq> fh = forward_all(R, XPoly(h.begin(), h.begin() + m));
  std::vector<SeriesRing::Freq> acc(a.size());
  auto current = [&](std::size_t k) {
    SeriesRing::Elem e = a[k];
    if (!acc[k].empty()) {
      SeriesRing::Elem sub = R.backward(std::move(acc[k]));
      acc[k].clear();
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = f.sub(e[i], sub[i]);
    }
    return e;
  };
  XPoly quo(a.size() - m, R.zero());
  for (std::size_t k = a.size(); k-- > m;) {
    SeriesRing::Elem c = current(k);
    quo[k - m] = c;
    if (is_zero_elem(c) || m == 0) continue;
    SeriesRing::Freq fc = R.forward(c);
    for (std::size_t j = 0; j < m; ++j) {
      if (fh[j].empty()) continue;
      auto& slot = acc[k - m + j];
      if (slot.empty()) slot.assign(L, 0);
      R.ntt().pointwise_acc(slot.data(), fc.data(), fh[j].data(), L);
    }
  }
  XPoly rem(m);
  for (std::size_t k = 0; k < m; ++k) rem[k] = current(k);
  xtrim(rem);
  xtrim(quo);
  return {quo, rem};
}

XPoly resize(const XPoly& a, unsigned T0, unsigned Y0, unsigned T1, unsigned Y1) {
  XPoly out;
  out.reserve(a.size());
  for (const auto& e : a) {
    SeriesRing::Elem n(std::size_t(T1) * Y1, 0);
    for (unsigned t = 0; t < std::min(T0, T1); ++t)
      for (unsigned y = 0; y < std::min(Y0, Y1); ++y) n[std::size_t(t) * Y1 + y] = e[std::size_t(t) * Y0 + y];
    out.push_back(std::move(n));
  }
  xtrim(out);
  return out;
}

void taylor_shift(std::vector<std::uint32_t>& p, std::uint32_t a, const Zp& f) {
  std::size_t n = p.size();
  if (n <= 1 || a == 0) return;
  if (n >= f.q) throw InternalError("Taylor shift length exceeds the characteristic");
  std::vector<std::uint32_t> fact(n), inv_fact(n);
  fact[0] = 1;
  for (std::size_t i = 1; i < n; ++i) fact[i] = f.mul(fact[i - 1], static_cast<std::uint32_t>(i));
  inv_fact[n - 1] = f.inv(fact[n - 1]);
  for (std::size_t i = n - 1; i > 0; --i) inv_fact[i - 1] = f.mul(inv_fact[i], static_cast<std::uint32_t>(i));
  std::vector<std::uint32_t> A(n), B(n);
  for (std::size_t j = 0; j < n; ++j) A[n - 1 - j] = f.mul(p[j], fact[j]);
  std::uint32_t pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    B[i] = f.mul(pw, inv_fact[i]);
    pw = f.mul(pw, a);
  }
  std::vector<std::uint32_t> C = convolve(A, B, f.q);
  for (std::size_t k = 0; k < n; ++k) p[k] = f.mul(C[n - 1 - k], inv_fact[k]);
}

Grid shift_grid(const Grid& g, std::uint32_t ta, std::uint32_t ya, const Zp& f) {
  Grid out = g;
  std::vector<std::uint32_t> buf;
  if (ya != 0 && g.ny > 1) {
    buf.resize(g.ny);
    for (unsigned i = 0; i < g.nx; ++i)
      for (unsigned a = 0; a < g.nt; ++a) {
        for (unsigned b = 0; b < g.ny; ++b) buf[b] = out.at(i, a, b);
        taylor_shift(buf, ya, f);
        for (unsigned b = 0; b < g.ny; ++b) out.at(i, a, b) = buf[b];
      }
  }
  if (ta != 0 && g.nt > 1) {
    buf.resize(g.nt);
    for (unsigned i = 0; i < g.nx; ++i)
      for (unsigned b = 0; b < g.ny; ++b) {
        for (unsigned a = 0; a < g.nt; ++a) buf[a] = out.at(i, a, b);
        taylor_shift(buf, ta, f);
        for (unsigned a = 0; a < g.nt; ++a) out.at(i, a, b) = buf[a];
      }
  }
  return out;
}

XPoly grid_to_xpoly(const Grid& g, unsigned T, unsigned Y) {
  XPoly out(g.nx, SeriesRing::Elem(std::size_t(T) * Y, 0));
  for (unsigned i = 0; i < g.nx; ++i)
    for (unsigned a = 0; a < std::min(T, g.nt); ++a)
      for (unsigned b = 0; b < std::min(Y, g.ny); ++b) out[i][std::size_t(a) * Y + b] = g.at(i, a, b);
  xtrim(out);
  return out;
}

Grid xpoly_to_grid(const XPoly& p, unsigned T, unsigned Y) {
  Grid g(static_cast<unsigned>(p.size()), T, Y);
  for (unsigned i = 0; i < p.size(); ++i)
    for (unsigned a = 0; a < T; ++a)
      for (unsigned b = 0; b < Y; ++b) g.at(i, a, b) = p[i][std::size_t(a) * Y + b];
  return g;
}

namespace {

using upz::UPoly;

XPoly from_univariate(const UPoly& u, const SeriesRing& R) {
  XPoly out(u.size(), R.zero());
  for (std::size_t i = 0; i < u.size(); ++i) out[i][0] = u[i];
  xtrim(out);
  return out;
}

struct LiftNode {
  std::size_t lo, hi;
  int left = -1, right = -1;
  XPoly g, h, s, t;
};

class HenselTree {
 public:
  HenselTree(const std::vector<UPoly>& leaves, const Zp& f) : leaves_(leaves), f_(f) {
    build(0, leaves.size());
  }

  void init(const SeriesRing& R) {
    for (auto& nd : nodes_) {
      if (nd.hi - nd.lo == 1) continue;
      std::size_t mid = (nd.lo + nd.hi) / 2;
      UPoly g{1}, h{1};
      for (std::size_t i = nd.lo; i < mid; ++i) g = upz::mul(g, leaves_[i], f_);
      for (std::size_t i = mid; i < nd.hi; ++i) h = upz::mul(h, leaves_[i], f_);
      upz::Xgcd x = upz::xgcd(g, h, f_);
      if (x.g != UPoly{1}) throw InternalError("Hensel factors are not coprime");
      nd.g = from_univariate(g, R);
      nd.h = from_univariate(h, R);
      nd.s = from_univariate(x.s, R);
      nd.t = from_univariate(x.t, R);
    }
  }

  void resize_all(unsigned T0, unsigned Y0, unsigned T1, unsigned Y1) {
    for (auto& nd : nodes_) {
      if (nd.hi - nd.lo == 1) continue;
      nd.g = resize(nd.g, T0, Y0, T1, Y1);
      nd.h = resize(nd.h, T0, Y0, T1, Y1);
      nd.s = resize(nd.s, T0, Y0, T1, Y1);
      nd.t = resize(nd.t, T0, Y0, T1, Y1);
    }
  }

  void step(const SeriesRing& R, const XPoly& F, bool last) { step_node(R, 0, F, last); }

  std::vector<XPoly> leaves() const {
    std::vector<XPoly> out(leaves_.size());
    collect(0, XPoly{}, out);
    return out;
  }

 private:
  int build(std::size_t lo, std::size_t hi) {
    int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_.back().lo = lo;
    nodes_.back().hi = hi;
    if (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      int l = build(lo, mid);
      int r = build(mid, hi);
      nodes_[id].left = l;
      nodes_[id].right = r;
    }
    return id;
  }

  void step_node(const SeriesRing& R, int id, const XPoly& F, bool last) {
    LiftNode& nd = nodes_[id];
    if (nd.hi - nd.lo == 1) return;
    // quadratic Hensel step: F = g h, s g + t h = 1
    auto fg = forward_all(R, nd.g);
    auto fh = forward_all(R, nd.h);
    auto fs = forward_all(R, nd.s);
    auto ft = forward_all(R, nd.t);
    XPoly e = xsub(R, F, xmul_freq(R, fg, fh));
    auto fe = forward_all(R, e);
    auto [q, r] = xdivrem(R, xmul_freq(R, fs, fe), nd.h);
    XPoly gs = xadd(R, nd.g, xadd(R, xmul_freq(R, ft, fe), xmul_freq(R, forward_all(R, q), fg)));
    XPoly hs = xadd(R, nd.h, r);
    if (last) {
      // the Bezout pair is not needed after the final step
      nd.g = std::move(gs);
      nd.h = std::move(hs);
      step_node(R, nd.left, nd.g, last);
      step_node(R, nd.right, nd.h, last);
      return;
    }
    auto fgs = forward_all(R, gs);
    auto fhs = forward_all(R, hs);
    XPoly b = xsub(R, xadd(R, xmul_freq(R, fs, fgs), xmul_freq(R, ft, fhs)), XPoly{R.one()});
    auto fb = forward_all(R, b);
    auto [c, d] = xdivrem(R, xmul_freq(R, fs, fb), hs);
    XPoly ss = xsub(R, nd.s, d);
    XPoly ts = xsub(R, xsub(R, nd.t, xmul_freq(R, ft, fb)), xmul_freq(R, forward_all(R, c), fgs));
    nd.g = std::move(gs);
    nd.h = std::move(hs);
    nd.s = std::move(ss);
    nd.t = std::move(ts);
    step_node(R, nd.left, nd.g, last);
    step_node(R, nd.right, nd.h, last);
  }

  void collect(int id, const XPoly& F, std::vector<XPoly>& out) const {
    const LiftNode& nd = nodes_[id];
    if (nd.hi - nd.lo == 1) {
      out[nd.lo] = F;
      return;
    }
    collect(nd.left, nd.g, out);
    collect(nd.right, nd.h, out);
  }

  std::vector<UPoly> leaves_;
  Zp f_;
  std::vector<LiftNode> nodes_;
};

}  // namespace

std::vector<XPoly> hensel_lift(const XPoly& F, const std::vector<std::vector<std::uint32_t>>& univariate_factors,
                               std::uint32_t q, unsigned T, unsigned Y) {
  Zp f{q};
  if (univariate_factors.size() == 1) return {F};
  HenselTree tree(univariate_factors, f);
  {
    SeriesRing R0(q, 1, 1);
    tree.init(R0);
  }
  unsigned curT = 1, curY = 1;
  auto run = [&](unsigned nT, unsigned nY) {
    tree.resize_all(curT, curY, nT, nY);
    SeriesRing R(q, nT, nY);
    XPoly Ft = resize(F, T, Y, nT, nY);
    tree.step(R, Ft, nT == T && nY == Y);
    curT = nT;
    curY = nY;
  };
  while (curT < T) run(std::min(2 * curT, T), 1);
  while (curY < Y) run(T, std::min(2 * curY, Y));
  return tree.leaves();
}

}  // namespace sparsefac::modular

namespace sparsefac::modular {

namespace {

using upz::UPoly;

// Exact polynomial num / D over Q, layout as Grid.
struct IntPoly {
  unsigned nx = 0, nt = 0, ny = 0;
  std::vector<Integer> c;
  Integer D = 1;
  const Integer& at(unsigned i, unsigned a, unsigned b) const { return c[(std::size_t(i) * nt + a) * ny + b]; }
  Integer& at(unsigned i, unsigned a, unsigned b) { return c[(std::size_t(i) * nt + a) * ny + b]; }
};

IntPoly from_dense_q(const DensePoly3& F) {
  DensePoly3 T = F.trimmed();
  IntPoly p;
  p.nx = T.bound_x() + 1;
  p.nt = T.bound_t() + 1;
  p.ny = T.bound_y() + 1;
  for (const auto& v : T.data()) mpz_lcm(p.D.get_mpz_t(), p.D.get_mpz_t(), v.get_den_mpz_t());
  p.c.resize(T.data().size());
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    const Rational& v = T.data()[i];
    p.c[i] = v.get_num() * (p.D / v.get_den());
  }
  return p;
}

DensePoly3 to_dense_q(const IntPoly& p, std::size_t nvars) {
  // trim trailing x-slices
  unsigned nx = p.nx;
  auto slice_zero = [&](unsigned i) {
    for (unsigned a = 0; a < p.nt; ++a)
      for (unsigned b = 0; b < p.ny; ++b)
        if (p.at(i, a, b) != 0) return false;
    return true;
  };
  while (nx > 1 && slice_zero(nx - 1)) --nx;
  DensePoly3 out(nx - 1, p.ny - 1, p.nt - 1, nvars);
  for (unsigned i = 0; i < nx; ++i)
    for (unsigned a = 0; a < p.nt; ++a)
      for (unsigned b = 0; b < p.ny; ++b) {
        Rational v(p.at(i, a, b), p.D);
        v.canonicalize();
        out.at(i, b, a) = v;
      }
  return out.trimmed();
}

Grid reduce(const IntPoly& p, const Zp& f) {
  Grid g(p.nx, p.nt, p.ny);
  std::uint32_t dinv = f.inv(f.reduce(p.D));
  for (std::size_t i = 0; i < p.c.size(); ++i) g.c[i] = f.mul(f.reduce(p.c[i]), dinv);
  return g;
}

// U(x) = F(x, t0, y0) mod q.
UPoly eval_point(const Grid& g, std::uint32_t t0, std::uint32_t y0, const Zp& f) {
  UPoly u(g.nx, 0);
  for (unsigned i = 0; i < g.nx; ++i) {
    std::uint32_t acc = 0;
    for (unsigned a = g.nt; a-- > 0;) {
      std::uint32_t row = 0;
      for (unsigned b = g.ny; b-- > 0;) row = f.add(f.mul(row, y0), g.at(i, a, b));
      acc = f.add(f.mul(acc, t0), row);
    }
    u[i] = acc;
  }
  upz::trim(u);
  return u;
}

bool grid_equal(const Grid& a, const Grid& b) {
  unsigned nx = std::max(a.nx, b.nx), nt = std::max(a.nt, b.nt), ny = std::max(a.ny, b.ny);
  auto get = [](const Grid& g, unsigned i, unsigned t, unsigned y) -> std::uint32_t {
    return (i < g.nx && t < g.nt && y < g.ny) ? g.at(i, t, y) : 0;
  };
  for (unsigned i = 0; i < nx; ++i)
    for (unsigned t = 0; t < nt; ++t)
      for (unsigned y = 0; y < ny; ++y)
        if (get(a, i, t, y) != get(b, i, t, y)) return false;
  return true;
}

Grid grid_mul(const Grid& a, const Grid& b, std::uint32_t q) {
  unsigned T = a.nt + b.nt - 1, Y = a.ny + b.ny - 1;
  SeriesRing R(q, T, Y);
  XPoly p = xmul(R, grid_to_xpoly(a, T, Y), grid_to_xpoly(b, T, Y));
  return xpoly_to_grid(p, T, Y);
}

Grid grid_pow(const Grid& a, unsigned e, std::uint32_t q) {
  Grid r = a;
  for (unsigned i = 1; i < e; ++i) r = grid_mul(r, a, q);
  return r;
}

// Incremental Chinese remaindering of coefficient arrays.
struct CrtAccumulator {
  Integer modulus = 1;
  std::vector<Integer> values;

  void add(const std::vector<std::uint32_t>& residues, std::uint32_t q) {
    if (values.empty()) values.assign(residues.size(), 0);
    if (residues.size() != values.size()) throw InternalError("CRT shape mismatch");
    Zp f{q};
    std::uint32_t minv = f.inv(f.reduce(modulus));
    Integer t;
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::uint32_t cur = f.reduce(values[i]);
      std::uint32_t delta = f.mul(f.sub(residues[i], cur), minv);
      if (delta) values[i] += modulus * static_cast<unsigned long>(delta);
    }
    modulus *= static_cast<unsigned long>(q);
  }

  std::vector<Integer> symmetric() const {
    std::vector<Integer> out = values;
    Integer half = modulus / 2;
    for (auto& v : out)
      if (v > half) v -= modulus;
    return out;
  }
};

Integer norm1(const std::vector<Integer>& v) {
  Integer s = 0;
  for (const auto& c : v) s += abs(c);
  return s;
}

Integer norm_inf(const std::vector<Integer>& v) {
  Integer s = 0;
  for (const auto& c : v)
    if (abs(c) > s) s = abs(c);
  return s;
}

std::vector<std::uint32_t> scaled(const Grid& g, std::uint32_t c, const Zp& f) {
  std::vector<std::uint32_t> v(g.c.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(g.c[i], c);
  return v;
}

Grid pad(const Grid& g, unsigned nx, unsigned nt, unsigned ny) {
  Grid out(nx, nt, ny);
  for (unsigned i = 0; i < std::min(nx, g.nx); ++i)
    for (unsigned a = 0; a < std::min(nt, g.nt); ++a)
      for (unsigned b = 0; b < std::min(ny, g.ny); ++b) out.at(i, a, b) = g.at(i, a, b);
  return out;
}

// Primes able to carry transforms for the given dims.
std::vector<std::uint32_t> usable_primes(unsigned nt, unsigned ny) {
  std::size_t need = next_pow2(std::size_t(4 * nt) * (4 * ny));
  return ntt_primes_for(log2_exact(need));
}

// ---------- squarefree decomposition ----------

void ntt2d(std::vector<std::uint32_t>& a, std::size_t LT, std::size_t LY, const Ntt& ntt, bool inverse) {
  for (std::size_t r = 0; r < LT; ++r) {
    if (inverse) ntt.inverse(a.data() + r * LY, LY);
    else ntt.forward(a.data() + r * LY, LY);
  }
  if (LT > 1) {
    std::vector<std::uint32_t> col(LT);
    for (std::size_t c = 0; c < LY; ++c) {
      for (std::size_t r = 0; r < LT; ++r) col[r] = a[r * LY + c];
      if (inverse) ntt.inverse(col.data(), LT);
      else ntt.forward(col.data(), LT);
      for (std::size_t r = 0; r < LT; ++r) a[r * LY + c] = col[r];
    }
  }
}

using Pattern = std::vector<std::pair<unsigned, unsigned>>;  // (exponent, degree)

struct SqfMod {
  Pattern pattern;
  std::vector<Grid> parts;  // monic in x, one per pattern entry
};

std::optional<SqfMod> squarefree_mod(const Grid& F, std::uint32_t q) {
  Zp f{q};
  const Ntt& ntt = Ntt::get(q);
  std::size_t LT = next_pow2(F.nt), LY = next_pow2(F.ny);
  std::uint32_t g = primitive_root(q);
  for (unsigned attempt = 0; attempt < 6; ++attempt) {
    std::uint32_t gt = f.pow(g, 2 * attempt + 1), gy = f.pow(g, 2 * attempt + 3);
    std::vector<std::vector<std::uint32_t>> vals(F.nx, std::vector<std::uint32_t>(LT * LY, 0));
    for (unsigned i = 0; i < F.nx; ++i) {
      std::uint32_t pt = 1;
      for (unsigned a = 0; a < F.nt; ++a) {
        std::uint32_t py = pt;
        for (unsigned b = 0; b < F.ny; ++b) {
          vals[i][a * LY + b] = f.mul(F.at(i, a, b), py);
          py = f.mul(py, gy);
        }
        pt = f.mul(pt, gt);
      }
      ntt2d(vals[i], LT, LY, ntt, false);
    }
    std::size_t npts = LT * LY;
    std::vector<std::vector<std::pair<UPoly, unsigned>>> dec(npts);
    Pattern best;
    unsigned best_rad = 0;
    std::vector<Pattern> pats(npts);
    for (std::size_t k = 0; k < npts; ++k) {
      UPoly u(F.nx);
      for (unsigned i = 0; i < F.nx; ++i) u[i] = vals[i][k];
      upz::trim(u);
      dec[k] = upz::squarefree(u, f);
      unsigned rad = 0;
      for (const auto& [p, e] : dec[k]) {
        pats[k].push_back({e, static_cast<unsigned>(upz::deg(p))});
        rad += upz::deg(p);
      }
      if (rad > best_rad || k == 0) {
        best_rad = rad;
        best = pats[k];
      }
    }
    bool ok = std::all_of(pats.begin(), pats.end(), [&](const Pattern& p) { return p == best; });
    if (!ok) continue;
    SqfMod out;
    out.pattern = best;
    std::uint32_t gti = f.inv(gt), gyi = f.inv(gy);
    for (std::size_t e = 0; e < best.size(); ++e) {
      unsigned d = best[e].second;
      Grid part(d + 1, F.nt, F.ny);
      for (unsigned i = 0; i <= d; ++i) {
        std::vector<std::uint32_t> v(npts);
        for (std::size_t k = 0; k < npts; ++k) v[k] = dec[k][e].first[i];
        ntt2d(v, LT, LY, ntt, true);
        std::uint32_t pt = 1;
        for (std::size_t a = 0; a < LT; ++a) {
          std::uint32_t py = pt;
          for (std::size_t b = 0; b < LY; ++b) {
            std::uint32_t val = f.mul(v[a * LY + b], py);
            if (a < F.nt && b < F.ny) part.at(i, a, b) = val;
            else if (val != 0) return std::nullopt;  // degree beyond F: inconsistent
            py = f.mul(py, gyi);
          }
          pt = f.mul(pt, gti);
        }
      }
      out.parts.push_back(std::move(part));
    }
    // verify prod part^e == F
    Grid prod;
    bool first = true;
    for (std::size_t e = 0; e < best.size(); ++e) {
      Grid pe = grid_pow(out.parts[e], best[e].first, q);
      prod = first ? pe : grid_mul(prod, pe, q);
      first = false;
    }
    if (!grid_equal(prod, F)) return std::nullopt;
    return out;
  }
  return std::nullopt;
}

bool is_squarefree_mod(const Grid& F, const Zp& f) {
  static const std::uint32_t pts[4][2] = {{3, 5}, {7, 11}, {123457, 654321}, {99991, 31337}};
  for (const auto& p : pts) {
    UPoly u = eval_point(F, p[0] % f.q, p[1] % f.q, f);
    if (upz::deg(u) != static_cast<int>(F.nx) - 1) continue;
    if (upz::is_squarefree(u, f)) return true;
  }
  return false;
}

IntPoly int_from_symmetric(const std::vector<Integer>& v, unsigned nx, unsigned nt, unsigned ny, const Integer& D) {
  IntPoly p;
  p.nx = nx;
  p.nt = nt;
  p.ny = ny;
  p.c = v;
  p.D = D;
  return p;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decompose(const IntPoly& F) {
  auto primes = usable_primes(F.nt, F.ny);
  std::optional<Pattern> ref;
  std::vector<CrtAccumulator> acc;
  for (std::uint32_t q : primes) {
    Zp f{q};
    if (f.reduce(F.D) == 0) continue;
    Grid Fq = reduce(F, f);
    if (!ref && is_squarefree_mod(Fq, f)) return {{F, 1}};
    auto s = squarefree_mod(Fq, q);
    if (!s) continue;
    unsigned rad = 0;
    for (auto& [e, d] : s->pattern) rad += d;
    if (ref) {
      unsigned ref_rad = 0;
      for (auto& [e, d] : *ref) ref_rad += d;
      if (rad < ref_rad || (rad == ref_rad && s->pattern != *ref)) continue;
      if (rad > ref_rad) {
        acc.clear();
        ref.reset();
      }
    }
    if (!ref) {
      ref = s->pattern;
      acc.assign(ref->size(), CrtAccumulator{});
    }
    std::uint32_t dq = f.reduce(F.D);
    for (std::size_t e = 0; e < ref->size(); ++e) acc[e].add(scaled(s->parts[e], dq, f), q);
    // certificate: prod ||D P_e||_1^e and ||D^{sum e} F||_inf below M/2
    Integer M = acc[0].modulus;
    Integer lhs = 1;
    unsigned total_e = 0;
    std::vector<std::vector<Integer>> sym(ref->size());
    for (std::size_t e = 0; e < ref->size(); ++e) {
      sym[e] = acc[e].symmetric();
      lhs *= integer_pow(norm1(sym[e]), (*ref)[e].first);
      total_e += (*ref)[e].first;
    }
    Integer rhs = norm_inf(F.c) * integer_pow(F.D, total_e - 1);
    if (2 * lhs < M && 2 * rhs < M) {
      // exact product check is implied by the congruence plus the norm bounds
      std::vector<std::pair<IntPoly, unsigned>> out;
      for (std::size_t e = 0; e < ref->size(); ++e)
        out.push_back({int_from_symmetric(sym[e], (*ref)[e].second + 1, F.nt, F.ny, F.D), (*ref)[e].first});
      return out;
    }
  }
  throw CapError("squarefree decomposition needs more certification primes than available");
}

}  // namespace

}  // namespace sparsefac::modular

namespace sparsefac::modular {

namespace {

ZPoly eval_int(const IntPoly& F, long t0, long y0) {
  ZPoly u(F.nx, 0);
  Integer tz = t0, yz = y0;
  for (unsigned i = 0; i < F.nx; ++i) {
    Integer acc = 0;
    for (unsigned a = F.nt; a-- > 0;) {
      Integer row = 0;
      for (unsigned b = F.ny; b-- > 0;) row = row * yz + F.at(i, a, b);
      acc = acc * tz + row;
    }
    u[i] = acc;
  }
  zpoly::trim(u);
  return u;
}

std::vector<std::pair<long, long>> lift_points(bool use_t, bool use_y, std::size_t count) {
  std::vector<std::pair<long, long>> pts;
  for (long r = 0; pts.size() < count; ++r) {
    for (long a = -r; a <= r && pts.size() < count; ++a) {
      long rest = r - std::labs(a);
      for (long b : {rest, -rest}) {
        if (!use_t && a != 0) continue;
        if (!use_y && b != 0) continue;
        pts.push_back({a, b});
        if (rest == 0) break;
      }
    }
    if (!use_t && !use_y) break;
  }
  return pts;
}

std::uint32_t mod_signed(long v, const Zp& f) { return f.from_int(v); }

UPoly eval_xpoly(const XPoly& p, unsigned T, unsigned Y, std::uint32_t t, std::uint32_t y, const Zp& f) {
  UPoly u(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::uint32_t acc = 0;
    for (unsigned a = T; a-- > 0;) {
      std::uint32_t row = 0;
      for (unsigned b = Y; b-- > 0;) row = f.add(f.mul(row, y), p[i][std::size_t(a) * Y + b]);
      acc = f.add(f.mul(acc, t), row);
    }
    u[i] = acc;
  }
  upz::trim(u);
  return u;
}

struct PrimeData {
  std::uint32_t q = 0;
  std::vector<XPoly> leaves;
  XPoly fcur;  // shifted current cofactor at ring2 precision
  bool fcur_valid = false;
};

class Recombiner {
 public:
  Recombiner(const IntPoly& F, long t0, long y0, std::vector<QPoly> uni)
      : F0_(F), cur_(F), t0_(t0), y0_(y0), uni_(std::move(uni)), T_(F.nt), Y_(F.ny) {
    primes_ = usable_primes(F.nt, F.ny);
  }

  std::vector<IntPoly> run() {
    std::vector<std::size_t> rem(uni_.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = i;
    std::vector<IntPoly> found;
    PrimeData* p0 = prime(0);
    std::size_t s = 1;
    while (2 * s <= rem.size()) {
      bool hit = false;
      std::vector<std::size_t> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      do {
        std::vector<std::size_t> S, C;
        std::size_t pos = 0;
        for (std::size_t i = 0; i < rem.size(); ++i) {
          if (pos < s && idx[pos] == i) {
            S.push_back(rem[i]);
            ++pos;
          } else {
            C.push_back(rem[i]);
          }
        }
        if (!test_mod(*p0, S, C)) continue;
        auto cert = certify(S, C);
        if (!cert) continue;
        found.push_back(cert->first);
        cur_ = cert->second;
        for (auto& pd : data_) pd.fcur_valid = false;
        rem = C;
        hit = true;
        break;
      } while (next_subset(idx, rem.size()));
      if (!hit) ++s;
    }
    found.push_back(cur_);
    return found;
  }

 private:
  static bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] < n - k + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  // k-th usable prime's data, lifting on first use.
  PrimeData* prime(std::size_t k) {
    while (data_.size() <= k) {
      if (next_prime_ >= primes_.size()) return nullptr;
      std::uint32_t q = primes_[next_prime_++];
      auto pd = make(q);
      if (pd) data_.push_back(std::move(*pd));
    }
    return &data_[k];
  }

  std::optional<PrimeData> make(std::uint32_t q) {
    Zp f{q};
    if (f.reduce(F0_.D) == 0) return std::nullopt;
    std::vector<UPoly> ufac;
    for (const auto& u : uni_) {
      UPoly v(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (f.reduce(u[i].get_den()) == 0) return std::nullopt;
        v[i] = f.reduce(u[i]);
      }
      upz::trim(v);
      ufac.push_back(v);
    }
    UPoly prod{1};
    for (const auto& v : ufac) prod = upz::mul(prod, v, f);
    if (!upz::is_squarefree(prod, f)) return std::nullopt;
    Grid Fs = shift_grid(reduce(F0_, f), mod_signed(t0_, f), mod_signed(y0_, f), f);
    XPoly FX = grid_to_xpoly(Fs, T_, Y_);
    PrimeData pd;
    pd.q = q;
    pd.leaves = hensel_lift(FX, ufac, q, T_, Y_);
    return pd;
  }

  XPoly product(const PrimeData& pd, const std::vector<std::size_t>& S) const {
    SeriesRing R(pd.q, T_, Y_);
    XPoly acc{R.one()};
    for (auto i : S) acc = xmul(R, acc, pd.leaves[i]);
    return acc;
  }

  const XPoly& fcur(PrimeData& pd) {
    if (!pd.fcur_valid) {
      Zp f{pd.q};
      Grid Fs = shift_grid(reduce(cur_, f), mod_signed(t0_, f), mod_signed(y0_, f), f);
      pd.fcur = grid_to_xpoly(Fs, 2 * T_ - 1, 2 * Y_ - 1);
      pd.fcur_valid = true;
    }
    return pd.fcur;
  }

  bool test_mod(PrimeData& pd, const std::vector<std::size_t>& S, const std::vector<std::size_t>& C) {
    XPoly G = product(pd, S), H = product(pd, C);
    unsigned T2 = 2 * T_ - 1, Y2 = 2 * Y_ - 1;
    SeriesRing R2(pd.q, T2, Y2);
    XPoly G2 = resize(G, T_, Y_, T2, Y2), H2 = resize(H, T_, Y_, T2, Y2);
    const XPoly& Fc = fcur(pd);
    Zp f{pd.q};
    for (std::uint32_t pt : {2654435761u % pd.q, 40503u}) {
      std::uint32_t tp = f.mul(pt, 97u);
      UPoly gv = eval_xpoly(G, T_, Y_, tp, pt, f), hv = eval_xpoly(H, T_, Y_, tp, pt, f);
      if (upz::mul(gv, hv, f) != eval_xpoly(Fc, T2, Y2, tp, pt, f)) return false;
    }
    return xmul(R2, G2, H2) == Fc;
  }

  std::optional<std::pair<IntPoly, IntPoly>> certify(const std::vector<std::size_t>& S,
                                                     const std::vector<std::size_t>& C) {
    CrtAccumulator ag, ah;
    unsigned nxg = 1, nxh = 1;
    for (auto i : S) nxg += static_cast<unsigned>(uni_[i].size() - 1);
    for (auto i : C) nxh += static_cast<unsigned>(uni_[i].size() - 1);
    Integer rhs = norm_inf(cur_.c) * cur_.D;
    for (std::size_t k = 0;; ++k) {
      PrimeData* pd = prime(k);
      if (!pd) throw CapError("factor certification needs more primes than available");
      if (k > 0 && !test_mod(*pd, S, C)) return std::nullopt;
      Zp f{pd->q};
      std::uint32_t tb = f.neg(mod_signed(t0_, f)), yb = f.neg(mod_signed(y0_, f));
      Grid G = shift_grid(pad(xpoly_to_grid(product(*pd, S), T_, Y_), nxg, T_, Y_), tb, yb, f);
      Grid H = shift_grid(pad(xpoly_to_grid(product(*pd, C), T_, Y_), nxh, T_, Y_), tb, yb, f);
      std::uint32_t dq = f.reduce(cur_.D);
      ag.add(scaled(G, dq, f), pd->q);
      ah.add(scaled(H, dq, f), pd->q);
      auto sg = ag.symmetric(), sh = ah.symmetric();
      const Integer& M = ag.modulus;
      if (2 * norm1(sg) * norm_inf(sh) < M && 2 * rhs < M) {
        return std::make_pair(int_from_symmetric(sg, nxg, T_, Y_, cur_.D),
                              int_from_symmetric(sh, nxh, T_, Y_, cur_.D));
      }
    }
  }

  IntPoly F0_, cur_;
  long t0_, y0_;
  std::vector<QPoly> uni_;
  unsigned T_, Y_;
  std::vector<std::uint32_t> primes_;
  std::size_t next_prime_ = 0;
  std::deque<PrimeData> data_;
};

std::vector<IntPoly> factor_squarefree(const IntPoly& F) {
  if (F.nx <= 2) return {F};
  bool use_t = F.nt > 1, use_y = F.ny > 1;
  std::optional<std::pair<long, long>> best_pt;
  std::vector<ZPoly> best;
  unsigned valid = 0;
  for (auto [t0, y0] : lift_points(use_t, use_y, 400)) {
    ZPoly u = eval_int(F, t0, y0);
    ZPoly up = zpoly::primitive_part(u);
    if (zpoly::deg(zpoly::gcd(up, zpoly::derivative(up))) > 0) continue;
    std::vector<ZPoly> fac = zassenhaus(up);
    if (!best_pt || fac.size() < best.size()) {
      best = std::move(fac);
      best_pt = std::make_pair(t0, y0);
    }
    if (best.size() == 1 || ++valid >= 3 || (!use_t && !use_y)) break;
  }
  if (!best_pt) throw InternalError("no squarefree specialization found");
  if (best.size() == 1) return {F};
  std::vector<QPoly> uni;
  for (const auto& g : best) uni.push_back(to_monic_q(g));
  std::sort(uni.begin(), uni.end(), [](const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  Recombiner rc(F, best_pt->first, best_pt->second, std::move(uni));
  return rc.run();
}

}  // namespace

std::vector<std::pair<DensePoly3, unsigned>> factor_monic(const DensePoly3& F) {
  if (!F.is_monic_in_x()) throw InternalError("factor_monic requires a polynomial monic in x");
  IntPoly P = from_dense_q(F);
  std::vector<std::pair<DensePoly3, unsigned>> out;
  if (P.nx <= 1) return out;
  for (const auto& [part, e] : squarefree_decompose(P)) {
    if (part.nx <= 1) continue;
    for (const auto& g : factor_squarefree(part)) out.push_back({to_dense_q(g, F.nvars()), e});
  }
  return out;
}

}  // namespace sparsefac::modular
