#include "sparsefac/upoly_zp.hpp"

#include "sparsefac/errors.hpp"
#include "sparsefac/ntt.hpp"

namespace sparsefac::upz {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b, const Zp& f) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b, const Zp& f) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b, const Zp& f) {
  UPoly r = convolve(a, b, f.q);
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, std::uint32_t c, const Zp& f) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b, const Zp& f) {
  if (b.empty()) throw InternalError("polynomial division by zero mod q");
  if (a.size() < b.size()) return {UPoly{}, a};
  UPoly r = a;
  UPoly quo(a.size() - b.size() + 1, 0);
  std::uint32_t inv_lc = f.inv(b.back());
  std::size_t db = b.size() - 1;
  for (std::size_t k = a.size(); k-- > db;) {
    std::uint32_t c = f.mul(r[k], inv_lc);
    quo[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(c, b[j]));
  }
  r.resize(db);
  trim(r);
  trim(quo);
  return {quo, r};
}

UPoly rem(const UPoly& a, const UPoly& b, const Zp& f) { return divrem(a, b, f).second; }

UPoly monic(const UPoly& a, const Zp& f) {
  if (a.empty()) return a;
  return scale(a, f.inv(a.back()), f);
}

UPoly gcd(UPoly a, UPoly b, const Zp& f) {
  while (!b.empty()) {
    UPoly r = rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, f);
}

Xgcd xgcd(const UPoly& a, const UPoly& b, const Zp& f) {
  UPoly r0 = a, r1 = b;
  UPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, f);
    UPoly s2 = sub(s0, mul(q, s1, f), f);
    UPoly t2 = sub(t0, mul(q, t1, f), f);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  std::uint32_t inv = f.inv(r0.back());
  return {scale(r0, inv, f), scale(s0, inv, f), scale(t0, inv, f)};
}

UPoly derivative(const UPoly& a, const Zp& f) {
  if (a.size() <= 1) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = f.mul(a[i], static_cast<std::uint32_t>(i % f.q));
  trim(r);
  return r;
}

std::uint32_t eval(const UPoly& a, std::uint32_t x, const Zp& f) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = f.add(f.mul(v, x), a[i]);
  return v;
}

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& m, const Zp& f) {
  UPoly r{1};
  r = rem(r, m, f);
  UPoly b = rem(base, m, f);
  while (e) {
    if (e & 1) r = rem(mul(r, b, f), m, f);
    e >>= 1;
    if (e) b = rem(mul(b, b, f), m, f);
  }
  return r;
}

std::vector<std::pair<UPoly, unsigned>> squarefree(const UPoly& a, const Zp& f) {
  std::vector<std::pair<UPoly, unsigned>> out;
  if (deg(a) <= 0) return out;
  UPoly am = monic(a, f);
  UPoly b = derivative(am, f);
  UPoly c = gcd(am, b, f);
  UPoly w = divrem(am, c, f).first;
  UPoly y = divrem(b, c, f).first;
  UPoly z = sub(y, derivative(w, f), f);
  unsigned i = 1;
  while (deg(w) > 0) {
    UPoly g = gcd(w, z, f);
    if (deg(g) > 0) out.emplace_back(g, i);
    w = divrem(w, g, f).first;
    y = divrem(z, g, f).first;
    z = sub(y, derivative(w, f), f);
    ++i;
  }
  return out;
}

bool is_squarefree(const UPoly& a, const Zp& f) {
  if (deg(a) <= 0) return true;
  return deg(gcd(a, derivative(a, f), f)) == 0;
}

std::vector<UPoly> berlekamp(const UPoly& a, const Zp& f) {
  int n = deg(a);
  if (n <= 1) return {a};
  // rows: x^{q i} mod a
  std::vector<std::vector<std::uint32_t>> mat(n, std::vector<std::uint32_t>(n, 0));
  UPoly xq = powmod(UPoly{0, 1}, f.q, a, f);
  UPoly cur{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) mat[i][j] = cur[j];
    cur = rem(mul(cur, xq, f), a, f);
  }
  // nullspace of (Q - I)^T
  std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[j][i] = f.sub(mat[i][j], i == j ? 1 : 0);
  std::vector<int> pivot_col_of_row;
  std::vector<int> where(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col]) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[row]);
    std::uint32_t inv = f.inv(m[row][col]);
    for (int j = 0; j < n; ++j) m[row][j] = f.mul(m[row][j], inv);
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      std::uint32_t c = m[r][col];
      for (int j = 0; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(c, m[row][j]));
    }
    where[col] = row;
    ++row;
  }
  std::vector<UPoly> basis;
  for (int free = 0; free < n; ++free) {
    if (where[free] >= 0) continue;
    UPoly v(n, 0);
    v[free] = 1;
    for (int col = 0; col < n; ++col)
      if (where[col] >= 0) v[col] = f.neg(m[where[col]][free]);
    trim(v);
    basis.push_back(v);
  }
  std::size_t r = basis.size();
  std::vector<UPoly> factors{monic(a, f)};
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    if (deg(v) <= 0) continue;
    for (std::uint32_t s = 0; s < f.q && factors.size() < r; ++s) {
      std::vector<UPoly> next;
      for (const auto& h : factors) {
        if (deg(h) <= 1) {
          next.push_back(h);
          continue;
        }
        UPoly vs = v;
        vs[0] = f.sub(vs[0], s);
        trim(vs);
        UPoly g = gcd(h, vs, f);
        if (deg(g) > 0 && deg(g) < deg(h)) {
          next.push_back(g);
          next.push_back(divrem(h, g, f).first);
        } else {
          next.push_back(h);
        }
      }
      factors = std::move(next);
    }
  }
  return factors;
}

}  // namespace sparsefac::upz
