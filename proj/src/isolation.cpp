#include "sparsefac/isolation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include <json.hpp>

#include "sparsefac/errors.hpp"
#include "sparsefac/zp.hpp"

namespace sparsefac {

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned delta) {
  std::vector<Monomial> out;
  Monomial e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i == n) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, delta);
  return out;
}

std::uint64_t weight_of(const Monomial& e, const std::vector<std::uint64_t>& w) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * w[i];
  return s;
}

namespace {

std::vector<std::uint64_t> residues(const std::vector<Monomial>& exps, const std::vector<std::uint64_t>& w,
                                    std::uint64_t p) {
  std::vector<std::uint64_t> r(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) r[i] = weight_of(exps[i], w) % p;
  return r;
}

std::vector<std::uint64_t> kronecker_weights(std::size_t n, unsigned base_degree, std::uint64_t p) {
  std::vector<std::uint64_t> w(n);
  std::uint64_t cur = 1 % p;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = cur;
    cur = static_cast<std::uint64_t>((static_cast<unsigned __int128>(cur) * (base_degree + 1)) % p);
  }
  return w;
}

std::uint64_t next_prime(std::uint64_t c) {
  while (!is_prime_u64(c)) ++c;
  return c;
}

std::map<std::uint64_t, Monomial> build_table(const std::vector<Monomial>& exps, const std::vector<std::uint64_t>& w) {
  std::map<std::uint64_t, Monomial> t;
  for (const auto& e : exps) t.emplace(weight_of(e, w), e);
  return t;
}

}  // namespace

bool injective_mod_p_serial(const std::vector<Monomial>& exps, const std::vector<std::uint64_t>& w, std::uint64_t p) {
  auto r = residues(exps, w, p);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (r[i] == r[j]) return false;
  return true;
}

bool injective_mod_p_parallel(const std::vector<Monomial>& exps, const std::vector<std::uint64_t>& w,
                              std::uint64_t p) {
  auto r = residues(exps, w, p);
  const long N = static_cast<long>(r.size());
  std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < N; ++i) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    for (long j = i + 1; j < N; ++j)
      if (r[i] == r[j]) {
        ok.store(false, std::memory_order_relaxed);
        break;
      }
  }
  return ok.load();
}

namespace {

std::uint64_t smallest_injective_prime(std::size_t n, unsigned delta, std::uint64_t floor) {
  auto exps = monomials_up_to(n, delta);
  // analytic ceiling ((delta+1)^3 n^(2 delta+1))^2, used only as a safety net
  long double ceiling = std::pow(std::pow(static_cast<long double>(delta + 1), 3) *
                                     std::pow(static_cast<long double>(n), 2 * delta + 1),
                                 2);
  std::uint64_t p = next_prime(std::max<std::uint64_t>(2, floor));
  for (;; p = next_prime(p + 1)) {
    if (static_cast<long double>(p) > std::max<long double>(ceiling, 1e6) + floor)
      throw InternalError("isolating prime search exceeded the proven bound");
    if (p < exps.size()) continue;  // pigeonhole
    auto w = kronecker_weights(n, delta, p);
    bool ok = exps.size() > 4096 ? injective_mod_p_parallel(exps, w, p) : injective_mod_p_serial(exps, w, p);
    if (ok) return p;
  }
}

}  // namespace

IsolationScheme find_isolating_prime(std::size_t n, unsigned delta, std::uint64_t extra_capacity) {
  if (n == 0 || delta == 0) throw ArityError("isolation needs n >= 1 and delta >= 1");
  IsolationScheme s;
  s.n = n;
  s.delta = delta;
  s.iso_degree = delta;
  s.p = smallest_injective_prime(n, delta, extra_capacity);
  s.w = kronecker_weights(n, delta, s.p);
  s.table_w = build_table(monomials_up_to(n, delta), s.w);
  return s;
}

IsolationScheme psi_scheme(std::size_t n, unsigned delta, const Config& cfg) {
  if (n == 0 || delta == 0) throw ArityError("isolation needs n >= 1 and delta >= 1");
  if (delta > cfg.max_delta) throw CapError("delta exceeds the configured max_delta");
  unsigned long long full = 2ULL * delta * delta * delta * delta * delta;
  unsigned cap = cfg.iso_degree_cap == 0 ? delta : cfg.iso_degree_cap;
  unsigned D = static_cast<unsigned>(std::min<unsigned long long>(full, std::max(cap, delta)));
  IsolationScheme s;
  s.n = n;
  s.delta = delta;
  s.iso_degree = D;
  s.p = smallest_injective_prime(2 * n, D, 1);
  auto w2 = kronecker_weights(2 * n, D, s.p);
  s.w.assign(w2.begin(), w2.begin() + n);
  s.w_prime.assign(w2.begin() + n, w2.end());
  auto exps = monomials_up_to(n, delta);
  s.table_w = build_table(exps, s.w);
  s.table_w_prime = build_table(exps, s.w_prime);
  return s;
}

std::string IsolationScheme::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["w"] = w;
  j["w_prime"] = w_prime;
  j["delta"] = delta;
  j["iso_degree"] = iso_degree;
  j["n"] = n;
  return j.dump();
}

SparsePoly apply_phi(const SparsePoly& f, const IsolationScheme& s) {
  bool with_x = f.nvars() == s.n + 1;
  if (!with_x && f.nvars() != s.n) throw ArityError("apply_phi: variable count does not match the scheme");
  std::size_t off = with_x ? 1 : 0;
  SparsePoly out(off + 1);
  for (const auto& [m, c] : f.terms()) {
    Monomial e(m.begin() + off, m.end());
    Monomial img(off + 1, 0);
    if (with_x) img[0] = m[0];
    img[off] = static_cast<std::uint32_t>(weight_of(e, s.w));
    out.add_term(img, c);
  }
  return out;
}

SparsePoly recover_from_phi(const SparsePoly& h, const IsolationScheme& s) {
  bool with_x = h.nvars() == 2;
  if (!with_x && h.nvars() != 1) throw ArityError("recover_from_phi expects a polynomial in y or (x, y)");
  std::size_t off = with_x ? 1 : 0;
  SparsePoly out(s.n + off);
  for (const auto& [m, c] : h.terms()) {
    auto it = s.table_w.find(m[off]);
    if (it == s.table_w.end()) throw NotInCodomain("y-exponent " + std::to_string(m[off]) + " is not in the table");
    Monomial img(s.n + off, 0);
    if (with_x) img[0] = m[0];
    std::copy(it->second.begin(), it->second.end(), img.begin() + off);
    if (monomial_degree(img) > s.delta) throw NotInCodomain("preimage exceeds the degree bound");
    out.add_term(img, c);
  }
  return out;
}

DensePoly3 psi_map(const SparsePoly& f, const IsolationScheme& s, std::size_t max_cells) {
  if (f.nvars() != s.n + 1) throw ArityError("psi_map expects a polynomial over (x, z1..zn)");
  if (s.w_prime.size() != s.n) throw ArityError("psi_map needs a scheme with w'");
  unsigned dx = 0, dt = 0;
  std::uint64_t dy = 0;
  std::uint64_t wmax = 0;
  for (std::size_t i = 0; i < s.n; ++i) wmax = std::max({wmax, s.w[i], s.w_prime[i]});
  for (const auto& [m, c] : f.terms()) {
    dx = std::max(dx, m[0]);
    unsigned zd = monomial_degree(m) - m[0];
    dt = std::max(dt, zd);
    dy = std::max<std::uint64_t>(dy, zd * wmax);
  }
  long double cells = static_cast<long double>(dx + 1) * (dt + 1) * (dy + 1);
  if (cells > static_cast<long double>(max_cells)) throw CapError("Psi image exceeds max_dense_cells");
  DensePoly3 out(dx, static_cast<unsigned>(dy), dt, 3);
  // binomial rows
  std::vector<std::vector<Integer>> binom{{1}};
  for (const auto& [m, c] : f.terms()) {
    // sparse expansion of prod (y^{w_i} t + y^{w'_i})^{e_i} as (t-degree, y-degree) -> coefficient
    std::map<std::pair<unsigned, std::uint64_t>, Integer> acc{{{0, 0}, Integer(1)}};
    for (std::size_t i = 0; i < s.n; ++i) {
      unsigned e = m[i + 1];
      if (e == 0) continue;
      while (binom.size() <= e) {
        const auto& prev = binom.back();
        std::vector<Integer> row(prev.size() + 1, Integer(1));
        for (std::size_t k = 1; k < prev.size(); ++k) row[k] = prev[k - 1] + prev[k];
        binom.push_back(row);
      }
      std::map<std::pair<unsigned, std::uint64_t>, Integer> next;
      for (const auto& [key, v] : acc) {
        for (unsigned j = 0; j <= e; ++j) {
          std::pair<unsigned, std::uint64_t> k2{key.first + j, key.second + s.w[i] * j + s.w_prime[i] * (e - j)};
          next[k2] += v * binom[e][j];
        }
      }
      acc = std::move(next);
    }
    for (const auto& [key, v] : acc) out.at(m[0], static_cast<unsigned>(key.second), key.first) += c * v;
  }
  return out.trimmed();
}

SparsePoly psi_invert(const DensePoly3& h, const IsolationScheme& s) {
  if (s.w_prime.size() != s.n) throw ArityError("psi_invert needs a scheme with w'");
  if (!h.is_monic_in_x()) throw NotInCodomain("image is not monic in x");
  if (h.degree_x() > s.delta) throw NotInCodomain("x-degree exceeds the degree bound");
  SparsePoly g(s.n + 1);
  for (unsigned i = 0; i <= h.bound_x(); ++i) {
    for (unsigned j = 0; j <= h.bound_y(); ++j) {
      const Rational& c = h.at(i, j, 0);
      if (c == 0) continue;
      auto it = s.table_w_prime.find(j);
      if (it == s.table_w_prime.end()) throw NotInCodomain("y-exponent not in the w' table");
      Monomial m(s.n + 1, 0);
      m[0] = i;
      std::copy(it->second.begin(), it->second.end(), m.begin() + 1);
      if (monomial_degree(m) > s.delta) throw NotInCodomain("reconstructed degree exceeds the bound");
      g.add_term(m, c);
    }
  }
  if (!(psi_map(g, s) == h.trimmed())) throw NotInCodomain("Psi of the reconstruction differs from the image");
  return g;
}

}  // namespace sparsefac
