#include "sparsefac/irredproj.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "sparsefac/errors.hpp"

namespace sparsefac {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t a, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r = sat_mul(r, a);
  return r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

Rational rpow(std::uint64_t a, std::uint64_t e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), a, e);
  return Rational(r);
}

}  // namespace

ConstantDegreeOracle::ConstantDegreeOracle(unsigned delta, std::size_t n, unsigned d, const Config& cfg)
    : delta_(delta), scheme_(psi_scheme(n, delta, cfg)) {
  (void)d;
  std::uint64_t wmax = 0;
  for (std::size_t i = 0; i < n; ++i) wmax = std::max({wmax, scheme_.w[i], scheme_.w_prime[i]});
  D_ = sat_mul(2 * sat_pow(delta, 5), wmax);
}

std::string ConstantDegreeOracle::name() const { return "constant-degree:" + std::to_string(delta_); }

bool ConstantDegreeOracle::member(const SparsePoly& f) const {
  return !f.is_zero() && f.total_degree() <= delta_;
}

std::uint64_t ConstantDegreeOracle::count(const Point&) const { return sat_add(D_, 1); }

ProjectionRecord ConstantDegreeOracle::at(const Point&, std::uint64_t k) const {
  std::uint64_t a = k + 1;
  ProjectionRecord r;
  for (std::size_t i = 0; i < scheme_.n; ++i) {
    r.beta.push_back(rpow(a, scheme_.w[i]));
    r.gamma.push_back(rpow(a, scheme_.w_prime[i]));
  }
  return r;
}

SuOracle::SuOracle(std::size_t n, unsigned d, const Config& cfg, bool allow_sampling) : n_(n) {
  if (d == 0) throw ArityError("SU oracle needs d >= 1");
  G_ = 2 * sat_pow(d, 5) + 1;
  std::vector<std::size_t> cur;
  if (n == 1) branches_.push_back({0});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) branches_.push_back({i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) branches_.push_back({i, j, k});
  for (const auto& b : branches_) {
    branch_sizes_.push_back(sat_pow(G_, static_cast<unsigned>(2 * b.size())));
    full_ = sat_add(full_, branch_sizes_.back());
  }
  if (full_ > cfg.su_cap) {
    if (!allow_sampling)
      throw CapError("SU oracle hitting set has " + std::to_string(full_) + " points (grid side 2d^5+1 = " +
                     std::to_string(G_) + "), above su_cap = " + std::to_string(cfg.su_cap));
    sampled_ = true;
    sample_ = std::min<std::uint64_t>(cfg.su_sample, full_);
  }
}

bool SuOracle::member(const SparsePoly& f) const { return su_membership(f); }

std::uint64_t SuOracle::count(const Point&) const { return sampled_ ? sample_ : full_; }

ProjectionRecord SuOracle::branch_point(std::size_t b, std::uint64_t idx) const {
  const auto& vars = branches_[b];
  ProjectionRecord r;
  r.beta.assign(n_, Rational(0));
  r.gamma.assign(n_, Rational(0));
  // digits: beta of each chosen variable, then gamma, last gamma fastest
  std::vector<std::uint64_t> digits(2 * vars.size());
  for (std::size_t i = digits.size(); i-- > 0;) {
    digits[i] = idx % G_ + 1;
    idx /= G_;
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    r.beta[vars[i]] = digits[i];
    r.gamma[vars[i]] = digits[vars.size() + i];
  }
  for (std::size_t l = 0; l < n_; ++l)
    if (std::find(vars.begin(), vars.end(), l) == vars.end()) r.absorb.push_back(l);
  return r;
}

ProjectionRecord SuOracle::at(const Point&, std::uint64_t k) const {
  if (!sampled_) {
    for (std::size_t b = 0; b < branches_.size(); ++b) {
      if (k < branch_sizes_[b]) return branch_point(b, k);
      k -= branch_sizes_[b];
    }
    throw ArityError("projection index out of range");
  }
  // round-robin over branches, scrambled position inside each grid
  std::size_t B = branches_.size();
  std::size_t b = k % B;
  std::uint64_t local = k / B;
  const std::uint64_t stride = 2147483647ULL;
  std::uint64_t N = branch_sizes_[b];
  unsigned __int128 pos = (static_cast<unsigned __int128>(local) * stride) % N;
  return branch_point(b, static_cast<std::uint64_t>(pos));
}

ProjectionRecord RandomOracle::at(const Point&, std::uint64_t k) const {
  std::mt19937_64 rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (k + 1)));
  std::uniform_int_distribution<long> dist(1, 1 << 20);
  ProjectionRecord r;
  for (std::size_t i = 0; i < n_; ++i) {
    r.beta.push_back(dist(rng));
    r.gamma.push_back(dist(rng));
  }
  return r;
}

std::unique_ptr<IrredProjOracle> constant_degree_oracle(unsigned delta, std::size_t n, unsigned d,
                                                        const Config& cfg) {
  return std::make_unique<ConstantDegreeOracle>(delta, n, d, cfg);
}

std::unique_ptr<IrredProjOracle> su_oracle(std::size_t n, unsigned d, const Config& cfg, bool allow_sampling) {
  return std::make_unique<SuOracle>(n, d, cfg, allow_sampling);
}

bool su_membership(const SparsePoly& f) {
  for (const auto& [m, c] : f.terms()) {
    int used = 0;
    for (auto e : m) used += e != 0;
    if (used > 1) return false;
  }
  return true;
}

std::optional<bool> su_is_irreducible_by_support(const SparsePoly& f) {
  if (!su_membership(f)) throw ArityError("su_is_irreducible_by_support expects a sum of univariates");
  if (var_support(f).size() >= 3) return true;
  return std::nullopt;
}

SparsePoly project2(const SparsePoly& f, const Point& alpha, const ProjectionRecord& r) {
  std::vector<SparsePoly> img;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    SparsePoly l = SparsePoly::variable(2, 0) * alpha[i];
    l += SparsePoly::variable(2, 1) * r.beta[i];
    l += SparsePoly::constant(2, r.gamma[i]);
    img.push_back(std::move(l));
  }
  return substitute(f, img);
}

}  // namespace sparsefac
