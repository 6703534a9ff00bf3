#include "sparsefac/sparse_poly.hpp"

#include <algorithm>
#include <numeric>

#include "sparsefac/errors.hpp"

namespace sparsefac {

unsigned monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

unsigned Degree::value() const {
  if (!value_) throw ZeroPolynomialError("degree of the zero polynomial is -infinity");
  return *value_;
}

SparsePoly SparsePoly::constant(std::size_t nvars, const Rational& c) {
  SparsePoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw ArityError("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = 1;
  return term(m, Rational(1));
}

SparsePoly SparsePoly::term(const Monomial& m, const Rational& c) {
  SparsePoly p(m.size());
  p.add_term(m, c);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
}

Degree SparsePoly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree(monomial_degree(terms_.begin()->first));
}

unsigned SparsePoly::total_degree() const { return degree().value(); }

unsigned SparsePoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw ArityError("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

const Monomial& SparsePoly::leading_monomial() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading monomial of zero");
  return terms_.begin()->first;
}

const Rational& SparsePoly::leading_coefficient() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading coefficient of zero");
  return terms_.begin()->second;
}

Rational SparsePoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw ArityError("evaluation point arity mismatch");
  std::vector<std::vector<Rational>> powers(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) powers[i].push_back(Rational(1));
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
      v *= pw[m[i]];
    }
    sum += v;
  }
  return sum;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.nvars_ != nvars_) throw ArityError("variable-count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.nvars_ != nvars_) throw ArityError("variable-count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.nvars() != b.nvars()) throw ArityError("variable-count mismatch");
  SparsePoly out(a.nvars());
  Monomial m(a.nvars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

SparsePoly pow(const SparsePoly& f, unsigned e) {
  SparsePoly result = SparsePoly::constant(f.nvars(), Rational(1));
  SparsePoly base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

SparsePoly mul_monomial(const SparsePoly& f, const Monomial& m, const Rational& c) {
  SparsePoly out(f.nvars());
  if (c == 0) return out;
  Monomial mm(f.nvars());
  for (const auto& [mf, cf] : f.terms()) {
    for (std::size_t i = 0; i < mm.size(); ++i) mm[i] = mf[i] + m[i];
    out.add_term(mm, cf * c);
  }
  return out;
}

SparsePoly substitute(const SparsePoly& f, const std::vector<SparsePoly>& images) {
  if (images.size() != f.nvars()) throw ArityError("substitution must cover every variable");
  std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw ArityError("substitution images disagree on variable count");
  std::vector<std::vector<SparsePoly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(SparsePoly::constant(target, Rational(1)));
  SparsePoly out(target);
  for (const auto& [m, c] : f.terms()) {
    SparsePoly t = SparsePoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[m[i]];
    }
    out += t;
  }
  return out;
}

SparsePoly partial_evaluate(const SparsePoly& f, std::size_t var, const Rational& value) {
  if (var >= f.nvars()) throw ArityError("variable index out of range");
  SparsePoly out(f.nvars());
  std::vector<Rational> pw{Rational(1)};
  for (const auto& [m, c] : f.terms()) {
    while (pw.size() <= m[var]) pw.push_back(pw.back() * value);
    Monomial mm = m;
    mm[var] = 0;
    out.add_term(mm, c * pw[m[var]]);
  }
  return out;
}

SparsePoly remap_variables(const SparsePoly& f, std::size_t new_nvars, const std::vector<std::size_t>& index_map) {
  if (index_map.size() != f.nvars()) throw ArityError("remap must cover every variable");
  SparsePoly out(new_nvars);
  for (const auto& [m, c] : f.terms()) {
    Monomial mm(new_nvars, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (index_map[i] >= new_nvars) throw ArityError("remap target out of range");
      mm[index_map[i]] += m[i];
    }
    out.add_term(mm, c);
  }
  return out;
}

SparsePoly hom_component(const SparsePoly& f, unsigned k) {
  SparsePoly out(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (monomial_degree(m) == k) out.add_term(m, c);
  return out;
}

SparsePoly derivative(const SparsePoly& f, std::size_t var, unsigned order) {
  if (var >= f.nvars()) throw ArityError("variable index out of range");
  if (order == 0) return f;
  SparsePoly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] < order) continue;
    Integer factor = 1;
    for (unsigned j = 0; j < order; ++j) factor *= m[var] - j;
    Monomial mm = m;
    mm[var] -= order;
    out.add_term(mm, c * Rational(factor));
  }
  return out;
}

std::optional<SparsePoly> exact_divide(const SparsePoly& f, const SparsePoly& g) {
  if (g.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (f.nvars() != g.nvars()) throw ArityError("variable-count mismatch");
  SparsePoly r = f;
  SparsePoly q(f.nvars());
  const Monomial& lg = g.leading_monomial();
  const Rational& lc = g.leading_coefficient();
  Monomial quot(f.nvars());
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (lr[i] < lg[i]) return std::nullopt;
      quot[i] = lr[i] - lg[i];
    }
    Rational c = r.leading_coefficient() / lc;
    q.add_term(quot, c);
    r -= mul_monomial(g, quot, c);
  }
  return q;
}

std::set<std::size_t> var_support(const SparsePoly& f) {
  std::set<std::size_t> s;
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) s.insert(i);
  return s;
}

std::pair<Rational, SparsePoly> normalize_canonical(const SparsePoly& f) {
  if (f.is_zero()) return {Rational(0), f};
  Rational lc = f.leading_coefficient();
  SparsePoly g = f;
  g *= Rational(1) / lc;
  return {lc, g};
}

bool canonical_less(const SparsePoly& a, const SparsePoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.terms().begin(), ib = b.terms().begin();
  GrlexGreater gt;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return gt(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace sparsefac
