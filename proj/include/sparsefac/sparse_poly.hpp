#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "sparsefac/rational.hpp"

namespace sparsefac {

using Monomial = std::vector<std::uint32_t>;

unsigned monomial_degree(const Monomial& m);

// Graded lexicographic, largest first: begin() of a term map is the leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Degree of a polynomial; the zero polynomial has degree -infinity.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  explicit Degree(unsigned v) : value_(v) {}
  bool is_neg_infinity() const { return !value_.has_value(); }
  unsigned value() const;
  bool operator==(const Degree&) const = default;
  bool operator<(const Degree& o) const {
    if (is_neg_infinity()) return !o.is_neg_infinity();
    return !o.is_neg_infinity() && *value_ < *o.value_;
  }

 private:
  Degree() = default;
  std::optional<unsigned> value_;
};

class SparsePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Rational& c);
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  static SparsePoly term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  std::size_t sparsity() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }

  Degree degree() const;
  // Total degree; throws ZeroPolynomialError on zero.
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Rational evaluate(std::span<const Rational> point) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly operator-() const;

  bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

SparsePoly operator+(SparsePoly a, const SparsePoly& b);
SparsePoly operator-(SparsePoly a, const SparsePoly& b);
SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
SparsePoly operator*(SparsePoly a, const Rational& c);
SparsePoly operator*(const Rational& c, SparsePoly a);
SparsePoly pow(const SparsePoly& f, unsigned e);

SparsePoly mul_monomial(const SparsePoly& f, const Monomial& m, const Rational& c);

// images[i] replaces variable i; all images share one variable count.
SparsePoly substitute(const SparsePoly& f, const std::vector<SparsePoly>& images);
// Sets variable var to value, keeping the variable count.
SparsePoly partial_evaluate(const SparsePoly& f, std::size_t var, const Rational& value);
// Moves variable i to position index_map[i] in a ring with new_nvars variables.
SparsePoly remap_variables(const SparsePoly& f, std::size_t new_nvars, const std::vector<std::size_t>& index_map);

SparsePoly hom_component(const SparsePoly& f, unsigned k);
SparsePoly derivative(const SparsePoly& f, std::size_t var, unsigned order = 1);

std::optional<SparsePoly> exact_divide(const SparsePoly& f, const SparsePoly& g);

std::set<std::size_t> var_support(const SparsePoly& f);

// Scales so that the graded-lex leading coefficient is 1; returns (scalar, monic part).
std::pair<Rational, SparsePoly> normalize_canonical(const SparsePoly& f);

// Orders polynomials deterministically (leading terms first, then coefficients).
bool canonical_less(const SparsePoly& a, const SparsePoly& b);

}  // namespace sparsefac
