#include <doctest.h>

#include "sparsefac/dense_poly3.hpp"
#include "sparsefac/errors.hpp"
#include "sparsefac/poly_text.hpp"
#include "support/gen.hpp"

using namespace sparsefac;
using namespace testsupport;

TEST_SUITE("poly-core") {
  TEST_CASE("ring axioms on random polynomials") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 4);
      auto v = all_vars(n);
      SparsePoly a = random_poly(rng, n, v, 3, 5), b = random_poly(rng, n, v, 2, 4), c = random_poly(rng, n, v, 2, 3);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a * SparsePoly::constant(n, 1) == a);
      CHECK((a * SparsePoly(n)).is_zero());
    }
  }

  TEST_CASE("parse and render round trip") {
    Rng rng(12);
    for (int i = 0; i < 60; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 5);
      SparsePoly f = random_poly(rng, n, all_vars(n), 4, 6) * Rational(1, 3);
      VarNames names = z_names(n);
      CHECK(parse_poly(render(f, names), names) == f);
    }
    VarNames xz = xz_names(2);
    SparsePoly f = parse_poly("x^2 - 3/4*z1*z2 + 2", xz);
    CHECK(f.sparsity() == 3);
    CHECK(f.coefficient(Monomial{0, 1, 1}) == Rational(-3, 4));
    CHECK(render(f, xz) == "x^2 - 3/4*z1*z2 + 2");
  }

  TEST_CASE("parse errors carry positions") {
    VarNames names = z_names(2);
    CHECK_THROWS_AS(parse_poly("z1 +* 2", names), ParseError);
    CHECK_THROWS_AS(parse_poly("z3", names), ParseError);
    CHECK_THROWS_AS(parse_poly("(z1+1)*(z2)", names), ParseError);
    CHECK(parse_expression("(z1 + 1)^2", names) == parse_poly("z1^2 + 2*z1 + 1", names));
  }

  TEST_CASE("inferred layout") {
    auto p = parse_poly_auto("x*y + z3");
    CHECK(p.names == VarNames{"x", "y", "z1", "z2", "z3"});
  }

  TEST_CASE("degree of zero is -infinity") {
    SparsePoly zero(3);
    CHECK(zero.degree().is_neg_infinity());
    CHECK_THROWS_AS(zero.total_degree(), ZeroPolynomialError);
    CHECK(Degree::neg_infinity() < Degree(0));
  }

  TEST_CASE("homogeneous components reassemble") {
    Rng rng(13);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 4);
      SparsePoly f = random_poly(rng, n, all_vars(n), 5, 8);
      SparsePoly sum(n);
      for (unsigned k = 0; k <= f.total_degree(); ++k) {
        SparsePoly h = hom_component(f, k);
        for (const auto& [m, c] : h.terms()) CHECK(monomial_degree(m) == k);
        sum += h;
      }
      CHECK(sum == f);
    }
  }

  TEST_CASE("exact division closure") {
    Rng rng(14);
    for (int i = 0; i < 60; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 4);
      SparsePoly g = random_poly(rng, n, all_vars(n), 2, 3), q = random_poly(rng, n, all_vars(n), 3, 4);
      auto res = exact_divide(g * q, g);
      REQUIRE(res);
      CHECK(*res == q);
      SparsePoly bumped = g * q + SparsePoly::constant(n, 1);
      if (g.total_degree() > 0) CHECK_FALSE(exact_divide(bumped, g));
    }
  }

  TEST_CASE("dense round trip") {
    Rng rng(15);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 3);
      SparsePoly f = random_poly(rng, n, all_vars(n), 4, 6);
      DensePoly3 d = to_dense(f);
      CHECK(from_dense(d) == f);
      CHECK(d.degree().value() == f.total_degree());
    }
    DensePoly3 a = to_dense(parse_poly("x + y", xyt_names(2)));
    DensePoly3 b = to_dense(parse_poly("x - y", xyt_names(2)));
    CHECK(from_dense(a * b) == parse_poly("x^2 - y^2", xyt_names(2)));
  }

  TEST_CASE("substitution, derivatives and canonical form") {
    VarNames z = z_names(2);
    SparsePoly f = parse_poly("z1^2*z2 + 3*z2", z);
    CHECK(derivative(f, 0) == parse_poly("2*z1*z2", z));
    CHECK(derivative(f, 1, 2).is_zero());
    CHECK(partial_evaluate(f, 0, 2) == parse_poly("7*z2", z));
    SparsePoly g = substitute(f, {parse_poly("z2", z), parse_poly("z1", z)});
    CHECK(g == parse_poly("z2^2*z1 + 3*z1", z));
    auto [lc, monic] = normalize_canonical(parse_poly("-2*z1 + 4", z));
    CHECK(lc == -2);
    CHECK(monic == parse_poly("z1 - 2", z));
    CHECK(var_support(f) == std::set<std::size_t>{0, 1});
  }
}
