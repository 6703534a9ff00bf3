#include <doctest.h>

#include "sparsefac/divisibility.hpp"
#include "sparsefac/errors.hpp"
#include "sparsefac/poly_text.hpp"
#include "support/gen.hpp"

using namespace sparsefac;
using namespace testsupport;

TEST_SUITE("divisibility") {
  TEST_CASE("exact division") {
    VarNames z = z_names(2);
    DivisionResult r = divides_exact(parse_poly("z1^2 - z2^2", z), parse_poly("z1 + z2", z));
    CHECK(r.divides);
    CHECK(*r.quotient == parse_poly("z1 - z2", z));
    CHECK_FALSE(divides_exact(parse_poly("z1^2 + 1", z), parse_poly("z1 + 1", z)).divides);
    CHECK_THROWS_AS(divides_exact(parse_poly("z1", z), SparsePoly(2)), DivisionByZero);
  }

  TEST_CASE("witness worked example") {
    VarNames z = z_names(2);
    WitnessIdentity w = divisibility_witness(parse_poly("z1^2 - z2^2", z), parse_poly("z1 + z2", z));
    CHECK(w.holds);
    CHECK(w.S.size() == 2 * w.d * w.d + 1);
    CHECK(*w.quotient == parse_poly("z1 - z2", z));
    CHECK_FALSE(divisibility_witness(parse_poly("z1^2 + 1", z), parse_poly("z1 + 1", z)).holds);
  }

  TEST_CASE("witness agrees with exact division") {
    Rng rng(51);
    for (int i = 0; i < 60; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 3);
      SparsePoly g = random_poly(rng, n, all_vars(n), static_cast<unsigned>(rint(rng, 1, 2)), 3);
      SparsePoly q = random_poly(rng, n, all_vars(n), static_cast<unsigned>(rint(rng, 0, 2)), 3);
      SparsePoly f = g * q;
      if (i % 2) f += SparsePoly::term(random_monomial(rng, n, all_vars(n), 1), 1);
      if (f.is_zero()) continue;
      DivisionResult e = divides_exact(f, g);
      WitnessIdentity w = divisibility_witness(f, g);
      CHECK(e.divides == w.holds);
      if (e.divides) CHECK(*w.quotient == *e.quotient);
      CHECK(constant_degree_divides(f, g, 2, DivBackend::Witness) == e.divides);
    }
  }

  TEST_CASE("closed-form weights reproduce the truncated series") {
    Rng rng(52);
    for (int i = 0; i < 30; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 3);
      SparsePoly g = random_poly(rng, n, all_vars(n), static_cast<unsigned>(rint(rng, 1, 2)), 3);
      SparsePoly f = random_poly(rng, n, all_vars(n), static_cast<unsigned>(rint(rng, 1, 3)), 4);
      WitnessIdentity w = divisibility_witness(f, g);
      CHECK(w.h_tilde == truncated_quotient_series(f, g, w.alpha, w.d));
      for (std::size_t b = 0; b < w.c.size(); ++b)
        for (std::size_t k = 1; k < w.c[b].size(); ++k) CHECK(w.c[b][k] * w.c[0][0] == w.c[0][k] * w.c[b][0]);
    }
  }

  TEST_CASE("shift and scaling") {
    VarNames z = z_names(2);
    SparsePoly f = parse_poly("z1*z2 + z1", z);
    CHECK(shift(f, Point{1, -1}) == parse_poly("z1*z2 + z2", z));
    CHECK(shift(shift(f, Point{2, 3}), Point{-2, -3}) == f);
    CHECK(scale_vars(f, 2) == parse_poly("4*z1*z2 + 2*z1", z));
    CHECK_THROWS_AS(constant_degree_divides(f, f, 1), ArityError);
  }
}
