#include <doctest.h>

#include <algorithm>

#include "sparsefac/base_factor.hpp"
#include "sparsefac/config.hpp"
#include "sparsefac/errors.hpp"
#include "sparsefac/irredproj.hpp"
#include "sparsefac/poly_text.hpp"

using namespace sparsefac;

TEST_SUITE("irredproj") {
  TEST_CASE("sum-of-univariates membership") {
    VarNames z = z_names(3);
    CHECK(su_membership(parse_poly("z1^2 + 3*z2 - z3^5 + 7", z)));
    CHECK_FALSE(su_membership(parse_poly("z1*z2 + z3", z)));
    CHECK(su_is_irreducible_by_support(parse_poly("z1^2 + z2^2 + z3^2", z)) == true);
    CHECK_FALSE(su_is_irreducible_by_support(parse_poly("z1^2 - z2^2", z)).has_value());
  }

  TEST_CASE("sum-of-univariates oracle sizes") {
    Config cfg;
    SuOracle o(4, 1, cfg, false);
    CHECK(o.grid_side() == 3);
    CHECK(o.full_size() == 6 * 81 + 4 * 729);
    CHECK(o.complete());
    Point alpha{1, 1, 1, 1};
    CHECK(o.count(alpha) == o.full_size());
    ProjectionRecord r = o.at(alpha, 0);
    CHECK(r.beta.size() == 4);
    CHECK(r.absorb.size() == 2);
    CHECK_THROWS_AS(SuOracle(4, 2, cfg, false), CapError);
    SuOracle sampled(4, 2, cfg, true);
    CHECK_FALSE(sampled.complete());
    CHECK(sampled.count(alpha) == cfg.su_sample);
  }

  TEST_CASE("constant-degree oracle") {
    Config cfg;
    ConstantDegreeOracle o(2, 3, 4, cfg);
    VarNames z = z_names(3);
    CHECK(o.member(parse_poly("z1*z2 + z3", z)));
    CHECK_FALSE(o.member(parse_poly("z1^3 + 1", z)));
    Point alpha{1, 1, 1};
    std::uint64_t maxw = std::max(*std::max_element(o.scheme().w.begin(), o.scheme().w.end()),
                                  *std::max_element(o.scheme().w_prime.begin(), o.scheme().w_prime.end()));
    CHECK(o.count(alpha) == 2 * 32 * maxw + 1);
    ProjectionRecord r0 = o.at(alpha, 0);
    for (const auto& b : r0.beta) CHECK(b == 1);
  }

  TEST_CASE("projection to two variables") {
    VarNames z = z_names(2);
    ProjectionRecord r{{1, 0}, {0, 2}, {}};
    SparsePoly p = project2(parse_poly("z1 + z2", z), Point{1, 1}, r);
    CHECK(p == parse_poly("2*x + y + 2", xyt_names(2)));
    ProjectionRecord absorbed{{5, 0}, {5, 0}, {1}};
    CHECK(project2(parse_poly("z2", z), Point{1, 3}, absorbed) == parse_poly("3*x", xyt_names(2)));
  }

  TEST_CASE("an irreducible SU input keeps an irreducible projection") {
    Config cfg;
    VarNames z = z_names(3);
    SparsePoly f = parse_poly("z1^2 + z2^2 + z3", z);
    SuOracle o(3, 1, cfg, false);
    Point alpha{1, 1, 1};
    bool found = false;
    for (std::uint64_t k = 0; k < o.count(alpha) && !found; ++k) {
      SparsePoly p = project2(f, alpha, o.at(alpha, k));
      found = p.degree_in(0) == 2 && is_irreducible_lowvar(p);
    }
    CHECK(found);
  }

  TEST_CASE("random oracle is deterministic per seed") {
    RandomOracle a(3, 4, 7), b(3, 4, 7);
    Point alpha{1, 2, 3};
    CHECK(a.at(alpha, 2).beta == b.at(alpha, 2).beta);
    CHECK_FALSE(a.complete());
  }
}
