#include <doctest.h>

#include "sparsefac/config.hpp"
#include "sparsefac/errors.hpp"
#include "sparsefac/factor_engine.hpp"
#include "sparsefac/irredproj.hpp"
#include "sparsefac/poly_text.hpp"
#include "support/gen.hpp"

using namespace sparsefac;
using namespace testsupport;

namespace {
SparsePoly P(const char* text, std::size_t n) { return parse_poly(text, z_names(n)); }
FactorList expect(std::vector<std::pair<SparsePoly, unsigned>> fs) { return make_list(fs); }
}  // namespace

TEST_SUITE("factor-engine") {
  TEST_CASE("monic shift round trip") {
    SparsePoly f = P("2*z1*z2 + z2^2 - z1 + 3", 2);
    auto [shift, fa] = monicize(f);
    CHECK(fa.nvars() == 3);
    CHECK(fa.degree_in(0) == 2);
    CHECK(hom_component(fa, 2).coefficient(Monomial{2, 0, 0}) == 1);
    CHECK(unmonicize(fa, shift) == normalize_canonical(f).second);
    CHECK(tau(P("z1", 2), Point{2, 3}) == parse_poly("2*x + z1", xz_names(2)));
  }

  TEST_CASE("constant-degree factors: worked examples") {
    SparsePoly a = P("z1^3 + 2*z1^2*z2 + z1*z2^2", 2);
    CHECK(same_factors(constant_degree_factors(a, 2), expect({{P("z1", 2), 1}, {P("z1 + z2", 2), 2}})));
    SparsePoly b = P("z1 + z2 + 1", 2) * P("z1^2 + z2^2 + 3", 2);
    FactorList pb = factor_constant_degree_promise(b, 2);
    CHECK(same_factors(pb, expect({{P("z1 + z2 + 1", 2), 1}, {P("z1^2 + z2^2 + 3", 2), 1}})));
    CHECK(pb.expand(2) == b);
    SparsePoly c = pow(P("z1 + z2", 2), 2) * P("z1^2 + z2^2 + 1", 2) * P("z1^3 + z2 + 5", 2);
    CHECK(same_factors(constant_degree_factors(c, 2),
                       expect({{P("z1 + z2", 2), 2}, {P("z1^2 + z2^2 + 1", 2), 1}})));
  }

  TEST_CASE("promise violations") {
    CHECK_THROWS_AS(factor_constant_degree_promise(P("z1^3 + z2 + 5", 2), 2), PromiseViolation);
    CHECK_THROWS_AS(factor_constant_degree_promise(P("z1^2 + z2^2 + 1", 2) * P("z1 - 1", 2), 1), PromiseViolation);
  }

  TEST_CASE("witness backend gives the same answer") {
    SparsePoly f = P("z1*z2 - 1", 3) * P("z3 + z1", 3);
    CHECK(same_factors(constant_degree_factors(f, 2, {}, DivBackend::Witness), constant_degree_factors(f, 2)));
  }

  TEST_CASE("multiplicity") {
    CHECK(factor_multiplicity(P("z1^3 + 2*z1^2*z2 + z1*z2^2", 2), P("z1 + z2", 2)) == 2);
    CHECK(factor_multiplicity(P("z1^2 + 1", 2), P("z2", 2)) == 0);
    Rng rng(61);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 4);
      SparsePoly g = random_irreducible(rng, n, static_cast<unsigned>(rint(rng, 1, 2)), 3);
      unsigned k = static_cast<unsigned>(rint(rng, 0, 3));
      SparsePoly h = random_poly(rng, n, all_vars(n), 2, 3);
      if (exact_divide(h, g)) continue;
      CHECK(factor_multiplicity(pow(g, k) * h, g) == k);
    }
  }

  TEST_CASE("low-variable factoring monic in x") {
    auto fs = factor_x_monic(parse_poly("x^2 - y^2", xyt_names(2)));
    CHECK(fs.size() == 2);
  }

  TEST_CASE("sparse factors with the sum-of-univariates oracle") {
    Config cfg;
    SparsePoly f = P("z1^2 + z2^2 + z3^2", 3) * P("z1 + 1", 3);
    auto oracle = su_oracle(3, 2, cfg, true);
    SparseFactorReport rep = sparse_factors(f, 7, *oracle, cfg);
    CHECK(same_factors(rep.factors, expect({{P("z1^2 + z2^2 + z3^2", 3), 1}, {P("z1 + 1", 3), 1}})));
    CHECK(rep.projections_tried >= 1);
    CHECK(rep.exhaustive);
  }

  TEST_CASE("sparse factors with the constant-degree oracle") {
    Config cfg;
    SparsePoly f = pow(P("z1*z2 + 1", 3), 2) * P("z3^3 + z1 + 2", 3);
    auto oracle = constant_degree_oracle(2, 3, f.total_degree(), cfg);
    SparseFactorReport rep = sparse_factors(f, 2, *oracle, cfg);
    CHECK(same_factors(rep.factors, expect({{P("z1*z2 + 1", 3), 2}})));
    CHECK(same_factors(rep.factors, constant_degree_factors(f, 2, cfg)));
  }

  TEST_CASE("irreducibility through an oracle") {
    Config cfg;
    auto su = su_oracle(3, 2, cfg, true);
    CHECK(sparse_irreducible_test(P("z1^2 + z2^2 + z3^2", 3), *su, cfg));
    CHECK_FALSE(sparse_irreducible_test(P("z1^2 - z2^2", 3), *su, cfg));
    CHECK(sparse_irreducible_test(P("z1 + z2*z3", 3), *su, cfg));
  }

  TEST_CASE("parallel omega loop matches serial") {
    Config serial, parallel;
    parallel.jobs = 4;
    SparsePoly f = P("z1*z2 + z3", 3) * P("z1^2 + z2 + 1", 3);
    auto o1 = constant_degree_oracle(2, 3, f.total_degree(), serial);
    auto o2 = constant_degree_oracle(2, 3, f.total_degree(), parallel);
    CHECK(same_factors(sparse_factors(f, 3, *o1, serial).factors, sparse_factors(f, 3, *o2, parallel).factors));
  }
}
