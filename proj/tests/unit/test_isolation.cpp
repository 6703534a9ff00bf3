#include <doctest.h>

#include "sparsefac/config.hpp"
#include "sparsefac/dense_poly3.hpp"
#include "sparsefac/errors.hpp"
#include "sparsefac/isolation.hpp"
#include "sparsefac/poly_text.hpp"
#include "support/gen.hpp"

using namespace sparsefac;
using namespace testsupport;

TEST_SUITE("isolation") {
  TEST_CASE("known schemes") {
    IsolationScheme a = find_isolating_prime(2, 2);
    CHECK(a.p == 7);
    CHECK(a.w == std::vector<std::uint64_t>{1, 3});
    CHECK(find_isolating_prime(1, 3).p == 5);
    std::vector<std::uint64_t> psi_primes;
    for (std::size_t n = 1; n <= 5; ++n) psi_primes.push_back(psi_scheme(n, 2).p);
    CHECK(psi_primes == std::vector<std::uint64_t>{7, 31, 103, 131, 281});
    CHECK(find_isolating_prime(2, 2, 100).p >= 100);
    CHECK(monomials_up_to(3, 2).size() == 10);
  }

  TEST_CASE("psi degree cap") {
    Config cfg;
    cfg.iso_degree_cap = 3;
    IsolationScheme s = psi_scheme(2, 2, cfg);
    CHECK(s.iso_degree == 3);
    cfg.max_delta = 1;
    CHECK_THROWS_AS(psi_scheme(2, 2, cfg), CapError);
  }

  TEST_CASE("phi is a homomorphism and invertible on low degree") {
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 4);
      IsolationScheme s = find_isolating_prime(n, 2);
      SparsePoly a = random_poly(rng, n, all_vars(n), 2, 4), b = random_poly(rng, n, all_vars(n), 3, 4);
      CHECK(apply_phi(a * b, s) == apply_phi(a, s) * apply_phi(b, s));
      CHECK(apply_phi(a + b, s) == apply_phi(a, s) + apply_phi(b, s));
      CHECK(recover_from_phi(apply_phi(a, s), s) == a);
    }
  }

  TEST_CASE("two-variable example through phi") {
    IsolationScheme s = find_isolating_prime(2, 2);
    SparsePoly f = parse_poly("x^2 - z1*z2", xz_names(2));
    SparsePoly img = apply_phi(f, s);
    CHECK(img == parse_poly("x^2 - y^4", xyt_names(2)));
    CHECK(recover_from_phi(img, s) == f);
    CHECK_THROWS_AS(recover_from_phi(parse_poly("x - y^5", xyt_names(2)), s), NotInCodomain);
  }

  TEST_CASE("psi round trip and perturbation rejection") {
    Rng rng(42);
    for (int i = 0; i < 30; ++i) {
      std::size_t n = 1 + static_cast<std::size_t>(i % 3);
      IsolationScheme s = psi_scheme(n, 2);
      SparsePoly g = SparsePoly::term(mono(n + 1, {{0, 2}}), 1);
      std::vector<std::size_t> zs;
      for (std::size_t v = 1; v <= n; ++v) zs.push_back(v);
      g += random_poly(rng, n + 1, zs, 2, 3);
      g += SparsePoly::variable(n + 1, 0) * random_poly(rng, n + 1, zs, 1, 2);
      DensePoly3 h = psi_map(g, s);
      CHECK(h.is_monic_in_x());
      CHECK(psi_invert(h, s) == g);
      if (h.bound_t() > 0) {
        DensePoly3 bad = h;
        bad.at(0, 0, 1) += 1;
        CHECK_THROWS_AS(psi_invert(bad, s), NotInCodomain);
      }
    }
    IsolationScheme s = psi_scheme(1, 2);
    CHECK_THROWS_AS(psi_invert(to_dense(parse_poly("2*x^2 + 1", xyt_names(3))), s), NotInCodomain);
    CHECK_THROWS_AS(psi_map(parse_poly("x^2 + z1^3", xz_names(1)), s, 4), CapError);
  }
}
