#include <doctest.h>

#include <random>

#include "sparsefac/isolation.hpp"
#include "sparsefac/ntt.hpp"

using namespace sparsefac;

namespace {
constexpr std::uint32_t kPrime = 998244353;

std::vector<std::uint32_t> random_vec(std::mt19937_64& rng, std::size_t n, std::uint32_t q) {
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % q);
  return v;
}
}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("montgomery product") {
    Montgomery m(kPrime);
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
      std::uint32_t a = static_cast<std::uint32_t>(rng() % kPrime), b = static_cast<std::uint32_t>(rng() % kPrime);
      std::uint32_t got = m.mul(m.to_mont(a), b);
      CHECK(got == static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kPrime));
    }
  }

  TEST_CASE("forward then inverse is the identity") {
    const Ntt& ntt = Ntt::get(kPrime);
    std::mt19937_64 rng(2);
    for (std::size_t n : {1u, 2u, 8u, 1024u, 1u << 15}) {
      auto a = random_vec(rng, n, kPrime), b = a;
      ntt.forward(b.data(), n);
      ntt.inverse(b.data(), n);
      CHECK(a == b);
    }
  }

  TEST_CASE("parallel transforms match the serial reference") {
    std::mt19937_64 rng(3);
    for (int threads : {1, 2, 4}) {
      kernels::set_threads(threads);
      const Ntt& ntt = Ntt::get(kPrime);
      for (std::size_t n : {16u, 4096u, 1u << 16}) {
        auto a = random_vec(rng, n, kPrime), b = a;
        ntt.forward(a.data(), n);
        ntt.forward_serial(b.data(), n);
        CHECK(a == b);
        ntt.inverse(a.data(), n);
        ntt.inverse_serial(b.data(), n);
        CHECK(a == b);
      }
    }
    kernels::set_threads(1);
  }

  TEST_CASE("convolution agrees with schoolbook") {
    std::mt19937_64 rng(4);
    for (std::size_t la : {1u, 5u, 64u, 700u})
      for (std::size_t lb : {1u, 3u, 129u}) {
        auto a = random_vec(rng, la, kPrime), b = random_vec(rng, lb, kPrime);
        auto ref = convolve_schoolbook(a, b, kPrime);
        CHECK(convolve_ntt(a, b, kPrime, false) == ref);
        CHECK(convolve_ntt(a, b, kPrime, true) == ref);
        CHECK(convolve(a, b, kPrime) == ref);
      }
  }

  TEST_CASE("injectivity check: parallel matches serial") {
    for (std::size_t n = 1; n <= 5; ++n)
      for (unsigned delta = 1; delta <= 3; ++delta) {
        auto exps = monomials_up_to(n, delta);
        IsolationScheme s = find_isolating_prime(n, delta);
        CHECK(injective_mod_p_serial(exps, s.w, s.p));
        CHECK(injective_mod_p_parallel(exps, s.w, s.p));
        if (s.p > 2) {
          CHECK(injective_mod_p_serial(exps, s.w, 2) == injective_mod_p_parallel(exps, s.w, 2));
        }
      }
  }
}
