#include "sparsefac/zp.hpp"

#include <algorithm>

#include "sparsefac/errors.hpp"

namespace sparsefac {

std::uint32_t Zp::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % q;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t Zp::inv(std::uint32_t a) const {
  if (a == 0) throw InternalError("inverse of zero mod q");
  return pow(a, q - 2);
}

std::uint32_t Zp::reduce(const Integer& z) const {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), q));
}

std::uint32_t Zp::reduce(const Rational& r) const {
  std::uint32_t d = static_cast<std::uint32_t>(mpz_fdiv_ui(r.get_den_mpz_t(), q));
  std::uint32_t n = static_cast<std::uint32_t>(mpz_fdiv_ui(r.get_num_mpz_t(), q));
  if (d == 0) throw InternalError("denominator vanishes mod q");
  return d == 1 ? n : mul(n, inv(d));
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

unsigned two_adicity(std::uint32_t q) {
  if (q < 3) throw InternalError("two-adicity of a non-odd-prime modulus");
  std::uint32_t m = q - 1;
  unsigned k = 0;
  while ((m & 1u) == 0) {
    m >>= 1;
    ++k;
  }
  return k;
}

const std::vector<std::uint32_t>& ntt_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out;
    for (unsigned k = 20; k < 31; ++k) {
      for (std::uint64_t c = 1; (c << k) + 1 < (1ull << 31); c += 2) {
        std::uint64_t q = (c << k) + 1;
        if (is_prime_u64(q)) out.push_back(static_cast<std::uint32_t>(q));
      }
    }
    std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
      unsigned ka = two_adicity(a), kb = two_adicity(b);
      return ka != kb ? ka > kb : a > b;
    });
    return out;
  }();
  return primes;
}

std::vector<std::uint32_t> ntt_primes_for(unsigned log_len) {
  std::vector<std::uint32_t> out;
  for (auto q : ntt_primes())
    if (two_adicity(q) >= log_len) out.push_back(q);
  return out;
}

std::uint32_t primitive_root(std::uint32_t q) {
  Zp f{q};
  std::vector<std::uint32_t> factors;
  std::uint32_t m = q - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::uint32_t g = 2;; ++g) {
    bool ok = true;
    for (auto r : factors)
      if (f.pow(g, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

}  // namespace sparsefac
