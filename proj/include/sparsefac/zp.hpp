#pragma once

#include <cstdint>
#include <vector>

#include "sparsefac/rational.hpp"

namespace sparsefac {

// Prime field arithmetic with plain 64-bit reduction; q < 2^31.
struct Zp {
  std::uint32_t q;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= q ? s - q : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + q - b; }
  std::uint32_t neg(std::uint32_t a) const { return a ? q - a : 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  std::uint32_t from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q);
    return static_cast<std::uint32_t>(r < 0 ? r + q : r);
  }
  std::uint32_t reduce(const Integer& z) const;
  // Requires the denominator to be invertible mod q.
  std::uint32_t reduce(const Rational& r) const;
  std::int64_t symmetric(std::uint32_t a) const {
    return a > q / 2 ? static_cast<std::int64_t>(a) - q : a;
  }
};

bool is_prime_u64(std::uint64_t n);

// Primes q = c*2^k + 1 < 2^31 with k >= 20, ordered by decreasing 2-adic order then decreasing value.
const std::vector<std::uint32_t>& ntt_primes();
unsigned two_adicity(std::uint32_t q);
// NTT primes supporting transforms of length 2^log_len.
std::vector<std::uint32_t> ntt_primes_for(unsigned log_len);

std::uint32_t primitive_root(std::uint32_t q);

}  // namespace sparsefac
