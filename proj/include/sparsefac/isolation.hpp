#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sparsefac/config.hpp"
#include "sparsefac/dense_poly3.hpp"
#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

struct IsolationScheme {
  std::size_t n = 0;
  unsigned delta = 0;       // degree bound for the injectivity certificate
  unsigned iso_degree = 0;  // degree bound the prime was certified for (>= delta for Psi schemes)
  std::uint64_t p = 0;
  std::vector<std::uint64_t> w;
  std::vector<std::uint64_t> w_prime;  // empty for a plain Kronecker scheme
  // y-exponent -> monomial, over M_delta; keyed by the integer weight sum.
  std::map<std::uint64_t, Monomial> table_w;
  std::map<std::uint64_t, Monomial> table_w_prime;

  std::string to_json() const;
};

// All exponent vectors of total degree <= delta in n variables.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned delta);
std::uint64_t weight_of(const Monomial& e, const std::vector<std::uint64_t>& w);

// Exhaustive pairwise distinctness of sum e_i w_i mod p over the given exponents.
bool injective_mod_p_serial(const std::vector<Monomial>& exps, const std::vector<std::uint64_t>& w, std::uint64_t p);
bool injective_mod_p_parallel(const std::vector<Monomial>& exps, const std::vector<std::uint64_t>& w,
                              std::uint64_t p);

// Smallest prime p >= max(2, extra_capacity) with w_i = (delta+1)^(i-1) mod p injective on M_delta.
IsolationScheme find_isolating_prime(std::size_t n, unsigned delta, std::uint64_t extra_capacity = 1);

// One scheme over 2n formal variables split into (w, w'); iso degree min(2 delta^5, cap).
IsolationScheme psi_scheme(std::size_t n, unsigned delta, const Config& cfg = {});

// f over z1..zn (n vars) -> univariate in y; or over (x, z1..zn) -> (x, y).
SparsePoly apply_phi(const SparsePoly& f, const IsolationScheme& s);
SparsePoly recover_from_phi(const SparsePoly& h, const IsolationScheme& s);

// f over (x, z1..zn) -> dense (x, y, t).
DensePoly3 psi_map(const SparsePoly& f, const IsolationScheme& s, std::size_t max_cells = 50'000'000);
// Inverse on the codomain; throws NotInCodomain.
SparsePoly psi_invert(const DensePoly3& h, const IsolationScheme& s);

}  // namespace sparsefac
