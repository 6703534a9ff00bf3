#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace sparsefac {

namespace kernels {
// Thread count for the OpenMP kernels; 1 selects the serial reference paths.
void set_threads(int n);
int threads();
}  // namespace kernels

// Montgomery multiplication modulo an odd q < 2^31 with R = 2^32.
struct Montgomery {
  std::uint32_t q = 0;
  std::uint32_t qneg_inv = 0;  // -q^{-1} mod 2^32
  std::uint32_t r2 = 0;        // R^2 mod q

  explicit Montgomery(std::uint32_t modulus);
  std::uint32_t reduce(std::uint64_t t) const {
    std::uint32_t m = static_cast<std::uint32_t>(t) * qneg_inv;
    std::uint32_t r = static_cast<std::uint32_t>((t + static_cast<std::uint64_t>(m) * q) >> 32);
    return r >= q ? r - q : r;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return reduce(static_cast<std::uint64_t>(a) * b); }
  std::uint32_t to_mont(std::uint32_t a) const { return mul(a, r2); }
};

// Number-theoretic transform over one NTT prime. Data stays in standard representation;
// twiddles are kept in Montgomery form so a Montgomery product with them is an ordinary product.
class Ntt {
 public:
  static const Ntt& get(std::uint32_t q);

  std::uint32_t modulus() const { return mont_.q; }
  unsigned max_log() const { return max_log_; }

  // forward leaves the spectrum in bit-reversed order; inverse expects that order.
  void forward(std::uint32_t* a, std::size_t n) const;
  void inverse(std::uint32_t* a, std::size_t n) const;  // includes the 1/n scaling
  void forward_serial(std::uint32_t* a, std::size_t n) const;
  void inverse_serial(std::uint32_t* a, std::size_t n) const;

  // a[i] *= b[i]
  void pointwise(std::uint32_t* a, const std::uint32_t* b, std::size_t n) const;
  // acc[i] += a[i] * b[i]
  void pointwise_acc(std::uint32_t* acc, const std::uint32_t* a, const std::uint32_t* b, std::size_t n) const;

  explicit Ntt(std::uint32_t q);

 private:
  void ensure(unsigned log_n) const;
  void transform(std::uint32_t* a, std::size_t n, bool inverse, bool parallel) const;

  Montgomery mont_;
  unsigned max_log_;
  std::uint32_t root_;      // primitive 2^max_log-th root of unity
  std::uint32_t root_inv_;
  mutable std::mutex mutex_;
  mutable std::atomic<unsigned> ready_{0};
  mutable std::array<std::unique_ptr<std::uint32_t[]>, 32> fwd_levels_;
  mutable std::array<std::unique_ptr<std::uint32_t[]>, 32> inv_levels_;
};

std::size_t next_pow2(std::size_t n);
unsigned log2_exact(std::size_t n);

// Convolution mod q; picks schoolbook or NTT by size.
std::vector<std::uint32_t> convolve(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t q);
std::vector<std::uint32_t> convolve_schoolbook(const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b, std::uint32_t q);
std::vector<std::uint32_t> convolve_ntt(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                        std::uint32_t q, bool parallel);

}  // namespace sparsefac
