#include "sparsefac/ntt.hpp"

#include <map>

#include "sparsefac/errors.hpp"
#include "sparsefac/zp.hpp"

#ifdef SPARSEFAC_HAVE_OPENMP
#include <omp.h>
#endif

namespace sparsefac {

namespace kernels {
namespace {
std::atomic<int> g_threads{1};
}
void set_threads(int n) { g_threads = n < 1 ? 1 : n; }
int threads() { return g_threads; }
}  // namespace kernels

namespace {
constexpr std::size_t kParallelThreshold = 1u << 14;
}

Montgomery::Montgomery(std::uint32_t modulus) : q(modulus) {
  std::uint32_t inv = q;  // Newton iteration for q^{-1} mod 2^32
  for (int i = 0; i < 5; ++i) inv *= 2 - q * inv;
  qneg_inv = ~inv + 1;
  std::uint64_t r = (static_cast<std::uint64_t>(1) << 32) % q;
  r2 = static_cast<std::uint32_t>(r * r % q);
}

Ntt::Ntt(std::uint32_t q) : mont_(q), max_log_(two_adicity(q)) {
  Zp f{q};
  std::uint32_t g = primitive_root(q);
  root_ = f.pow(g, (q - 1) >> max_log_);
  root_inv_ = f.inv(root_);
}

const Ntt& Ntt::get(std::uint32_t q) {
  static std::mutex m;
  static std::map<std::uint32_t, std::unique_ptr<Ntt>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<Ntt>(q);
  return *slot;
}

void Ntt::ensure(unsigned log_n) const {
  if (ready_.load(std::memory_order_acquire) >= log_n) return;
  std::lock_guard<std::mutex> lock(mutex_);
  Zp f{mont_.q};
  for (unsigned l = ready_.load(); l < log_n; ++l) {
    // level l combines blocks of size 2^l into 2^{l+1}; twiddles are powers of a 2^{l+1}-th root
    std::size_t len = std::size_t(1) << l;
    std::uint32_t w = f.pow(root_, std::uint64_t(1) << (max_log_ - l - 1));
    std::uint32_t wi = f.pow(root_inv_, std::uint64_t(1) << (max_log_ - l - 1));
    auto fw = std::make_unique<std::uint32_t[]>(len);
    auto iw = std::make_unique<std::uint32_t[]>(len);
    std::uint32_t a = 1, b = 1;
    for (std::size_t j = 0; j < len; ++j) {
      fw[j] = mont_.to_mont(a);
      iw[j] = mont_.to_mont(b);
      a = f.mul(a, w);
      b = f.mul(b, wi);
    }
    fwd_levels_[l] = std::move(fw);
    inv_levels_[l] = std::move(iw);
  }
  ready_.store(std::max(ready_.load(), log_n), std::memory_order_release);
}

void Ntt::transform(std::uint32_t* a, std::size_t n, bool inverse, bool parallel) const {
  // Forward: decimation in frequency, natural input, bit-reversed output.
  // Inverse: decimation in time, bit-reversed input, natural output.
  unsigned log_n = log2_exact(n);
  if (log_n > max_log_) throw InternalError("transform length exceeds prime capability");
  ensure(log_n);
  const std::uint32_t q = mont_.q;
  const Montgomery mont = mont_;
  const std::int64_t half = static_cast<std::int64_t>(n >> 1);
  for (unsigned step = 0; step < log_n; ++step) {
    const unsigned l = inverse ? step : log_n - 1 - step;
    const std::size_t len = std::size_t(1) << l;
    const std::uint32_t* w = inverse ? inv_levels_[l].get() : fwd_levels_[l].get();
    if (parallel) {
#ifdef SPARSEFAC_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(kernels::threads())
#endif
      for (std::int64_t b = 0; b < half; ++b) {
        std::size_t j = static_cast<std::size_t>(b) & (len - 1);
        std::size_t i = (static_cast<std::size_t>(b) - j) * 2 + j;
        std::uint32_t u = a[i], v = a[i + len];
        if (inverse) {
          v = mont.mul(v, w[j]);
          std::uint32_t s = u + v;
          a[i] = s >= q ? s - q : s;
          a[i + len] = u >= v ? u - v : u + q - v;
        } else {
          std::uint32_t s = u + v;
          a[i] = s >= q ? s - q : s;
          a[i + len] = mont.mul(u >= v ? u - v : u + q - v, w[j]);
        }
      }
    } else if (inverse) {
      for (std::size_t i = 0; i < n; i += 2 * len) {
        std::uint32_t* x = a + i;
        std::uint32_t* y = a + i + len;
        for (std::size_t j = 0; j < len; ++j) {
          std::uint32_t u = x[j];
          std::uint32_t v = mont.mul(y[j], w[j]);
          std::uint32_t s = u + v;
          x[j] = s >= q ? s - q : s;
          y[j] = u >= v ? u - v : u + q - v;
        }
      }
    } else {
      for (std::size_t i = 0; i < n; i += 2 * len) {
        std::uint32_t* x = a + i;
        std::uint32_t* y = a + i + len;
        for (std::size_t j = 0; j < len; ++j) {
          std::uint32_t u = x[j], v = y[j];
          std::uint32_t s = u + v;
          x[j] = s >= q ? s - q : s;
          y[j] = mont.mul(u >= v ? u - v : u + q - v, w[j]);
        }
      }
    }
  }
  if (inverse) {
    Zp f{q};
    std::uint32_t scale = mont_.to_mont(f.inv(static_cast<std::uint32_t>(n % q)));
    for (std::size_t i = 0; i < n; ++i) a[i] = mont.mul(a[i], scale);
  }
}

void Ntt::forward(std::uint32_t* a, std::size_t n) const {
  transform(a, n, false, kernels::threads() > 1 && n >= kParallelThreshold);
}
void Ntt::inverse(std::uint32_t* a, std::size_t n) const {
  transform(a, n, true, kernels::threads() > 1 && n >= kParallelThreshold);
}
void Ntt::forward_serial(std::uint32_t* a, std::size_t n) const { transform(a, n, false, false); }
void Ntt::inverse_serial(std::uint32_t* a, std::size_t n) const { transform(a, n, true, false); }

void Ntt::pointwise(std::uint32_t* a, const std::uint32_t* b, std::size_t n) const {
  const Montgomery mont = mont_;
  const std::int64_t len = static_cast<std::int64_t>(n);
#ifdef SPARSEFAC_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (kernels::threads() > 1 && n >= kParallelThreshold) \
    num_threads(kernels::threads())
#endif
  for (std::int64_t i = 0; i < len; ++i) a[i] = mont.mul(mont.mul(a[i], b[i]), mont.r2);
}

void Ntt::pointwise_acc(std::uint32_t* acc, const std::uint32_t* a, const std::uint32_t* b, std::size_t n) const {
  const Montgomery mont = mont_;
  const std::uint32_t q = mont.q;
  const std::int64_t len = static_cast<std::int64_t>(n);
#ifdef SPARSEFAC_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (kernels::threads() > 1 && n >= kParallelThreshold) \
    num_threads(kernels::threads())
#endif
  for (std::int64_t i = 0; i < len; ++i) {
    std::uint32_t s = acc[i] + mont.mul(mont.mul(a[i], b[i]), mont.r2);
    acc[i] = s >= q ? s - q : s;
  }
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

unsigned log2_exact(std::size_t n) {
  unsigned l = 0;
  while ((std::size_t(1) << l) < n) ++l;
  if ((std::size_t(1) << l) != n) throw InternalError("length is not a power of two");
  return l;
}

std::vector<std::uint32_t> convolve_schoolbook(const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  const std::uint64_t qq = static_cast<std::uint64_t>(q) * q;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t s = acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j];
      acc[i + j] = s >= qq ? s - qq : s;
    }
  }
  std::vector<std::uint32_t> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % q);
  return out;
}

std::vector<std::uint32_t> convolve_ntt(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                        std::uint32_t q, bool parallel) {
  if (a.empty() || b.empty()) return {};
  const Ntt& ntt = Ntt::get(q);
  std::size_t out_len = a.size() + b.size() - 1;
  std::size_t n = next_pow2(out_len);
  std::vector<std::uint32_t> fa(n, 0), fb(n, 0);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  if (parallel) {
    ntt.forward(fa.data(), n);
    ntt.forward(fb.data(), n);
    ntt.pointwise(fa.data(), fb.data(), n);
    ntt.inverse(fa.data(), n);
  } else {
    ntt.forward_serial(fa.data(), n);
    ntt.forward_serial(fb.data(), n);
    const Montgomery m(q);
    for (std::size_t i = 0; i < n; ++i) fa[i] = m.mul(m.mul(fa[i], fb[i]), m.r2);
    ntt.inverse_serial(fa.data(), n);
  }
  fa.resize(out_len);
  return fa;
}

std::vector<std::uint32_t> convolve(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < 48) return convolve_schoolbook(a, b, q);
  std::size_t n = next_pow2(a.size() + b.size() - 1);
  if (q < (1u << 20) || two_adicity(q) < log2_exact(n)) return convolve_schoolbook(a, b, q);
  return convolve_ntt(a, b, q, true);
}

}  // namespace sparsefac
