#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sparsefac/config.hpp"
#include "sparsefac/isolation.hpp"
#include "sparsefac/pit.hpp"
#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

// z_l -> alpha_l x + beta_l t + gamma_l; variables in `absorb` have beta_l = gamma_l = 0 (pure alpha_l x).
struct ProjectionRecord {
  Point beta, gamma;
  std::vector<std::size_t> absorb;
};

class IrredProjOracle {
 public:
  virtual ~IrredProjOracle() = default;
  virtual std::string name() const = 0;
  virtual bool member(const SparsePoly& f) const = 0;
  virtual std::uint64_t count(const Point& alpha) const = 0;
  virtual ProjectionRecord at(const Point& alpha, std::uint64_t k) const = 0;
  // False when the oracle enumerates a sample of its hitting set (sound, not complete).
  virtual bool complete() const { return true; }
};

class ConstantDegreeOracle final : public IrredProjOracle {
 public:
  ConstantDegreeOracle(unsigned delta, std::size_t n, unsigned d, const Config& cfg);
  std::string name() const override;
  bool member(const SparsePoly& f) const override;
  std::uint64_t count(const Point& alpha) const override;
  ProjectionRecord at(const Point& alpha, std::uint64_t k) const override;
  const IsolationScheme& scheme() const { return scheme_; }
  unsigned delta() const { return delta_; }

 private:
  unsigned delta_;
  IsolationScheme scheme_;
  std::uint64_t D_;
};

class SuOracle final : public IrredProjOracle {
 public:
  SuOracle(std::size_t n, unsigned d, const Config& cfg, bool allow_sampling);
  std::string name() const override { return "su"; }
  bool member(const SparsePoly& f) const override;
  std::uint64_t count(const Point& alpha) const override;
  ProjectionRecord at(const Point& alpha, std::uint64_t k) const override;
  bool complete() const override { return !sampled_; }
  std::uint64_t grid_side() const { return G_; }
  std::uint64_t full_size() const { return full_; }

 private:
  std::size_t n_;
  std::uint64_t G_;
  std::vector<std::vector<std::size_t>> branches_;
  std::vector<std::uint64_t> branch_sizes_;
  std::uint64_t full_ = 0;
  bool sampled_ = false;
  std::uint64_t sample_ = 0;
  ProjectionRecord branch_point(std::size_t b, std::uint64_t idx) const;
};

// Seeded pseudo-random projections: no contract, for experiments only.
class RandomOracle final : public IrredProjOracle {
 public:
  RandomOracle(std::size_t n, std::uint64_t count, std::uint64_t seed) : n_(n), count_(count), seed_(seed) {}
  std::string name() const override { return "unsound-random"; }
  bool member(const SparsePoly& f) const override { return !f.is_zero(); }
  std::uint64_t count(const Point&) const override { return count_; }
  ProjectionRecord at(const Point& alpha, std::uint64_t k) const override;
  bool complete() const override { return false; }

 private:
  std::size_t n_;
  std::uint64_t count_, seed_;
};

std::unique_ptr<IrredProjOracle> constant_degree_oracle(unsigned delta, std::size_t n, unsigned d,
                                                        const Config& cfg = {});
std::unique_ptr<IrredProjOracle> su_oracle(std::size_t n, unsigned d, const Config& cfg = {},
                                           bool allow_sampling = false);

bool su_membership(const SparsePoly& f);
// true when |var(f)| >= 3; nullopt ("unknown") otherwise.
std::optional<bool> su_is_irreducible_by_support(const SparsePoly& f);

// f(alpha x + beta t + gamma) over (x, t).
SparsePoly project2(const SparsePoly& f, const Point& alpha, const ProjectionRecord& r);

}  // namespace sparsefac
