#pragma once

#include <vector>

#include "sparsefac/rational.hpp"
#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

// Dense polynomial in (x, y, t); entry (i, j, k) is the coefficient of x^i y^j t^k.
class DensePoly3 {
 public:
  DensePoly3() : DensePoly3(0, 0, 0) {}
  DensePoly3(unsigned dx, unsigned dy, unsigned dt, std::size_t nvars = 3);

  unsigned bound_x() const { return dx_; }
  unsigned bound_y() const { return dy_; }
  unsigned bound_t() const { return dt_; }
  std::size_t nvars() const { return nvars_; }
  void set_nvars(std::size_t n) { nvars_ = n; }

  Rational& at(unsigned i, unsigned j, unsigned k) { return data_[index(i, j, k)]; }
  const Rational& at(unsigned i, unsigned j, unsigned k) const { return data_[index(i, j, k)]; }

  bool is_zero() const;
  Degree degree() const;  // total degree
  // True degrees (0 for the zero polynomial).
  unsigned degree_x() const;
  unsigned degree_y() const;
  unsigned degree_t() const;
  bool is_monic_in_x() const;

  // Same polynomial with bounds shrunk to the true degrees.
  DensePoly3 trimmed() const;

  bool operator==(const DensePoly3& o) const;

  const std::vector<Rational>& data() const { return data_; }

 private:
  std::size_t index(unsigned i, unsigned j, unsigned k) const {
    return (static_cast<std::size_t>(i) * (dt_ + 1) + k) * (dy_ + 1) + j;
  }
  unsigned dx_, dy_, dt_;
  std::size_t nvars_;
  std::vector<Rational> data_;
};

DensePoly3 operator*(const DensePoly3& a, const DensePoly3& b);

// Variables 0, 1, 2 of f map to x, y, t.
DensePoly3 to_dense(const SparsePoly& f);
SparsePoly from_dense(const DensePoly3& f);

}  // namespace sparsefac
