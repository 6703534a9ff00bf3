#include "sparsefac/dense_poly3.hpp"

#include <algorithm>

#include "sparsefac/errors.hpp"

namespace sparsefac {

DensePoly3::DensePoly3(unsigned dx, unsigned dy, unsigned dt, std::size_t nvars)
    : dx_(dx), dy_(dy), dt_(dt), nvars_(nvars),
      data_(static_cast<std::size_t>(dx + 1) * (dy + 1) * (dt + 1)) {
  if (nvars > 3) throw ArityError("DensePoly3 holds at most three variables");
}

bool DensePoly3::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& c) { return c == 0; });
}

Degree DensePoly3::degree() const {
  bool any = false;
  unsigned best = 0;
  for (unsigned i = 0; i <= dx_; ++i)
    for (unsigned k = 0; k <= dt_; ++k)
      for (unsigned j = 0; j <= dy_; ++j)
        if (at(i, j, k) != 0) {
          any = true;
          best = std::max(best, i + j + k);
        }
  return any ? Degree(best) : Degree::neg_infinity();
}

unsigned DensePoly3::degree_x() const {
  unsigned d = 0;
  for (unsigned i = 0; i <= dx_; ++i)
    for (unsigned k = 0; k <= dt_; ++k)
      for (unsigned j = 0; j <= dy_; ++j)
        if (at(i, j, k) != 0) d = i;
  return d;
}

unsigned DensePoly3::degree_y() const {
  unsigned d = 0;
  for (unsigned i = 0; i <= dx_; ++i)
    for (unsigned k = 0; k <= dt_; ++k)
      for (unsigned j = 0; j <= dy_; ++j)
        if (at(i, j, k) != 0) d = std::max(d, j);
  return d;
}

unsigned DensePoly3::degree_t() const {
  unsigned d = 0;
  for (unsigned i = 0; i <= dx_; ++i)
    for (unsigned k = 0; k <= dt_; ++k)
      for (unsigned j = 0; j <= dy_; ++j)
        if (at(i, j, k) != 0) d = std::max(d, k);
  return d;
}

bool DensePoly3::is_monic_in_x() const {
  if (is_zero()) return false;
  unsigned m = degree_x();
  for (unsigned k = 0; k <= dt_; ++k)
    for (unsigned j = 0; j <= dy_; ++j)
      if (at(m, j, k) != ((j == 0 && k == 0) ? 1 : 0)) return false;
  return true;
}

DensePoly3 DensePoly3::trimmed() const {
  DensePoly3 out(degree_x(), degree_y(), degree_t(), nvars_);
  for (unsigned i = 0; i <= out.dx_; ++i)
    for (unsigned k = 0; k <= out.dt_; ++k)
      for (unsigned j = 0; j <= out.dy_; ++j) out.at(i, j, k) = at(i, j, k);
  return out;
}

bool DensePoly3::operator==(const DensePoly3& o) const {
  DensePoly3 a = trimmed(), b = o.trimmed();
  return a.dx_ == b.dx_ && a.dy_ == b.dy_ && a.dt_ == b.dt_ && a.data_ == b.data_;
}

DensePoly3 operator*(const DensePoly3& a, const DensePoly3& b) {
  DensePoly3 out(a.bound_x() + b.bound_x(), a.bound_y() + b.bound_y(), a.bound_t() + b.bound_t(),
                 std::max(a.nvars(), b.nvars()));
  for (unsigned i = 0; i <= a.bound_x(); ++i)
    for (unsigned k = 0; k <= a.bound_t(); ++k)
      for (unsigned j = 0; j <= a.bound_y(); ++j) {
        const Rational& ca = a.at(i, j, k);
        if (ca == 0) continue;
        for (unsigned i2 = 0; i2 <= b.bound_x(); ++i2)
          for (unsigned k2 = 0; k2 <= b.bound_t(); ++k2)
            for (unsigned j2 = 0; j2 <= b.bound_y(); ++j2) {
              const Rational& cb = b.at(i2, j2, k2);
              if (cb != 0) out.at(i + i2, j + j2, k + k2) += ca * cb;
            }
      }
  return out;
}

DensePoly3 to_dense(const SparsePoly& f) {
  if (f.nvars() > 3) throw ArityError("to_dense requires at most three variables");
  unsigned d[3] = {0, 0, 0};
  for (std::size_t v = 0; v < f.nvars(); ++v) d[v] = f.degree_in(v);
  DensePoly3 out(d[0], d[1], d[2], f.nvars());
  for (const auto& [m, c] : f.terms()) {
    unsigned e[3] = {0, 0, 0};
    for (std::size_t v = 0; v < m.size(); ++v) e[v] = m[v];
    out.at(e[0], e[1], e[2]) = c;
  }
  return out;
}

SparsePoly from_dense(const DensePoly3& f) {
  SparsePoly out(f.nvars());
  for (unsigned i = 0; i <= f.bound_x(); ++i)
    for (unsigned k = 0; k <= f.bound_t(); ++k)
      for (unsigned j = 0; j <= f.bound_y(); ++j) {
        const Rational& c = f.at(i, j, k);
        if (c == 0) continue;
        unsigned e[3] = {i, j, k};
        Monomial m(f.nvars());
        for (std::size_t v = 0; v < m.size(); ++v) m[v] = e[v];
        for (std::size_t v = m.size(); v < 3; ++v)
          if (e[v]) throw ArityError("dense entry uses a variable beyond nvars");
        out.add_term(m, c);
      }
  return out;
}

}  // namespace sparsefac
