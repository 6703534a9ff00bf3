#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

using VarNames = std::vector<std::string>;

VarNames z_names(std::size_t n);         // z1..zn
VarNames xz_names(std::size_t n);        // x, z1..zn
VarNames xyt_names(std::size_t nvars);   // x, y, t truncated to nvars

std::string render(const SparsePoly& f, const VarNames& names);
std::string render(const SparsePoly& f);  // z-names

// Sparse grammar only: sums of [coeff][*var^exp...] terms.
SparsePoly parse_poly(std::string_view text, const VarNames& names);

// Also accepts parentheses, products and powers of subexpressions; expands them.
SparsePoly parse_expression(std::string_view text, const VarNames& names);

struct ParsedPoly {
  SparsePoly poly;
  VarNames names;
};

// Layout inferred from the text: x, y, t first (those present), then z1..zN up to the largest index seen.
VarNames infer_layout(std::string_view text);
ParsedPoly parse_poly_auto(std::string_view text, bool allow_products = false);

}  // namespace sparsefac
