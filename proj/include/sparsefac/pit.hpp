#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sparsefac/sparse_poly.hpp"

namespace sparsefac {

using Point = std::vector<Rational>;

struct HittingSet {
  std::size_t n = 0;
  unsigned d = 0;
  std::vector<Point> points;
};

// The grid {1..d+1}^n, last coordinate fastest.
HittingSet trivial_hitting_set(std::size_t n, unsigned d);

// Self-reduction over {1..d+1} per variable; probes counts PIT calls (at most n(d+1)).
Point find_nonzero_point_whitebox(const SparsePoly& f, unsigned d, std::size_t* probes = nullptr);

using Evaluator = std::function<Rational(std::span<const Rational>)>;
// Scans the hitting set, then shifts by M+1+j along (1,...,1) until every coordinate is nonzero.
Point find_nonzero_point_blackbox(const Evaluator& f, const HittingSet& hs, unsigned d);

bool sparse_pit(const SparsePoly& f);

struct EvaluationPlan {
  std::size_t s = 0, n = 0;
  unsigned d = 0;
  std::vector<Point> points;
};

// Points (p_1^i, ..., p_n^i), i = 0..2s-1, with p_k the k-th prime.
EvaluationPlan interpolation_plan(std::size_t s, std::size_t n, unsigned d);
std::vector<Rational> evaluate_plan(const SparsePoly& f, const EvaluationPlan& plan);
SparsePoly sparse_interpolate(std::span<const Rational> values, const EvaluationPlan& plan);
SparsePoly sparse_interpolate(std::span<const Rational> values, std::size_t s, std::size_t n, unsigned d);

// Connection polynomial C(X) = 1 + c_1 X + ... of the shortest recurrence for seq.
std::vector<Rational> berlekamp_massey(std::span<const Rational> seq);
std::vector<unsigned> first_primes(std::size_t n);

}  // namespace sparsefac
