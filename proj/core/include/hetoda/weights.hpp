#pragma once

// Exact linear algebra of the trace-zero space V = {x in R^r : sum x_i = 0},
// the root vectors v_{i,j} = u_i - u_j, and degree vectors.  Indices are
// 1-based everywhere in this interface.

#include <cstddef>
#include <span>
#include <vector>

#include "hetoda/errors.hpp"
#include "hetoda/rational.hpp"

namespace hetoda {

struct IndexPair {
  int i = 0;  // 1-based
  int j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

class WeightSystem {
 public:
  // active: ordered list of distinct pairs (i,j), 1 <= i,j <= r, i != j.
  WeightSystem(int r, std::vector<IndexPair> active);

  int rank() const { return r_; }
  const std::vector<IndexPair>& active() const { return active_; }
  std::size_t active_count() const { return active_.size(); }

 private:
  int r_;
  std::vector<IndexPair> active_;
};

// v_{i,j} = u_i - u_j as integer entries (+1 at i, -1 at j).
std::vector<int> root_vector(const WeightSystem& ws, int i, int j);

inline RatVec root_vector_q(const WeightSystem& ws, int i, int j) {
  auto v = root_vector(ws, i, j);
  return RatVec(v.begin(), v.end());
}

std::vector<double> project_trace_zero(std::span<const double> x);
RatVec project_trace_zero(const RatVec& x);

// Pairing (v_{i,j}, x) = x_i - x_j for a length-r vector.
inline double root_pairing(const IndexPair& p, std::span<const double> x) {
  return x[p.i - 1] - x[p.j - 1];
}
inline Rat root_pairing(const IndexPair& p, const RatVec& x) {
  return x[p.i - 1] - x[p.j - 1];
}

bool is_trace_zero(std::span<const double> x, double rel_tol = 1e-12);
inline bool is_trace_zero(const RatVec& x) {
  Rat s = 0;
  for (const Rat& q : x) s += q;
  return s == 0;
}

}  // namespace hetoda
