#include "hetoda/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hetoda {

WeightSystem::WeightSystem(int r, std::vector<IndexPair> active)
    : r_(r), active_(std::move(active)) {
  if (r < 2) throw Error("WeightSystem: rank must be >= 2, got " + std::to_string(r));
  for (const auto& p : active_) {
    if (p.i < 1 || p.i > r || p.j < 1 || p.j > r)
      throw Error("WeightSystem: pair (" + std::to_string(p.i) + "," +
                  std::to_string(p.j) + ") out of range 1.." + std::to_string(r));
    if (p.i == p.j)
      throw Error("WeightSystem: diagonal pair (" + std::to_string(p.i) + "," +
                  std::to_string(p.j) + ") is not a root");
  }
  for (std::size_t a = 0; a < active_.size(); ++a)
    for (std::size_t b = a + 1; b < active_.size(); ++b)
      if (active_[a] == active_[b])
        throw Error("WeightSystem: duplicate active pair (" +
                    std::to_string(active_[a].i) + "," +
                    std::to_string(active_[a].j) + ")");
}

std::vector<int> root_vector(const WeightSystem& ws, int i, int j) {
  const int r = ws.rank();
  if (i < 1 || i > r || j < 1 || j > r)
    throw Error("root_vector: index out of range");
  if (i == j) throw Error("root_vector: i = j");
  std::vector<int> v(static_cast<std::size_t>(r), 0);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return v;
}

std::vector<double> project_trace_zero(std::span<const double> x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  std::vector<double> out(x.begin(), x.end());
  for (double& v : out) v -= mean;
  return out;
}

RatVec project_trace_zero(const RatVec& x) {
  Rat mean = 0;
  for (const Rat& q : x) mean += q;
  mean /= static_cast<int>(x.size());
  RatVec out = x;
  for (Rat& q : out) q -= mean;
  return out;
}

bool is_trace_zero(std::span<const double> x, double rel_tol) {
  double s = 0.0, mx = 0.0;
  for (double v : x) {
    s += v;
    mx = std::max(mx, std::abs(v));
  }
  return std::abs(s) <= rel_tol * std::max(1.0, mx);
}

}  // namespace hetoda
