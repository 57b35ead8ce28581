#include "hetoda/stack.hpp"

#include <algorithm>
#include <cmath>

#include "hetoda/reduce.hpp"

namespace hetoda {

FieldStack::FieldStack(std::vector<ScalarField> fields) : f_(std::move(fields)) {
  if (f_.empty()) throw ShapeError("FieldStack: empty");
  for (const auto& f : f_) require_same_grid(f_[0], f, "FieldStack");
}

void add_scaled(FieldStack& dst, double s, const FieldStack& src) {
  if (dst.count() != src.count())
    throw ShapeError("add_scaled: component count mismatch");
  for (int a = 0; a < dst.count(); ++a) {
    require_same_grid(dst[a], src[a], "add_scaled");
    auto d = dst[a].values();
    auto v = src[a].values();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += s * v[i];
  }
}

FieldStack scaled(const FieldStack& src, double s) {
  FieldStack out = src;
  for (int a = 0; a < out.count(); ++a)
    for (double& v : out[a].values()) v *= s;
  return out;
}

double stack_inner(const FieldStack& a, const FieldStack& b) {
  if (a.count() != b.count())
    throw ShapeError("stack_inner: component count mismatch");
  double s = 0.0;
  for (int i = 0; i < a.count(); ++i) s += inner(a[i], b[i]);
  return s;
}

double stack_l2(const FieldStack& a) { return std::sqrt(std::max(0.0, stack_inner(a, a))); }

double stack_linf(const FieldStack& a) {
  double m = 0.0;
  for (int i = 0; i < a.count(); ++i) m = std::max(m, max_abs(a[i]));
  return m;
}

FieldStack project_pointwise_trace_zero(const FieldStack& s) {
  FieldStack out = s;
  const int r = s.count();
  const std::size_t len = s[0].values().size();
  for (std::size_t i = 0; i < len; ++i) {
    double mean = 0.0;
    for (int a = 0; a < r; ++a) mean += s[a].values()[i];
    mean /= r;
    for (int a = 0; a < r; ++a) out[a].values()[i] -= mean;
  }
  return out;
}

double pointwise_trace_linf(const FieldStack& s) {
  const int r = s.count();
  const std::size_t len = s[0].values().size();
  double m = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    double sum = 0.0;
    for (int a = 0; a < r; ++a) sum += s[a].values()[i];
    m = std::max(m, std::abs(sum));
  }
  return m;
}

Potential::Potential(FieldStack s) : s_(std::move(s)) {
  const double scale = std::max(1.0, stack_linf(s_));
  if (pointwise_trace_linf(s_) > 1e-12 * scale)
    throw Error("Potential: pointwise trace exceeds 1e-12 tolerance");
}

}  // namespace hetoda
