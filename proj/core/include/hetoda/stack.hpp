#pragma once

// Stacks of r scalar fields indexed by the line-bundle summands, and the
// Potential type: a stack with pointwise zero sum (the det(h) = 1 gauge).

#include <vector>

#include "hetoda/grid.hpp"

namespace hetoda {

class FieldStack {
 public:
  FieldStack() = default;
  FieldStack(int count, const PeriodicGrid& g)
      : f_(static_cast<std::size_t>(count), ScalarField(g)) {}
  explicit FieldStack(std::vector<ScalarField> fields);

  int count() const { return static_cast<int>(f_.size()); }
  const PeriodicGrid& grid() const { return f_.at(0).grid(); }

  ScalarField& operator[](int i) { return f_[static_cast<std::size_t>(i)]; }
  const ScalarField& operator[](int i) const {
    return f_[static_cast<std::size_t>(i)];
  }

  const std::vector<ScalarField>& fields() const { return f_; }
  std::vector<ScalarField>& fields() { return f_; }

 private:
  std::vector<ScalarField> f_;
};

// dst += s * src, componentwise.
void add_scaled(FieldStack& dst, double s, const FieldStack& src);
FieldStack scaled(const FieldStack& src, double s);

// L^2 pairing: integral of sum_alpha a_alpha b_alpha.
double stack_inner(const FieldStack& a, const FieldStack& b);
double stack_l2(const FieldStack& a);
double stack_linf(const FieldStack& a);

// Subtracts the pointwise mean across components.
FieldStack project_pointwise_trace_zero(const FieldStack& s);
double pointwise_trace_linf(const FieldStack& s);

// A stack with pointwise sum zero within 1e-12 relative.
class Potential {
 public:
  Potential() = default;

  // Validates the trace-zero invariant; throws on violation.
  explicit Potential(FieldStack s);

  static Potential zero(int r, const PeriodicGrid& g) {
    return Potential(FieldStack(r, g));
  }
  // Projects instead of validating.
  static Potential project(const FieldStack& s) {
    return Potential(project_pointwise_trace_zero(s));
  }

  const FieldStack& stack() const { return s_; }
  int count() const { return s_.count(); }
  const ScalarField& operator[](int i) const { return s_[i]; }

  operator const FieldStack&() const { return s_; }

 private:
  FieldStack s_;
};

}  // namespace hetoda
