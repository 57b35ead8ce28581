#pragma once

// Small dense exact linear algebra over the rationals: just enough for the
// cone module's simplex bookkeeping and the solver's flat-subspace kernel.

#include <optional>
#include <vector>

#include "hetoda/rational.hpp"

namespace hetoda {

using RatMat = std::vector<RatVec>;  // row-major, rectangular

int rank(RatMat m);

// Solves A x = b for square nonsingular A; nullopt when A is singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b);

// Basis of the right kernel {x : A x = 0}; each basis vector has
// coprime integer entries.
std::vector<RatVec> kernel_basis(RatMat a);

}  // namespace hetoda
