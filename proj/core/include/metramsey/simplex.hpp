#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "metramsey/scalar.hpp"

namespace metramsey::lp {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

enum class Status { optimal, unbounded };

struct Solution {
  Status status = Status::optimal;
  Scalar value;           // objective value when optimal
  std::vector<Scalar> x;  // primal solution when optimal
};

/// Solves  max c·x  subject to  A x <= b,  x >= 0  with b >= 0 (so the origin
/// is feasible and no phase one is needed). Primal simplex on a dense tableau;
/// Bland's rule picks both the entering and the leaving variable, which rules
/// out cycling and makes the pivot sequence a pure function of the input.
///
/// Runs in fraction-free 64-bit integer arithmetic while every intermediate
/// fits, and otherwise repeats the same pivots over exact rationals.
Solution maximize(const Matrix& a, std::span<const Scalar> b, std::span<const Scalar> c);

/// Same solver, forced onto the rational tableau. Exposed for cross-checking.
Solution maximize_exact_rational(const Matrix& a, std::span<const Scalar> b,
                                 std::span<const Scalar> c);

} // namespace metramsey::lp
