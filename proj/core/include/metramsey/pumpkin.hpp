#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metramsey/geometry.hpp"
#include "metramsey/scalar.hpp"

namespace metramsey {

/// A d-tuple of vectors of l∞, truncated to n coordinates (the tail is 0).
/// Row i is the vector x_i; column k is the point x(k) of [-1,1]^d.
class TupleLinf {
public:
  TupleLinf() = default;
  /// Throws DomainError unless the rows form a nonempty rectangle with
  /// 1 <= d <= kMaxDim and every entry in [-1,1].
  explicit TupleLinf(std::vector<std::vector<Scalar>> rows);

  [[nodiscard]] std::size_t d() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t n() const noexcept { return rows_.empty() ? 0 : rows_[0].size(); }
  [[nodiscard]] const Scalar& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  [[nodiscard]] const std::vector<std::vector<Scalar>>& rows() const noexcept { return rows_; }
  [[nodiscard]] Point column(std::size_t k) const;

  /// First row whose sup norm is not 1, if any.
  [[nodiscard]] std::optional<std::size_t> first_row_off_sphere() const;
  [[nodiscard]] bool on_sphere() const { return !first_row_off_sphere(); }

  friend bool operator==(const TupleLinf&, const TupleLinf&) = default;

private:
  std::vector<std::vector<Scalar>> rows_;
};

/// Sup distance between tuples of the same shape.
[[nodiscard]] Scalar sup_dist(const TupleLinf& x, const TupleLinf& y);
/// Sup distance between tuples of the same arity, shorter one padded with zeros.
[[nodiscard]] Scalar padded_sup_dist(const TupleLinf& x, const TupleLinf& y);

/// One stage of a pumpkin: the family sc(base ∪ {t·direction}), t ∈ [0,1].
struct Stage {
  SymPolytope base;
  Point direction;
  friend bool operator==(const Stage&, const Stage&) = default;
};

/// An inclusion chain of symmetric convex bodies from {0} to `final_body`,
/// given by its breakpoints and the affine growth between them.
struct Pumpkin {
  std::size_t dim = 0;
  std::vector<Stage> stages;
  SymPolytope final_body;
  friend bool operator==(const Pumpkin&, const Pumpkin&) = default;
};

struct PumpkinDiagnosis {
  enum class Kind { valid, partial, malformed };
  Kind kind = Kind::valid;
  std::string reason;  // empty when valid
};

[[nodiscard]] const char* to_string(PumpkinDiagnosis::Kind kind);

/// The pumpkin colouring: stage k grows sc{x(0..k-1)} towards x(k); the final
/// body is sc of all columns. Throws DomainError naming the first row that is
/// not a unit vector.
[[nodiscard]] Pumpkin pp_colour(const TupleLinf& x);

/// Structural check. Malformed: wrong dimensions, no stages, first base not
/// {0}, a base that is not the hull of its predecessor and direction, or a
/// final body other than the end of the last stage. Partial: well formed but
/// some coordinate projection of the final body is not [-1,1].
[[nodiscard]] PumpkinDiagnosis pumpkin_valid(const Pumpkin& p);

/// Hausdorff distance between the two chains as subsets of the hyperspace of
/// bodies, with element distance `hausdorff`. The result is an exact rational
/// within `eps` of the true value.
///
/// The search is a certified branch and bound. For a fixed body A the map
/// s ↦ d_H(A, B(s)) along the other chain is the max of a nonincreasing and a
/// nondecreasing 1-Lipschitz function, so its infimum is bracketed by
/// bisection on their crossing. The supremum over the first chain is then
/// bounded on parameter intervals either by 1-Lipschitz continuity or by
/// pairing the affine growth of both chains, and intervals are split until the
/// bounds close to within eps.
///
/// Throws DomainError on dimension mismatch, eps <= 0, or a malformed input.
[[nodiscard]] Scalar pumpkin_dist(const Pumpkin& p, const Pumpkin& q, const Scalar& eps);

/// A sphere tuple whose colour reproduces `p`: its columns are the stage
/// directions, so pp_colour rebuilds the same breakpoints and growth.
/// Throws DomainError when `p` is partial or malformed, or eps <= 0.
[[nodiscard]] TupleLinf pumpkin_witness(const Pumpkin& p, const Scalar& eps);

/// The unique 1-pumpkin {[-a,a] : a ∈ [0,1]}.
[[nodiscard]] Pumpkin canonical_pum1();

} // namespace metramsey
