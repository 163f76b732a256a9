#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "metramsey/scalar.hpp"

namespace metramsey {

inline constexpr std::size_t kMaxDim = 4;
inline constexpr std::size_t kDefaultGeneratorCap = 64;

/// A point of the cube [-1,1]^d, or more generally of R^d when used as a
/// direction or difference vector.
class Point {
public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static Point zero(std::size_t dim) { return Point(std::vector<Scalar>(dim)); }

  [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
  [[nodiscard]] const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] std::span<const Scalar> coords() const noexcept { return coords_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Scalar sup_norm() const;
  [[nodiscard]] bool in_unit_cube() const;

  /// Copy with the first nonzero coordinate made positive.
  [[nodiscard]] Point sign_normalized() const;

  friend Point operator*(const Scalar& s, const Point& p);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator-(const Point& p);

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic on coordinates.
  friend auto operator<=>(const Point& a, const Point& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                  b.coords_.begin(), b.coords_.end());
  }

private:
  std::vector<Scalar> coords_;
};

/// Sup-norm distance between two points of equal dimension.
[[nodiscard]] Scalar sup_dist(const Point& a, const Point& b);

/// A closed interval [lo, hi].
struct Interval {
  Scalar lo;
  Scalar hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A symmetric convex polytope inside [-1,1]^d, stored as the canonical reduced
/// generator set of conv(G ∪ -G): every generator is a vertex, sign-normalized,
/// and the list is sorted. Equal bodies therefore have equal representations.
/// The body {0} is represented by the single generator 0.
class SymPolytope {
public:
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::span<const Point> generators() const noexcept { return gens_; }
  [[nodiscard]] bool is_origin() const noexcept { return gens_.size() == 1 && gens_[0].is_zero(); }

  /// {0} in dimension d.
  static SymPolytope origin(std::size_t dim);

  friend bool operator==(const SymPolytope&, const SymPolytope&) = default;

private:
  friend SymPolytope sc_hull(std::span<const Point>, std::size_t);
  std::size_t dim_ = 0;
  std::vector<Point> gens_;
};

/// Symmetric convex hull conv(A ∪ -A) in canonical reduced form.
/// Throws DomainError on empty input, mixed or unsupported dimension, a
/// coordinate outside [-1,1], or more than `cap` vertices.
[[nodiscard]] SymPolytope sc_hull(std::span<const Point> points,
                                  std::size_t cap = kDefaultGeneratorCap);
[[nodiscard]] SymPolytope sc_hull(std::initializer_list<Point> points);

[[nodiscard]] bool contains(const SymPolytope& p, const Point& v);

/// min over x in P of ||v - x||_inf, exact.
[[nodiscard]] Scalar point_dist(const Point& v, const SymPolytope& p);

/// sup over x in P of d(x, Q): the one-sided part of the Hausdorff distance.
[[nodiscard]] Scalar excess(const SymPolytope& p, const SymPolytope& q);

/// Hausdorff distance in the sup metric, exact.
[[nodiscard]] Scalar hausdorff(const SymPolytope& p, const SymPolytope& q);

/// Range of coordinate `i` (0-based) over the body; always symmetric.
[[nodiscard]] Interval proj_range(const SymPolytope& p, std::size_t i);

/// Body inclusion P ⊆ Q, decided on the generators of P.
[[nodiscard]] bool subset(const SymPolytope& p, const SymPolytope& q);

namespace hull {

// Generator-level primitives. The generator lists need not be reduced or
// normalized; they describe conv(G ∪ -G). Callers guarantee matching
// dimensions and a nonempty list.

/// Gauge test: v ∈ conv(G ∪ -G).
[[nodiscard]] bool contains(std::span<const Point> gens, const Point& v);
[[nodiscard]] Scalar point_dist(const Point& v, std::span<const Point> gens);
[[nodiscard]] Scalar excess(std::span<const Point> from, std::span<const Point> to);
[[nodiscard]] Scalar hausdorff(std::span<const Point> a, std::span<const Point> b);

} // namespace hull

} // namespace metramsey
