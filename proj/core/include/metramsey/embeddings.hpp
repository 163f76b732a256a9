#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "metramsey/pumpkin.hpp"
#include "metramsey/scalar.hpp"

namespace metramsey {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Whether the n×m matrix `t` is a linear isometric embedding of
/// (R^m, sup) into (R^n, sup): every row has l1 norm at most 1 and every
/// coordinate functional ±e_j occurs as a row.
[[nodiscard]] bool validate_embedding(const ScalarMatrix& t);

/// A vector on which a non-isometric matrix fails to preserve the norm.
struct EmbeddingDefect {
  enum class Kind { expands, contracts };
  Kind kind;
  std::vector<Scalar> x;
};

/// nullopt when validate_embedding(t) holds. Otherwise a concrete witness:
/// the sign vector of a row with l1 norm above 1 (||Tx|| > ||x|| = 1), or,
/// when all rows are in the l1 ball, the unit vector e_j of a coordinate with
/// no ±e_j row (||Tx|| < 1 = ||x||). Throws DomainError on a ragged or empty
/// matrix.
[[nodiscard]] std::optional<EmbeddingDefect> embedding_defect(const ScalarMatrix& t);

/// sup norm of T x, exact.
[[nodiscard]] Scalar image_norm(const ScalarMatrix& t, const std::vector<Scalar>& x);

/// A validated isometric embedding, m inputs and n >= m outputs.
class IsoEmbedding {
public:
  /// Throws DomainError unless validate_embedding holds.
  explicit IsoEmbedding(ScalarMatrix rows);

  [[nodiscard]] std::size_t m() const noexcept { return rows_.empty() ? 0 : rows_[0].size(); }
  [[nodiscard]] std::size_t n() const noexcept { return rows_.size(); }
  [[nodiscard]] const ScalarMatrix& rows() const noexcept { return rows_; }

  friend bool operator==(const IsoEmbedding&, const IsoEmbedding&) = default;

private:
  ScalarMatrix rows_;
};

/// Signed coordinate rows at random positions and in random order; the other
/// rows are random points of the l1 ball with denominators dividing 8.
/// Deterministic in `seed`. Throws DomainError when n < m or m == 0.
[[nodiscard]] IsoEmbedding random_embedding(std::size_t m, std::size_t n, std::uint64_t seed);

/// A spread embedding: rows +e_0, ..., +e_{m-1} in order, each followed by a
/// random number of extra rows supported on the coordinates up to it, of l1
/// norm at most 1. Deterministic in `seed`.
[[nodiscard]] IsoEmbedding random_spread_embedding(std::size_t m, std::size_t n, std::uint64_t seed);

/// Whether `t` has the spread form above.
[[nodiscard]] bool is_spread(const IsoEmbedding& t);

/// The transported tuple: output column k is sum_j T[k][j] x(j). Requires
/// T.m() == x.n(). Throws DomainError otherwise.
[[nodiscard]] TupleLinf apply(const IsoEmbedding& t, const TupleLinf& x);

/// A finitely supported vector of c0, stored as increasing (index, value)
/// pairs with nonzero values.
class SupportedVector {
public:
  SupportedVector() = default;
  /// Throws DomainError unless indices strictly increase and values are nonzero.
  explicit SupportedVector(std::vector<std::pair<std::size_t, Scalar>> entries);

  [[nodiscard]] const std::vector<std::pair<std::size_t, Scalar>>& entries() const noexcept {
    return entries_;
  }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t min_index() const { return entries_.front().first; }
  [[nodiscard]] std::size_t max_index() const { return entries_.back().first; }
  [[nodiscard]] Scalar sup_norm() const;
  [[nodiscard]] bool on_sphere() const { return sup_norm() == Scalar(1); }

  friend bool operator==(const SupportedVector&, const SupportedVector&) = default;

private:
  std::vector<std::pair<std::size_t, Scalar>> entries_;
};

/// Merge the two supports, label indices by owner, and count the maximal
/// runs minus one. Throws DomainError on an empty or overlapping support.
[[nodiscard]] std::size_t intertwine_count(const SupportedVector& x, const SupportedVector& y);

/// Pairs (x_k, y_k), k = 1..pairs, built from consecutive blocks: x_k takes
/// blocks 0, 2, 4, ... and y_k blocks 1, 3, ... among the first k+1, so their
/// supports intertwine exactly k times. Requires consecutive, disjoint,
/// norm-one blocks and pairs <= (blocks - 1) / 2; throws DomainError otherwise.
[[nodiscard]] std::vector<std::pair<SupportedVector, SupportedVector>> unbounded_colour_witness(
    const std::vector<SupportedVector>& blocks, std::size_t pairs);

} // namespace metramsey
