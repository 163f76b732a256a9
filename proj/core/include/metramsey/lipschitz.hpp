#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metramsey/scalar.hpp"

namespace metramsey {

/// A finite metric space with named points.
class FiniteMetricSpace {
public:
  FiniteMetricSpace() = default;
  /// Zero distances between distinct points are allowed. Throws DomainError on
  /// a shape mismatch, a nonzero diagonal, asymmetry, a negative distance or a
  /// violated triangle inequality, naming the offending points.
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Scalar>> dist);

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_[i]; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const Scalar& d(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  [[nodiscard]] const std::vector<std::vector<Scalar>>& matrix() const noexcept { return dist_; }
  [[nodiscard]] Scalar diameter() const;

  /// The subspace on the listed points, in the listed order.
  [[nodiscard]] FiniteMetricSpace subspace(const std::vector<std::size_t>& points) const;

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Scalar>> dist_;
};

/// A total map between two finite metric spaces.
class PointMap {
public:
  /// Throws DomainError unless `table` has one valid codomain index per
  /// domain point.
  PointMap(FiniteMetricSpace domain, FiniteMetricSpace codomain, std::vector<std::size_t> table);

  [[nodiscard]] const FiniteMetricSpace& domain() const noexcept { return domain_; }
  [[nodiscard]] const FiniteMetricSpace& codomain() const noexcept { return codomain_; }
  [[nodiscard]] const std::vector<std::size_t>& table() const noexcept { return table_; }
  [[nodiscard]] std::size_t operator()(std::size_t i) const { return table_[i]; }

  friend bool operator==(const PointMap&, const PointMap&) = default;

private:
  FiniteMetricSpace domain_;
  FiniteMetricSpace codomain_;
  std::vector<std::size_t> table_;
};

[[nodiscard]] bool is_one_lipschitz(const PointMap& f);
[[nodiscard]] bool is_surjective(const PointMap& f);

/// A 1-Lipschitz colouring of a finite metric space by points of a target space.
class ColouringTable {
public:
  /// Throws DomainError if the table is malformed or not 1-Lipschitz (the
  /// message names a violating pair).
  ColouringTable(FiniteMetricSpace domain, FiniteMetricSpace target, std::vector<std::size_t> table);

  [[nodiscard]] const FiniteMetricSpace& domain() const noexcept { return map_.domain(); }
  [[nodiscard]] const FiniteMetricSpace& target() const noexcept { return map_.codomain(); }
  [[nodiscard]] const std::vector<std::size_t>& table() const noexcept { return map_.table(); }
  [[nodiscard]] std::size_t operator()(std::size_t i) const { return map_(i); }
  [[nodiscard]] const PointMap& map() const noexcept { return map_; }

  /// Sorted distinct target indices hit by the points of `subset`.
  [[nodiscard]] std::vector<std::size_t> image(const std::vector<std::size_t>& subset) const;

  friend bool operator==(const ColouringTable&, const ColouringTable&) = default;

private:
  PointMap map_;
};

/// K <= L: the lexicographically least 1-Lipschitz surjection L -> K, as a
/// table indexed by the points of L, or nullopt when there is none.
/// Tables are compared as sequences (f(0), f(1), ...).
[[nodiscard]] std::optional<std::vector<std::size_t>> leq(const FiniteMetricSpace& k,
                                                          const FiniteMetricSpace& l);

/// Whether a distance-preserving bijection K -> L exists.
[[nodiscard]] bool isometric(const FiniteMetricSpace& k, const FiniteMetricSpace& l);

/// max over the common domain of the target distance between the colours.
/// Throws DomainError unless both colourings share domain and target.
[[nodiscard]] Scalar sup_dist(const ColouringTable& chi, const ColouringTable& psi);

struct Factorization {
  std::size_t subdomain;  // index into the supplied list
  PointMap f;             // from chi's image on that subdomain into psi's target
};

/// The first subdomain S (in list order) carrying a 1-Lipschitz f from the
/// subspace chi(S) of chi's target into psi's target with
/// d(psi(a), f(chi(a))) <= eps for all a in S, together with the
/// lexicographically least such f (tables ordered by increasing target index
/// of chi(S)). nullopt when no subdomain admits one.
/// Throws DomainError on a domain mismatch, a bad subdomain, or eps < 0.
[[nodiscard]] std::optional<Factorization> factorization_search(
    const ColouringTable& chi, const ColouringTable& psi,
    const std::vector<std::vector<std::size_t>>& subdomains, const Scalar& eps);

} // namespace metramsey
