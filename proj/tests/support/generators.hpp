#pragma once

#include <cstdint>
#include <vector>

#include "metramsey/geometry.hpp"
#include "metramsey/lipschitz.hpp"
#include "metramsey/pumpkin.hpp"
#include "metramsey/random.hpp"

// Seeded generators for property tests.
namespace metramsey::testgen {

inline Scalar rational(Rng& rng, std::int64_t den) { return rng.unit_rational(den); }

inline Point point(Rng& rng, std::size_t d, std::int64_t den) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < d; ++i) c.push_back(rational(rng, den));
  return Point(std::move(c));
}

inline std::vector<Point> points(Rng& rng, std::size_t d, std::size_t count, std::int64_t den) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(point(rng, d, den));
  return out;
}

inline SymPolytope polytope(Rng& rng, std::size_t d, std::size_t max_points, std::int64_t den) {
  return sc_hull(points(rng, d, 1 + rng.below(max_points), den));
}

/// A d×n sphere tuple: random entries, then one entry per row forced to ±1.
inline TupleLinf sphere_tuple(Rng& rng, std::size_t d, std::size_t n, std::int64_t den) {
  std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(n));
  for (auto& row : rows) {
    for (auto& v : row) v = rational(rng, den);
    row[rng.below(n)] = Scalar(rng.coin() ? 1 : -1);
  }
  return TupleLinf(std::move(rows));
}

/// Moves every entry of modulus below 1 by at most `step`/den, staying inside
/// the open cube, so the result is still a sphere tuple of the same shape.
inline TupleLinf perturb(Rng& rng, const TupleLinf& x, std::int64_t step, std::int64_t den) {
  auto rows = x.rows();
  for (auto& row : rows)
    for (auto& v : row) {
      if (abs(v) == Scalar(1)) continue;
      Scalar w = v + Scalar(rng.between(-step, step), den);
      if (abs(w) < Scalar(1)) v = w;
    }
  return TupleLinf(std::move(rows));
}

/// A finite metric space: points of [0,1]^2 under the sup metric, rounded
/// to multiples of 1/den.
inline FiniteMetricSpace metric_space(Rng& rng, std::size_t n, std::int64_t den) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back(Point{Scalar(rng.between(0, den), den), Scalar(rng.between(0, den), den)});
  std::vector<std::string> labels;
  std::vector<std::vector<Scalar>> dist(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) dist[i][j] = sup_dist(pts[i], pts[j]);
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

} // namespace metramsey::testgen
