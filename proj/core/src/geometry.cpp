#include "metramsey/geometry.hpp"

#include <algorithm>
#include <string>

#include "metramsey/errors.hpp"
#include "metramsey/simplex.hpp"

namespace metramsey {

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return c.is_zero(); });
}

Scalar Point::sup_norm() const {
  Scalar m;
  for (const auto& c : coords_) m = max(m, abs(c));
  return m;
}

bool Point::in_unit_cube() const { return sup_norm() <= Scalar(1); }

Point Point::sign_normalized() const {
  for (const auto& c : coords_) {
    if (c.is_zero()) continue;
    return c.sign() < 0 ? -*this : *this;
  }
  return *this;
}

Point operator*(const Scalar& s, const Point& p) {
  std::vector<Scalar> out;
  out.reserve(p.dim());
  for (const auto& c : p.coords_) out.push_back(s * c);
  return Point(std::move(out));
}

Point operator-(const Point& a, const Point& b) {
  std::vector<Scalar> out;
  out.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i] - b[i]);
  return Point(std::move(out));
}

Point operator-(const Point& p) {
  std::vector<Scalar> out;
  out.reserve(p.dim());
  for (const auto& c : p.coords_) out.push_back(-c);
  return Point(std::move(out));
}

Scalar sup_dist(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DomainError("sup_dist: dimension mismatch");
  Scalar m;
  for (std::size_t i = 0; i < a.dim(); ++i) m = max(m, abs(a[i] - b[i]));
  return m;
}

namespace hull {

bool contains(std::span<const Point> gens, const Point& v) {
  // max <u, v> subject to |<u, g>| <= 1 for every generator g, u = u+ - u-.
  // The optimum is the gauge of v; unbounded means v is outside the span.
  const std::size_t d = v.dim();
  const std::size_t g = gens.size();
  lp::Matrix a(2 * g, 2 * d);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t i = 0; i < d; ++i) {
      a(2 * j, i) = gens[j][i];
      a(2 * j, d + i) = -gens[j][i];
      a(2 * j + 1, i) = -gens[j][i];
      a(2 * j + 1, d + i) = gens[j][i];
    }
  }
  std::vector<Scalar> b(2 * g, Scalar(1));
  std::vector<Scalar> c(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    c[i] = v[i];
    c[d + i] = -v[i];
  }
  const auto sol = lp::maximize(a, b, c);
  return sol.status == lp::Status::optimal && sol.value <= Scalar(1);
}

Scalar point_dist(const Point& v, std::span<const Point> gens) {
  // With N = ||v||, maximize s subject to |v_i - x_i| <= N - s, where
  // x = sum (lambda_j - mu_j) g_j and sum (lambda + mu) <= 1. The distance is
  // N - s*. Shifting by N keeps the right-hand side nonnegative.
  const std::size_t d = v.dim();
  const std::size_t g = gens.size();
  const Scalar norm = v.sup_norm();
  lp::Matrix a(2 * d + 1, 2 * g + 1);
  std::vector<Scalar> b(2 * d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      a(2 * i, j) = -gens[j][i];
      a(2 * i, g + j) = gens[j][i];
      a(2 * i + 1, j) = gens[j][i];
      a(2 * i + 1, g + j) = -gens[j][i];
    }
    a(2 * i, 2 * g) = Scalar(1);
    a(2 * i + 1, 2 * g) = Scalar(1);
    b[2 * i] = norm - v[i];
    b[2 * i + 1] = norm + v[i];
  }
  for (std::size_t j = 0; j < 2 * g; ++j) a(2 * d, j) = Scalar(1);
  b[2 * d] = Scalar(1);
  std::vector<Scalar> c(2 * g + 1);
  c[2 * g] = Scalar(1);
  const auto sol = lp::maximize(a, b, c);
  return norm - sol.value;
}

Scalar excess(std::span<const Point> from, std::span<const Point> to) {
  Scalar m;
  for (const auto& p : from) m = max(m, point_dist(p, to));
  return m;
}

Scalar hausdorff(std::span<const Point> a, std::span<const Point> b) {
  return max(excess(a, b), excess(b, a));
}

} // namespace hull

SymPolytope SymPolytope::origin(std::size_t dim) {
  if (dim < 1 || dim > kMaxDim)
    throw DomainError("unsupported dimension " + std::to_string(dim));
  SymPolytope p;
  p.dim_ = dim;
  p.gens_.push_back(Point::zero(dim));
  return p;
}

SymPolytope sc_hull(std::span<const Point> points, std::size_t cap) {
  if (points.empty()) throw DomainError("sc_hull: empty point set");
  const std::size_t d = points.front().dim();
  if (d < 1 || d > kMaxDim) throw DomainError("sc_hull: unsupported dimension " + std::to_string(d));
  std::vector<Point> cand;
  cand.reserve(points.size());
  for (const auto& p : points) {
    if (p.dim() != d) throw DomainError("sc_hull: mixed dimensions");
    if (!p.in_unit_cube()) throw DomainError("sc_hull: coordinate outside [-1,1]");
    if (!p.is_zero()) cand.push_back(p.sign_normalized());
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  if (cand.empty()) return SymPolytope::origin(d);

  // A candidate inside the hull of the others is not a vertex. Dropping a
  // non-vertex leaves the hull unchanged, so the survivors are exactly the
  // vertices (up to sign) whatever the scan order.
  std::vector<Point> rest;
  for (std::size_t i = 0; i < cand.size() && cand.size() > 1;) {
    rest.clear();
    for (std::size_t j = 0; j < cand.size(); ++j)
      if (j != i) rest.push_back(cand[j]);
    if (hull::contains(rest, cand[i]))
      cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  if (cand.size() > cap)
    throw DomainError("sc_hull: " + std::to_string(cand.size()) + " vertices exceed the cap of " +
                      std::to_string(cap));
  SymPolytope out;
  out.dim_ = d;
  out.gens_ = std::move(cand);
  return out;
}

SymPolytope sc_hull(std::initializer_list<Point> points) {
  return sc_hull(std::span<const Point>(points.begin(), points.size()));
}

namespace {
void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) throw DomainError(std::string(op) + ": dimension mismatch");
}
} // namespace

bool contains(const SymPolytope& p, const Point& v) {
  require_same_dim(p.dim(), v.dim(), "contains");
  return hull::contains(p.generators(), v);
}

Scalar point_dist(const Point& v, const SymPolytope& p) {
  require_same_dim(p.dim(), v.dim(), "point_dist");
  return hull::point_dist(v, p.generators());
}

Scalar excess(const SymPolytope& p, const SymPolytope& q) {
  require_same_dim(p.dim(), q.dim(), "excess");
  return hull::excess(p.generators(), q.generators());
}

Scalar hausdorff(const SymPolytope& p, const SymPolytope& q) {
  require_same_dim(p.dim(), q.dim(), "hausdorff");
  if (p == q) return Scalar();
  return hull::hausdorff(p.generators(), q.generators());
}

Interval proj_range(const SymPolytope& p, std::size_t i) {
  if (i >= p.dim()) throw DomainError("proj_range: coordinate index out of range");
  Scalar m;
  for (const auto& g : p.generators()) m = max(m, abs(g[i]));
  return Interval{-m, m};
}

bool subset(const SymPolytope& p, const SymPolytope& q) {
  require_same_dim(p.dim(), q.dim(), "subset");
  const auto gens = p.generators();
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Point& g) { return hull::contains(q.generators(), g); });
}

} // namespace metramsey
