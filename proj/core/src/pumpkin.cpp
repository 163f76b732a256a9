#include "metramsey/pumpkin.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "metramsey/errors.hpp"

namespace metramsey {

TupleLinf::TupleLinf(std::vector<std::vector<Scalar>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.size() > kMaxDim)
    throw DomainError("tuple arity must be between 1 and " + std::to_string(kMaxDim));
  const std::size_t n = rows_[0].size();
  if (n == 0) throw DomainError("tuple has no coordinates");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != n) throw DomainError("tuple rows have different lengths");
    for (const auto& v : rows_[i])
      if (abs(v) > Scalar(1))
        throw DomainError("tuple row " + std::to_string(i) + " has an entry outside [-1,1]");
  }
}

Point TupleLinf::column(std::size_t k) const {
  std::vector<Scalar> c;
  c.reserve(d());
  for (const auto& row : rows_) c.push_back(row[k]);
  return Point(std::move(c));
}

std::optional<std::size_t> TupleLinf::first_row_off_sphere() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar m;
    for (const auto& v : rows_[i]) m = max(m, abs(v));
    if (m != Scalar(1)) return i;
  }
  return std::nullopt;
}

Scalar sup_dist(const TupleLinf& x, const TupleLinf& y) {
  if (x.d() != y.d() || x.n() != y.n()) throw DomainError("sup_dist: tuple shapes differ");
  return padded_sup_dist(x, y);
}

Scalar padded_sup_dist(const TupleLinf& x, const TupleLinf& y) {
  if (x.d() != y.d()) throw DomainError("padded_sup_dist: tuple arities differ");
  const std::size_t n = std::max(x.n(), y.n());
  Scalar m;
  for (std::size_t i = 0; i < x.d(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar a = k < x.n() ? x.at(i, k) : Scalar();
      const Scalar b = k < y.n() ? y.at(i, k) : Scalar();
      m = max(m, abs(a - b));
    }
  }
  return m;
}

const char* to_string(PumpkinDiagnosis::Kind kind) {
  switch (kind) {
    case PumpkinDiagnosis::Kind::valid: return "valid";
    case PumpkinDiagnosis::Kind::partial: return "partial";
    case PumpkinDiagnosis::Kind::malformed: return "malformed";
  }
  return "malformed";
}

namespace {

std::vector<Point> with_point(std::span<const Point> gens, const Point& extra) {
  std::vector<Point> out(gens.begin(), gens.end());
  out.push_back(extra);
  return out;
}

SymPolytope stage_end(const Stage& s) { return sc_hull(with_point(s.base.generators(), s.direction)); }

} // namespace

Pumpkin pp_colour(const TupleLinf& x) {
  if (auto row = x.first_row_off_sphere())
    throw DomainError("tuple row " + std::to_string(*row) + " is not a unit vector of l-infinity");
  Pumpkin p;
  p.dim = x.d();
  SymPolytope base = SymPolytope::origin(x.d());
  for (std::size_t k = 0; k < x.n(); ++k) {
    Point dir = x.column(k);
    SymPolytope next = sc_hull(with_point(base.generators(), dir));
    p.stages.push_back(Stage{std::move(base), std::move(dir)});
    base = std::move(next);
  }
  p.final_body = std::move(base);
  return p;
}

PumpkinDiagnosis pumpkin_valid(const Pumpkin& p) {
  using Kind = PumpkinDiagnosis::Kind;
  auto malformed = [](std::string why) { return PumpkinDiagnosis{Kind::malformed, std::move(why)}; };
  if (p.dim < 1 || p.dim > kMaxDim) return malformed("unsupported dimension");
  if (p.stages.empty()) return malformed("no stages");
  if (p.final_body.dim() != p.dim) return malformed("final body has the wrong dimension");
  for (std::size_t k = 0; k < p.stages.size(); ++k) {
    const auto& s = p.stages[k];
    const std::string at = "stage " + std::to_string(k);
    if (s.base.dim() != p.dim || s.direction.dim() != p.dim)
      return malformed(at + " has the wrong dimension");
    if (!s.direction.in_unit_cube()) return malformed(at + " direction leaves the cube");
  }
  if (!p.stages[0].base.is_origin()) return malformed("stage 0 base is not {0}");
  for (std::size_t k = 0; k + 1 < p.stages.size(); ++k) {
    if (stage_end(p.stages[k]) != p.stages[k + 1].base)
      return malformed("stage " + std::to_string(k + 1) +
                       " base is not the hull of stage " + std::to_string(k) +
                       " base and direction");
  }
  const SymPolytope end = stage_end(p.stages.back());
  if (!subset(end, p.final_body)) return malformed("final body does not contain the last stage");
  if (end != p.final_body)
    return malformed("final body is strictly larger than the end of the last stage");
  for (std::size_t i = 0; i < p.dim; ++i) {
    if (proj_range(p.final_body, i) != Interval{Scalar(-1), Scalar(1)})
      return PumpkinDiagnosis{Kind::partial,
                              "final body does not reach the faces of coordinate " +
                                  std::to_string(i)};
  }
  return PumpkinDiagnosis{};
}

namespace {

// A well-formed chain viewed as the path s ↦ B(s), s ∈ [0, N]: for
// s = k + t with t ∈ [0,1], B(s) = sc(base_k ∪ {t·direction_k}). The path is
// continuous, inclusion-increasing and 1-Lipschitz for the Hausdorff metric.
class ChainPath {
public:
  explicit ChainPath(const Pumpkin& p) : p_(p) {}

  [[nodiscard]] std::size_t stages() const { return p_.stages.size(); }
  [[nodiscard]] Scalar end() const { return Scalar(static_cast<std::int64_t>(stages())); }
  [[nodiscard]] const Stage& stage(std::size_t k) const { return p_.stages[k]; }

  // Stage index and local parameter; s = N maps to the end of the last stage.
  [[nodiscard]] std::pair<std::size_t, Scalar> locate(const Scalar& s) const {
    auto k = static_cast<std::size_t>(std::max<std::int64_t>(0, floor_int(s)));
    if (k >= stages()) k = stages() - 1;
    return {k, s - Scalar(static_cast<std::int64_t>(k))};
  }

  // Generators of B(s), without zero points; {0} when nothing else remains.
  [[nodiscard]] std::vector<Point> body(const Scalar& s) const {
    auto [k, t] = locate(s);
    std::vector<Point> gens;
    for (const auto& g : stage(k).base.generators())
      if (!g.is_zero()) gens.push_back(g);
    Point moving = t * stage(k).direction;
    if (!moving.is_zero()) gens.push_back(std::move(moving));
    if (gens.empty()) gens.push_back(Point::zero(p_.dim));
    return gens;
  }

private:
  const Pumpkin& p_;
};

// Infimum over the target chain of d_H(A, B(s)) for one fixed body A.
struct Crossing {
  Scalar lo;      // certified lower bound
  Scalar hi;      // d_H(A, B(best)), an upper bound
  Scalar best;    // parameter attaining hi
  Scalar below;   // forward excess dominates here: e(A→B) >= e(B→A)
  Scalar above;   // and fails here (equal to below only at the chain end)
};

class CrossingSolver {
public:
  CrossingSolver(const ChainPath& target, std::vector<Point> body)
      : target_(target), body_(std::move(body)) {}

  Crossing solve(Scalar below, Scalar above, const Scalar& tol) {
    const Scalar end = target_.end();
    Probe pb = probe(below);
    if (pb.fwd < pb.back) {
      below = Scalar();
      pb = probe(below);
    }
    Probe pa = probe(above);
    if (pa.fwd >= pa.back && above != end) {
      above = end;
      pa = probe(above);
    }
    if (pa.fwd >= pa.back) {
      // The forward excess dominates along the whole chain, so the distance is
      // nonincreasing and the end of the chain is optimal.
      return Crossing{pa.fwd, pa.fwd, end, end, end};
    }
    for (;;) {
      const Scalar lo = max(pa.fwd, pb.back);
      const Scalar hi_below = pb.fwd;  // = max(fwd, back) at `below`
      const Scalar hi_above = pa.back;
      const Scalar hi = min(hi_below, hi_above);
      if (hi - lo <= tol) {
        return Crossing{lo, hi, hi_below <= hi_above ? below : above, below, above};
      }
      Scalar mid = (below + above) / Scalar(2);
      Probe pm = probe(mid);
      if (pm.fwd >= pm.back) {
        below = std::move(mid);
        pb = std::move(pm);
      } else {
        above = std::move(mid);
        pa = std::move(pm);
      }
    }
  }

  [[nodiscard]] std::span<const Point> body() const { return body_; }

private:
  struct Probe {
    Scalar fwd;   // e(A → B(s))
    Scalar back;  // e(B(s) → A)
  };

  Probe probe(const Scalar& s) {
    const std::vector<Point> b = target_.body(s);
    Probe out;
    out.fwd = hull::excess(body_, b);
    auto [k, t] = target_.locate(s);
    out.back = max(base_excess(k), hull::point_dist(t * target_.stage(k).direction, body_));
    return out;
  }

  // e(base_k → A), reused across probes in the same stage.
  const Scalar& base_excess(std::size_t k) {
    auto it = base_cache_.find(k);
    if (it == base_cache_.end())
      it = base_cache_.emplace(k, hull::excess(target_.stage(k).base.generators(), body_)).first;
    return it->second;
  }

  const ChainPath& target_;
  std::vector<Point> body_;
  std::map<std::size_t, Scalar> base_cache_;
};

// One side of the chain distance: sup over A in `from` of inf over B in `to`.
class DirectedSearch {
public:
  // `floor` is a value already attained by the other direction; intervals
  // whose bound stays below it need no refinement.
  DirectedSearch(const Pumpkin& from, const Pumpkin& to, const Scalar& eps, Scalar floor)
      : from_(from), to_(to), probe_tol_(eps / Scalar(4)), close_tol_(eps / Scalar(2)),
        lower_(std::move(floor)) {}

  struct Bounds {
    Scalar lo;
    Scalar hi;
  };

  Bounds run() {
    // Breakpoints first, in order, so every bracket can start from the
    // previous crossing: the crossing parameter is nondecreasing along `from`.
    const std::size_t n = from_.stages();
    Scalar hint_below;
    for (std::size_t k = 0; k <= n; ++k) {
      nodes_.push_back(evaluate(Scalar(static_cast<std::int64_t>(k)), hint_below, to_.end()));
      hint_below = nodes_.back().c.below;
    }
    for (std::size_t k = 0; k < n; ++k) push_interval(k, k + 1, k);

    while (!heap_.empty() && heap_.top().ub > lower_ + close_tol_) {
      Interval iv = heap_.top();
      heap_.pop();
      const Scalar mid = (nodes_[iv.left].r + nodes_[iv.right].r) / Scalar(2);
      nodes_.push_back(evaluate(mid, nodes_[iv.left].c.below, nodes_[iv.right].c.above));
      const std::size_t m = nodes_.size() - 1;
      push_interval(iv.left, m, iv.stage);
      push_interval(m, iv.right, iv.stage);
    }
    Scalar upper = lower_;
    if (!heap_.empty()) upper = max(upper, heap_.top().ub);
    for (const auto& nd : nodes_) upper = max(upper, nd.c.hi);
    return Bounds{lower_, upper};
  }

private:
  struct Node {
    Scalar r;
    Crossing c;
    std::vector<Point> body;
  };
  struct Interval {
    std::size_t left;
    std::size_t right;
    std::size_t stage;
    Scalar ub;
    bool operator<(const Interval& o) const { return ub < o.ub; }
  };

  Node evaluate(const Scalar& r, const Scalar& below, const Scalar& above) {
    CrossingSolver solver(to_, from_.body(r));
    Crossing c = solver.solve(below, above, probe_tol_);
    lower_ = max(lower_, c.lo);
    return Node{r, std::move(c), from_.body(r)};
  }

  void push_interval(std::size_t left, std::size_t right, std::size_t stage) {
    const Node& a = nodes_[left];
    const Node& b = nodes_[right];
    const Scalar width = b.r - a.r;
    Scalar ub = (a.c.hi + b.c.hi + width) / Scalar(2);
    if (ub > lower_ + close_tol_) ub = min(ub, matched_bound(a, b, stage));
    heap_.push(Interval{left, right, stage, std::move(ub)});
  }

  // Pair the affine growth of A(r), r ∈ [r1,r2], with that of B(s) inside
  // the target stage holding s1, the best match of r1. Writing
  // A(r) = sc(A(r1) ∪ {t v}) and B(s) = sc(B(s1) ∪ {τ w}) with τ affine in r
  // from τ1 to any τ2 ∈ [τ1, 1]:
  //   d_H(A(r), B(s)) <= max(d_H(A(r1), B(s1)), added-point terms),
  // where each added point is bounded both by its distance to the other
  // starting body (convex in the parameter) and by ||t v ∓ τ w|| (convex
  // along the matching), so endpoint values suffice. τ2 follows the best
  // match of r2, clamped into the stage.
  Scalar matched_bound(const Node& a, const Node& b, std::size_t k) const {
    const Scalar& s1 = a.c.best;
    const auto [l, tau1] = to_.locate(s1);
    const Scalar tau2 =
        min(Scalar(1), max(tau1, b.c.best - Scalar(static_cast<std::int64_t>(l))));

    const Point& v = from_.stage(k).direction;
    const Point& w = to_.stage(l).direction;
    const Scalar t1 = a.r - Scalar(static_cast<std::int64_t>(k));
    const Scalar t2 = b.r - Scalar(static_cast<std::int64_t>(k));
    const Scalar& base_term = a.c.hi;

    std::optional<Scalar> lin;
    for (int sign : {1, -1}) {
      const Scalar sg(sign);
      const Scalar e1 = (t1 * v - (sg * tau1) * w).sup_norm();
      const Scalar e2 = (t2 * v - (sg * tau2) * w).sup_norm();
      const Scalar& e = max(e1, e2);
      if (!lin || e < *lin) lin = e;
    }
    if (*lin <= base_term) return base_term;

    const std::vector<Point> b1 = to_.body(s1);
    const Scalar fwd = hull::point_dist(t2 * v, b1);
    const Scalar back = hull::point_dist(tau2 * w, a.body);
    return max(base_term, max(min(fwd, *lin), min(back, *lin)));
  }

  ChainPath from_;
  ChainPath to_;
  Scalar probe_tol_;
  Scalar close_tol_;
  Scalar lower_;
  std::vector<Node> nodes_;
  std::priority_queue<Interval> heap_;
};

void require_distance_input(const Pumpkin& p, const char* which) {
  const auto diag = pumpkin_valid(p);
  if (diag.kind == PumpkinDiagnosis::Kind::malformed)
    throw DomainError(std::string("pumpkin_dist: ") + which + " pumpkin is malformed: " + diag.reason);
}

} // namespace

Scalar pumpkin_dist(const Pumpkin& p, const Pumpkin& q, const Scalar& eps) {
  if (p.dim != q.dim) throw DomainError("pumpkin_dist: dimension mismatch");
  if (eps.sign() <= 0) throw DomainError("pumpkin_dist: eps must be positive");
  require_distance_input(p, "first");
  require_distance_input(q, "second");
  if (p == q) return Scalar();
  const auto pq = DirectedSearch(p, q, eps, Scalar()).run();
  const auto qp = DirectedSearch(q, p, eps, pq.lo).run();
  return qp.lo;
}

TupleLinf pumpkin_witness(const Pumpkin& p, const Scalar& eps) {
  if (eps.sign() <= 0) throw DomainError("pumpkin_witness: eps must be positive");
  const auto diag = pumpkin_valid(p);
  if (diag.kind != PumpkinDiagnosis::Kind::valid)
    throw DomainError(std::string("pumpkin_witness: pumpkin is ") + to_string(diag.kind) + ": " +
                      diag.reason);
  std::vector<std::vector<Scalar>> rows(p.dim);
  for (const auto& s : p.stages)
    for (std::size_t i = 0; i < p.dim; ++i) rows[i].push_back(s.direction[i]);
  return TupleLinf(std::move(rows));
}

Pumpkin canonical_pum1() {
  Pumpkin p;
  p.dim = 1;
  p.stages.push_back(Stage{SymPolytope::origin(1), Point{Scalar(1)}});
  p.final_body = sc_hull({Point{Scalar(1)}});
  return p;
}

} // namespace metramsey
