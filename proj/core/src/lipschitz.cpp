#include "metramsey/lipschitz.hpp"

#include <algorithm>

#include "metramsey/errors.hpp"

namespace metramsey {

namespace {

std::string quoted(const std::string& s) { return "'" + s + "'"; }

} // namespace

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<Scalar>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DomainError("metric space has no points");
  if (dist_.size() != n) throw DomainError("distance matrix has the wrong number of rows");
  for (const auto& row : dist_)
    if (row.size() != n) throw DomainError("distance matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!dist_[i][i].is_zero())
      throw DomainError("nonzero self-distance at " + quoted(labels_[i]));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist_[i][j] != dist_[j][i])
        throw DomainError("asymmetric distance between " + quoted(labels_[i]) + " and " +
                          quoted(labels_[j]));
      if (dist_[i][j].sign() < 0)
        throw DomainError("negative distance between " + quoted(labels_[i]) + " and " +
                          quoted(labels_[j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist_[i][k] > dist_[i][j] + dist_[j][k])
          throw DomainError("triangle inequality fails for (" + quoted(labels_[i]) + ", " +
                            quoted(labels_[j]) + ", " + quoted(labels_[k]) + ")");
}

Scalar FiniteMetricSpace::diameter() const {
  Scalar m;
  for (const auto& row : dist_)
    for (const auto& v : row) m = max(m, v);
  return m;
}

FiniteMetricSpace FiniteMetricSpace::subspace(const std::vector<std::size_t>& points) const {
  std::vector<std::string> labels;
  std::vector<std::vector<Scalar>> dist;
  for (std::size_t a : points) {
    if (a >= size()) throw DomainError("subspace: point index out of range");
    labels.push_back(labels_[a]);
    std::vector<Scalar> row;
    for (std::size_t b : points) row.push_back(dist_[a][b]);
    dist.push_back(std::move(row));
  }
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

PointMap::PointMap(FiniteMetricSpace domain, FiniteMetricSpace codomain,
                   std::vector<std::size_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.size())
    throw DomainError("map table has " + std::to_string(table_.size()) + " entries for " +
                      std::to_string(domain_.size()) + " domain points");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= codomain_.size())
      throw DomainError("map sends " + quoted(domain_.label(i)) + " outside the codomain");
}

bool is_one_lipschitz(const PointMap& f) {
  const auto& a = f.domain();
  const auto& b = f.codomain();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (b.d(f(i), f(j)) > a.d(i, j)) return false;
  return true;
}

bool is_surjective(const PointMap& f) {
  std::vector<bool> hit(f.codomain().size(), false);
  for (std::size_t v : f.table()) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

ColouringTable::ColouringTable(FiniteMetricSpace domain, FiniteMetricSpace target,
                               std::vector<std::size_t> table)
    : map_(std::move(domain), std::move(target), std::move(table)) {
  const auto& a = map_.domain();
  const auto& b = map_.codomain();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (b.d(map_(i), map_(j)) > a.d(i, j))
        throw DomainError("colouring is not 1-Lipschitz on the pair (" + quoted(a.label(i)) +
                          ", " + quoted(a.label(j)) + ")");
}

std::vector<std::size_t> ColouringTable::image(const std::vector<std::size_t>& subset) const {
  std::vector<std::size_t> out;
  for (std::size_t a : subset) {
    if (a >= domain().size()) throw DomainError("image: point index out of range");
    out.push_back(map_(a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Depth-first search over tables f: [n] -> [m] in lexicographic order.
// `allowed(i, v)` filters single values; assigned pairs must satisfy
// target.d(f(i), f(j)) <= source.d(i, j).
template <class Allowed, class Feasible>
bool lex_least_map(const FiniteMetricSpace& source, const FiniteMetricSpace& target,
                   Allowed allowed, Feasible feasible, std::vector<std::size_t>& f) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  f.assign(n, 0);
  std::size_t i = 0;
  std::vector<std::size_t> next(n + 1, 0);
  // next[i] is the next candidate value for position i.
  while (true) {
    if (i == n) return true;
    bool placed = false;
    for (std::size_t v = next[i]; v < m; ++v) {
      if (!allowed(i, v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = target.d(v, f[j]) <= source.d(i, j);
      if (!ok) continue;
      f[i] = v;
      if (!feasible(i + 1, f)) continue;
      next[i] = v + 1;
      ++i;
      next[i] = 0;
      placed = true;
      break;
    }
    if (placed) continue;
    if (i == 0) return false;
    --i;
  }
}

} // namespace

std::optional<std::vector<std::size_t>> leq(const FiniteMetricSpace& k, const FiniteMetricSpace& l) {
  if (l.size() < k.size()) return std::nullopt;
  const std::size_t n = l.size();
  const std::size_t m = k.size();
  std::vector<std::size_t> f;
  std::vector<std::size_t> hits(m, 0);
  // Surjectivity pruning: the points still to be placed must be able to cover
  // every value not yet hit.
  auto feasible = [&](std::size_t placed, const std::vector<std::size_t>& table) {
    std::fill(hits.begin(), hits.end(), 0);
    for (std::size_t j = 0; j < placed; ++j) hits[table[j]] = 1;
    std::size_t missing = 0;
    for (auto h : hits) missing += h == 0 ? 1 : 0;
    return missing <= n - placed;
  };
  if (!lex_least_map(l, k, [](std::size_t, std::size_t) { return true; }, feasible, f))
    return std::nullopt;
  return f;
}

bool isometric(const FiniteMetricSpace& k, const FiniteMetricSpace& l) {
  if (k.size() != l.size()) return false;
  const std::size_t n = k.size();
  auto profile = [](const FiniteMetricSpace& s, std::size_t i) {
    std::vector<Scalar> row(s.matrix()[i]);
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<std::vector<Scalar>> pk(n), pl(n);
  for (std::size_t i = 0; i < n; ++i) {
    pk[i] = profile(k, i);
    pl[i] = profile(l, i);
  }
  std::vector<bool> used(n, false);
  auto allowed = [&](std::size_t i, std::size_t v) { return pk[i] == pl[v]; };
  std::vector<std::size_t> f;
  // Injectivity plus exact preservation; the generic search only enforces
  // the contraction half, so the feasibility hook checks the rest.
  auto feasible = [&](std::size_t placed, const std::vector<std::size_t>& table) {
    std::fill(used.begin(), used.end(), false);
    for (std::size_t j = 0; j < placed; ++j) {
      if (used[table[j]]) return false;
      used[table[j]] = true;
    }
    const std::size_t i = placed - 1;
    for (std::size_t j = 0; j < i; ++j)
      if (l.d(table[i], table[j]) != k.d(i, j)) return false;
    return true;
  };
  return lex_least_map(k, l, allowed, feasible, f);
}

Scalar sup_dist(const ColouringTable& chi, const ColouringTable& psi) {
  if (chi.domain() != psi.domain()) throw DomainError("sup_dist: colourings have different domains");
  if (chi.target() != psi.target()) throw DomainError("sup_dist: colourings have different targets");
  Scalar m;
  for (std::size_t a = 0; a < chi.domain().size(); ++a) m = max(m, chi.target().d(chi(a), psi(a)));
  return m;
}

std::optional<Factorization> factorization_search(
    const ColouringTable& chi, const ColouringTable& psi,
    const std::vector<std::vector<std::size_t>>& subdomains, const Scalar& eps) {
  if (chi.domain() != psi.domain())
    throw DomainError("factorization_search: colourings have different domains");
  if (eps.sign() < 0) throw DomainError("factorization_search: eps must be nonnegative");
  const auto& out = psi.target();
  for (std::size_t s = 0; s < subdomains.size(); ++s) {
    const auto& sub = subdomains[s];
    if (sub.empty()) throw DomainError("factorization_search: subdomain " + std::to_string(s) + " is empty");
    const std::vector<std::size_t> img = chi.image(sub);
    const FiniteMetricSpace source = chi.target().subspace(img);
    // allowed[i][v]: sending image point i to v keeps every a in S with
    // chi(a) = img[i] within eps of psi(a).
    std::vector<std::vector<bool>> allowed(img.size(), std::vector<bool>(out.size(), true));
    for (std::size_t a : sub) {
      const auto i = static_cast<std::size_t>(
          std::lower_bound(img.begin(), img.end(), chi(a)) - img.begin());
      for (std::size_t v = 0; v < out.size(); ++v)
        if (out.d(psi(a), v) > eps) allowed[i][v] = false;
    }
    std::vector<std::size_t> f;
    if (lex_least_map(
            source, out, [&](std::size_t i, std::size_t v) { return allowed[i][v]; },
            [](std::size_t, const std::vector<std::size_t>&) { return true; }, f))
      return Factorization{s, PointMap(source, out, std::move(f))};
  }
  return std::nullopt;
}

} // namespace metramsey
