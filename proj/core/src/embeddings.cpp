#include "metramsey/embeddings.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "metramsey/errors.hpp"
#include "metramsey/random.hpp"

namespace metramsey {

namespace {

std::size_t checked_width(const ScalarMatrix& t) {
  if (t.empty() || t[0].empty()) throw DomainError("embedding matrix is empty");
  for (const auto& row : t)
    if (row.size() != t[0].size()) throw DomainError("embedding matrix is ragged");
  return t[0].size();
}

Scalar l1(const std::vector<Scalar>& row) {
  Scalar s;
  for (const auto& v : row) s += abs(v);
  return s;
}

// Column j of `row` is ±1 and every other entry is 0.
bool is_signed_unit(const std::vector<Scalar>& row, std::size_t j) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i == j ? abs(row[i]) != Scalar(1) : !row[i].is_zero()) return false;
  }
  return true;
}

constexpr std::int64_t kRowDenominator = 8;

// A random point of the l1 ball on the first `support` coordinates.
std::vector<Scalar> random_l1_row(Rng& rng, std::size_t m, std::size_t support) {
  std::vector<std::int64_t> raw(support);
  std::int64_t total = 0;
  for (auto& v : raw) {
    v = rng.between(-kRowDenominator, kRowDenominator);
    total += v < 0 ? -v : v;
  }
  const std::int64_t den = std::max(total, kRowDenominator);
  std::vector<Scalar> row(m);
  for (std::size_t j = 0; j < support; ++j) row[j] = Scalar(raw[j], den);
  return row;
}

std::vector<Scalar> unit_row(std::size_t m, std::size_t j, int sign) {
  std::vector<Scalar> row(m);
  row[j] = Scalar(sign);
  return row;
}

} // namespace

bool validate_embedding(const ScalarMatrix& t) {
  if (t.empty() || t[0].empty()) return false;
  for (const auto& row : t)
    if (row.size() != t[0].size()) return false;
  return !embedding_defect(t);
}

std::optional<EmbeddingDefect> embedding_defect(const ScalarMatrix& t) {
  const std::size_t m = checked_width(t);
  for (const auto& row : t) {
    if (l1(row) > Scalar(1)) {
      std::vector<Scalar> x(m);
      for (std::size_t j = 0; j < m; ++j) x[j] = Scalar(row[j].sign() < 0 ? -1 : 1);
      return EmbeddingDefect{EmbeddingDefect::Kind::expands, std::move(x)};
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const bool found =
        std::any_of(t.begin(), t.end(), [&](const auto& row) { return is_signed_unit(row, j); });
    if (!found) {
      std::vector<Scalar> x(m);
      x[j] = Scalar(1);
      return EmbeddingDefect{EmbeddingDefect::Kind::contracts, std::move(x)};
    }
  }
  return std::nullopt;
}

Scalar image_norm(const ScalarMatrix& t, const std::vector<Scalar>& x) {
  const std::size_t m = checked_width(t);
  if (x.size() != m) throw DomainError("image_norm: vector has the wrong length");
  Scalar best;
  for (const auto& row : t) {
    Scalar s;
    for (std::size_t j = 0; j < m; ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) s += row[j] * x[j];
    best = max(best, abs(s));
  }
  return best;
}

IsoEmbedding::IsoEmbedding(ScalarMatrix rows) : rows_(std::move(rows)) {
  if (!validate_embedding(rows_))
    throw DomainError("matrix is not a linear isometric embedding");
}

IsoEmbedding random_embedding(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m == 0) throw DomainError("random_embedding: m must be positive");
  if (n < m) throw DomainError("random_embedding: n must be at least m");
  Rng rng(seed);
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), 0);
  // Partial Fisher-Yates: the first m slots receive e_0, ..., e_{m-1}.
  for (std::size_t i = 0; i < m; ++i)
    std::swap(positions[i], positions[i + rng.below(n - i)]);
  ScalarMatrix rows(n);
  std::vector<bool> taken(n, false);
  for (std::size_t j = 0; j < m; ++j) {
    rows[positions[j]] = unit_row(m, j, rng.coin() ? 1 : -1);
    taken[positions[j]] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!taken[k]) rows[k] = random_l1_row(rng, m, m);
  return IsoEmbedding(std::move(rows));
}

IsoEmbedding random_spread_embedding(std::size_t m, std::size_t n, std::uint64_t seed) {
  if (m == 0) throw DomainError("random_spread_embedding: m must be positive");
  if (n < m) throw DomainError("random_spread_embedding: n must be at least m");
  Rng rng(seed);
  std::vector<std::size_t> extra(m, 0);
  for (std::size_t r = 0; r < n - m; ++r) ++extra[rng.below(m)];
  ScalarMatrix rows;
  for (std::size_t j = 0; j < m; ++j) {
    rows.push_back(unit_row(m, j, 1));
    for (std::size_t r = 0; r < extra[j]; ++r) rows.push_back(random_l1_row(rng, m, j + 1));
  }
  return IsoEmbedding(std::move(rows));
}

bool is_spread(const IsoEmbedding& t) {
  const std::size_t m = t.m();
  std::size_t next = 0;
  for (const auto& row : t.rows()) {
    if (next < m && row[next] == Scalar(1) && is_signed_unit(row, next)) {
      ++next;
      continue;
    }
    if (next == 0) return false;
    for (std::size_t j = next; j < m; ++j)
      if (!row[j].is_zero()) return false;
    if (l1(row) > Scalar(1)) return false;
  }
  return next == m;
}

TupleLinf apply(const IsoEmbedding& t, const TupleLinf& x) {
  if (t.m() != x.n())
    throw DomainError("apply: embedding takes " + std::to_string(t.m()) + " columns, tuple has " +
                      std::to_string(x.n()));
  std::vector<std::vector<Scalar>> out(x.d(), std::vector<Scalar>(t.n()));
  for (std::size_t i = 0; i < x.d(); ++i) {
    for (std::size_t k = 0; k < t.n(); ++k) {
      Scalar s;
      const auto& row = t.rows()[k];
      for (std::size_t j = 0; j < t.m(); ++j)
        if (!row[j].is_zero()) s += row[j] * x.at(i, j);
      out[i][k] = std::move(s);
    }
  }
  return TupleLinf(std::move(out));
}

SupportedVector::SupportedVector(std::vector<std::pair<std::size_t, Scalar>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second.is_zero())
      throw DomainError("support entry at index " + std::to_string(entries_[i].first) + " is zero");
    if (i > 0 && entries_[i].first <= entries_[i - 1].first)
      throw DomainError("support indices must strictly increase");
  }
}

Scalar SupportedVector::sup_norm() const {
  Scalar m;
  for (const auto& [i, v] : entries_) m = max(m, abs(v));
  return m;
}

std::size_t intertwine_count(const SupportedVector& x, const SupportedVector& y) {
  if (x.empty() || y.empty()) throw DomainError("intertwine_count: empty support");
  const auto& a = x.entries();
  const auto& b = y.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t changes = 0;
  int last = -1;
  while (i < a.size() || j < b.size()) {
    int owner = 0;
    if (i < a.size() && j < b.size()) {
      if (a[i].first == b[j].first)
        throw DomainError("intertwine_count: supports overlap at index " + std::to_string(a[i].first));
      owner = a[i].first < b[j].first ? 0 : 1;
    } else {
      owner = i < a.size() ? 0 : 1;
    }
    if (owner == 0) ++i;
    else ++j;
    if (last >= 0 && owner != last) ++changes;
    last = owner;
  }
  return changes;
}

std::vector<std::pair<SupportedVector, SupportedVector>> unbounded_colour_witness(
    const std::vector<SupportedVector>& blocks, std::size_t pairs) {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("block " + std::to_string(b) + " is empty");
    if (!blocks[b].on_sphere()) throw DomainError("block " + std::to_string(b) + " does not have norm one");
    if (b > 0 && blocks[b].min_index() <= blocks[b - 1].max_index())
      throw DomainError("block " + std::to_string(b) + " does not follow block " + std::to_string(b - 1));
  }
  const std::size_t budget = blocks.empty() ? 0 : (blocks.size() - 1) / 2;
  if (pairs > budget)
    throw DomainError("unbounded_colour_witness: " + std::to_string(blocks.size()) +
                      " blocks allow at most " + std::to_string(budget) + " pairs");
  std::vector<std::pair<SupportedVector, SupportedVector>> out;
  for (std::size_t k = 1; k <= pairs; ++k) {
    std::vector<std::pair<std::size_t, Scalar>> x;
    std::vector<std::pair<std::size_t, Scalar>> y;
    for (std::size_t b = 0; b <= k; ++b) {
      auto& owner = b % 2 == 0 ? x : y;
      owner.insert(owner.end(), blocks[b].entries().begin(), blocks[b].entries().end());
    }
    out.emplace_back(SupportedVector(std::move(x)), SupportedVector(std::move(y)));
  }
  return out;
}

} // namespace metramsey
