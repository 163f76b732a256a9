#include "metramsey/ramsey.hpp"

#include <algorithm>
#include <limits>

#include "metramsey/errors.hpp"

namespace metramsey {

namespace {

// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

void guard(std::uint64_t colourings, std::uint64_t limit, const std::string& what) {
  if (colourings > limit)
    throw GuardExceeded(what + ": instance too large (" +
                        (colourings == std::numeric_limits<std::uint64_t>::max()
                             ? std::string("more than 2^64")
                             : std::to_string(colourings)) +
                        " colourings, limit " + std::to_string(limit) + ")");
}

// Colourings of `count` items up to renaming of at most k colours: restricted
// growth strings. `accept(i, c)` is called after item i takes colour c and may
// reject the branch; `leaf()` returns true to stop the whole search.
template <class Accept, class Leaf>
bool search_rgs(std::size_t count, std::size_t k, Accept accept, Leaf leaf) {
  std::vector<std::size_t> colour(count, 0);
  std::vector<std::size_t> used(count + 1, 0);  // colours in use before item i
  std::vector<std::size_t> next(count, 0);
  std::size_t i = 0;
  while (true) {
    if (i == count) {
      if (leaf()) return true;
      if (count == 0) return false;
      --i;
      continue;
    }
    const std::size_t limit = std::min(k, used[i] + 1);
    bool placed = false;
    while (next[i] < limit) {
      const std::size_t c = next[i]++;
      colour[i] = c;
      if (!accept(i, c)) continue;
      used[i + 1] = std::max(used[i], c + 1);
      ++i;
      if (i < count) next[i] = 0;
      placed = true;
      break;
    }
    if (placed) continue;
    if (i == 0) return false;
    --i;
  }
}

} // namespace

Word::Word(std::vector<std::size_t> letters, std::size_t alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet) {
  if (alphabet_ == 0) throw DomainError("word alphabet is empty");
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] >= alphabet_)
      throw DomainError("letter at position " + std::to_string(i) + " is outside the alphabet");
}

RigidSurjection::RigidSurjection(std::vector<std::size_t> table) : table_(std::move(table)) {
  if (table_.empty()) throw DomainError("rigid surjection has an empty domain");
  std::size_t seen = 0;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] > seen)
      throw DomainError("value " + std::to_string(table_[i]) + " at position " + std::to_string(i) +
                        " occurs before " + std::to_string(seen));
    if (table_[i] == seen) ++seen;
  }
  n_ = seen;
}

RigidSurjection RigidSurjection::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return RigidSurjection(std::move(t));
}

std::vector<RigidSurjection> enumerate_rigid_surjections(std::size_t m, std::size_t n,
                                                         std::uint64_t max_count) {
  if (n == 0 || n > m) throw DomainError("rigid surjections need 1 <= n <= m");
  std::vector<RigidSurjection> out;
  std::vector<std::size_t> table(m);
  // Prune prefixes that can no longer reach all n values.
  auto accept = [&](std::size_t i, std::size_t c) {
    table[i] = c;
    std::size_t reached = 0;
    for (std::size_t j = 0; j <= i; ++j) reached = std::max(reached, table[j] + 1);
    return n - std::min(n, reached) <= m - 1 - i;
  };
  search_rgs(m, n, accept, [&] {
    if (out.size() == max_count)
      throw GuardExceeded("rigid surjections: more than " + std::to_string(max_count) + " results");
    out.emplace_back(table);
    return false;
  });
  return out;
}

RigidSurjection compose(const RigidSurjection& s, const RigidSurjection& t) {
  if (s.n() != t.m()) throw DomainError("compose: range of the first is not the domain of the second");
  std::vector<std::size_t> out(s.m());
  for (std::size_t i = 0; i < s.m(); ++i) out[i] = t(s(i));
  return RigidSurjection(std::move(out));
}

Word act(const RigidSurjection& s, const Word& w) {
  if (w.size() != s.n())
    throw DomainError("act: word has length " + std::to_string(w.size()) + ", expected " +
                      std::to_string(s.n()));
  std::vector<std::size_t> out(s.m());
  for (std::size_t i = 0; i < s.m(); ++i) out[i] = w[s(i)];
  return Word(std::move(out), w.alphabet());
}

bool hj_line_check(std::size_t a, std::size_t k, std::size_t n, std::uint64_t max_colourings) {
  if (a < 2) throw DomainError("hj_line_check: alphabet needs at least 2 letters");
  if (k < 1) throw DomainError("hj_line_check: need at least one colour");
  if (n < 1) throw DomainError("hj_line_check: word length must be positive");
  const std::uint64_t words = saturating_pow(a, n);
  guard(saturating_pow(k, words), max_colourings, "hj_line_check");

  // Words are base-a numerals, most significant letter first. A line is a
  // template over {0..a-1, *} with at least one *; by_last[w] lists the lines
  // whose largest word is w, as the words of each line.
  std::vector<std::vector<std::vector<std::size_t>>> by_last(words);
  const std::uint64_t templates = saturating_pow(a + 1, n);
  for (std::uint64_t code = 0; code < templates; ++code) {
    std::vector<std::size_t> slot(n);
    std::uint64_t c = code;
    bool has_var = false;
    for (std::size_t p = n; p-- > 0;) {
      slot[p] = static_cast<std::size_t>(c % (a + 1));
      c /= a + 1;
      has_var = has_var || slot[p] == a;
    }
    if (!has_var) continue;
    std::vector<std::size_t> line;
    for (std::size_t letter = 0; letter < a; ++letter) {
      std::size_t w = 0;
      for (std::size_t p = 0; p < n; ++p) w = w * a + (slot[p] == a ? letter : slot[p]);
      line.push_back(w);
    }
    const std::size_t last = *std::max_element(line.begin(), line.end());
    by_last[last].push_back(std::move(line));
  }

  std::vector<std::size_t> colour(words, 0);
  auto accept = [&](std::size_t w, std::size_t c) {
    colour[w] = c;
    for (const auto& line : by_last[w]) {
      const bool mono = std::all_of(line.begin(), line.end(),
                                    [&](std::size_t u) { return colour[u] == c; });
      if (mono) return false;
    }
    return true;
  };
  const bool escape = search_rgs(static_cast<std::size_t>(words), k, accept, [] { return true; });
  return !escape;
}

CopySystem::CopySystem(std::vector<std::string> objects,
                       std::vector<std::vector<std::size_t>> subcopies)
    : objects_(std::move(objects)), subcopies_(std::move(subcopies)) {
  if (objects_.empty()) throw DomainError("copy system has no objects");
  if (subcopies_.empty()) throw DomainError("copy system has no subcopies");
  for (std::size_t s = 0; s < subcopies_.size(); ++s) {
    auto& sub = subcopies_[s];
    if (sub.empty()) throw DomainError("subcopy " + std::to_string(s) + " is empty");
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    if (sub.back() >= objects_.size())
      throw DomainError("subcopy " + std::to_string(s) + " names an object out of range");
  }
}

CopySystem triangle_system(std::size_t n) {
  if (n < 3) throw DomainError("triangle_system: need at least 3 vertices");
  std::vector<std::string> edges;
  std::vector<std::vector<std::size_t>> id(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      id[i][j] = edges.size();
      edges.push_back(std::to_string(i) + "-" + std::to_string(j));
    }
  std::vector<std::vector<std::size_t>> triangles;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) triangles.push_back({id[i][j], id[i][l], id[j][l]});
  return CopySystem(std::move(edges), std::move(triangles));
}

std::size_t min_colours_over_subcopies(const CopySystem& system, std::size_t k,
                                       std::uint64_t max_colourings) {
  if (k < 1) throw DomainError("min_colours_over_subcopies: need at least one colour");
  guard(saturating_pow(k, system.size()), max_colourings, "min_colours_over_subcopies");
  if (k > 64) throw DomainError("min_colours_over_subcopies: at most 64 colours are supported");

  const auto& subs = system.subcopies();
  std::size_t ceiling = k;
  for (const auto& s : subs) ceiling = std::min(ceiling, s.size());
  // completes[i]: subcopies whose largest object is i.
  std::vector<std::vector<std::size_t>> completes(system.size());
  for (std::size_t s = 0; s < subs.size(); ++s) completes[subs[s].back()].push_back(s);

  std::vector<std::size_t> colour(system.size(), 0);
  auto count = [&](std::size_t s) {
    std::uint64_t mask = 0;
    for (std::size_t o : subs[s]) mask |= std::uint64_t{1} << colour[o];
    return static_cast<std::size_t>(__builtin_popcountll(mask));
  };
  // best: the largest per-colouring minimum found so far. A branch whose
  // completed subcopy already shows at most `best` colours cannot beat it.
  std::size_t best = 1;
  auto accept = [&](std::size_t i, std::size_t c) {
    colour[i] = c;
    for (std::size_t s : completes[i])
      if (count(s) <= best) return false;
    return true;
  };
  auto leaf = [&] {
    std::size_t low = ceiling;
    for (std::size_t s = 0; s < subs.size(); ++s) low = std::min(low, count(s));
    best = std::max(best, low);
    return best == ceiling;
  };
  search_rgs(system.size(), k, accept, leaf);
  return best;
}

DiscreteColouring::DiscreteColouring(std::vector<std::size_t> table, std::size_t k)
    : table_(std::move(table)), k_(k) {
  if (k_ < 1) throw DomainError("colouring needs at least one colour");
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= k_)
      throw DomainError("object " + std::to_string(i) + " has colour " + std::to_string(table_[i]) +
                        " outside [0, " + std::to_string(k_) + ")");
}

bool is_persistent_colouring(const CopySystem& system, const DiscreteColouring& chi) {
  if (chi.table().size() != system.size())
    throw DomainError("colouring covers " + std::to_string(chi.table().size()) + " of " +
                      std::to_string(system.size()) + " objects");
  std::vector<bool> seen(chi.k());
  for (const auto& sub : system.subcopies()) {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t distinct = 0;
    for (std::size_t o : sub) {
      if (!seen[chi.table()[o]]) {
        seen[chi.table()[o]] = true;
        ++distinct;
      }
    }
    if (distinct < chi.k()) return false;
  }
  return true;
}

} // namespace metramsey
