#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace metramsey {

inline constexpr std::uint64_t kDefaultMaxColourings = std::uint64_t{1} << 27;

/// A finite word over the alphabet {0, ..., alphabet-1}.
class Word {
public:
  /// Throws DomainError on a letter outside the alphabet or an empty alphabet.
  Word(std::vector<std::size_t> letters, std::size_t alphabet);

  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] std::size_t alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const std::vector<std::size_t>& letters() const noexcept { return letters_; }
  [[nodiscard]] std::size_t operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<std::size_t> letters_;
  std::size_t alphabet_ = 0;
};

/// A surjection [m] -> [n] whose values first occur in increasing order.
class RigidSurjection {
public:
  /// Throws DomainError unless `table` is onto [n] with ordered first
  /// occurrences. The range size is 1 + max value.
  explicit RigidSurjection(std::vector<std::size_t> table);

  [[nodiscard]] std::size_t m() const noexcept { return table_.size(); }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<std::size_t>& table() const noexcept { return table_; }
  [[nodiscard]] std::size_t operator()(std::size_t i) const { return table_[i]; }

  static RigidSurjection identity(std::size_t n);

  friend bool operator==(const RigidSurjection&, const RigidSurjection&) = default;
  friend auto operator<=>(const RigidSurjection& a, const RigidSurjection& b) {
    return a.table_ <=> b.table_;
  }

private:
  std::vector<std::size_t> table_;
  std::size_t n_ = 0;
};

/// All rigid surjections [m] -> [n] in lexicographic order of tables.
/// Throws DomainError unless 1 <= n <= m, and GuardExceeded when more than
/// `max_count` would be produced.
[[nodiscard]] std::vector<RigidSurjection> enumerate_rigid_surjections(
    std::size_t m, std::size_t n, std::uint64_t max_count = 1'000'000);

/// The composite i ↦ t(s(i)), so that act(compose(s, t), w) = act(s, act(t, w)).
/// Requires s.n() == t.m().
[[nodiscard]] RigidSurjection compose(const RigidSurjection& s, const RigidSurjection& t);

/// The word i ↦ w[s(i)] of length s.m(). Requires w.size() == s.n().
[[nodiscard]] Word act(const RigidSurjection& s, const Word& w);

/// Whether every k-colouring of the words of length n over an a-letter
/// alphabet has a monochromatic combinatorial line (one variable slot set,
/// the variable ranging over the alphabet). Exhaustive backtracking search for
/// a colouring without one. Throws DomainError on a < 2, k < 1 or n < 1, and
/// GuardExceeded when k^(a^n) exceeds `max_colourings`.
[[nodiscard]] bool hj_line_check(std::size_t a, std::size_t k, std::size_t n,
                                 std::uint64_t max_colourings = kDefaultMaxColourings);

/// A finite set of objects with an extensional list of sub-copies.
class CopySystem {
public:
  /// Subcopies are sorted and deduplicated. Throws DomainError on an empty
  /// object set, an empty subcopy list, an empty subcopy or an index out of range.
  CopySystem(std::vector<std::string> objects, std::vector<std::vector<std::size_t>> subcopies);

  [[nodiscard]] std::size_t size() const noexcept { return objects_.size(); }
  [[nodiscard]] const std::vector<std::string>& objects() const noexcept { return objects_; }
  [[nodiscard]] const std::vector<std::vector<std::size_t>>& subcopies() const noexcept {
    return subcopies_;
  }

  friend bool operator==(const CopySystem&, const CopySystem&) = default;

private:
  std::vector<std::string> objects_;
  std::vector<std::vector<std::size_t>> subcopies_;
};

/// Edges of the complete graph on n vertices, with the edge sets of all
/// triangles as subcopies.
[[nodiscard]] CopySystem triangle_system(std::size_t n);

/// The least t such that every k-colouring of the objects takes at most t
/// values on some subcopy. Colourings are enumerated up to renaming of the
/// colours, which leaves every per-subcopy colour count unchanged.
/// Throws DomainError on k < 1, GuardExceeded when k^|objects| exceeds
/// `max_colourings`.
[[nodiscard]] std::size_t min_colours_over_subcopies(const CopySystem& system, std::size_t k,
                                                     std::uint64_t max_colourings = kDefaultMaxColourings);

/// A total colouring of a copy system's objects with k declared colours.
class DiscreteColouring {
public:
  /// Throws DomainError on k < 1 or a colour >= k.
  DiscreteColouring(std::vector<std::size_t> table, std::size_t k);

  [[nodiscard]] std::size_t k() const noexcept { return k_; }
  [[nodiscard]] const std::vector<std::size_t>& table() const noexcept { return table_; }

private:
  std::vector<std::size_t> table_;
  std::size_t k_;
};

/// Whether the colouring takes all k colours on every subcopy. Throws
/// DomainError when the table does not cover the objects.
[[nodiscard]] bool is_persistent_colouring(const CopySystem& system, const DiscreteColouring& chi);

} // namespace metramsey
