#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace metramsey {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline and
/// combined with overflow-checked machine arithmetic; anything larger is
/// promoted to a GMP rational and demoted again when it shrinks back. The
/// representation is always canonical (lowest terms, positive denominator), so
/// equal values compare equal regardless of how they were produced.
class Scalar {
public:
  Scalar() noexcept = default;
  Scalar(std::int64_t n) noexcept; // NOLINT(google-explicit-constructor)
  Scalar(int n) noexcept : Scalar(static_cast<std::int64_t>(n)) {} // NOLINT
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& q);

  /// Parses "p/q", "p", or a finite decimal such as "-0.125".
  static Scalar parse(std::string_view text);

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  /// Numerator and denominator of an inline value; only valid when is_small().
  [[nodiscard]] std::int64_t small_num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t small_den() const noexcept { return den_; }
  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept;
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  static Scalar from_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  // Immutable once built, so copies can share it.
  std::shared_ptr<const mpq_class> big_;
};

/// Largest integer not above `s`; throws DomainError if it does not fit in 64 bits.
[[nodiscard]] std::int64_t floor_int(const Scalar& s);

[[nodiscard]] inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
[[nodiscard]] inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
[[nodiscard]] inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

} // namespace metramsey
