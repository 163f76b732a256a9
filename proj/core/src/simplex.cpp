#include "metramsey/simplex.hpp"

#include <limits>
#include <numeric>
#include <optional>

#include "metramsey/errors.hpp"

namespace metramsey::lp {
namespace {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

constexpr i64 kMax = std::numeric_limits<i64>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

// Least common multiple of the denominators of `row`, or nullopt when any
// entry is big or the multiple overflows.
std::optional<i64> row_scale(std::span<const Scalar* const> row) {
  i64 l = 1;
  for (const Scalar* s : row) {
    if (!s->is_small()) return std::nullopt;
    const i64 d = s->small_den();
    const i64 g = std::gcd(l, d);
    const i128 next = i128(l / g) * d;
    if (!fits(next)) return std::nullopt;
    l = static_cast<i64>(next);
  }
  return l;
}

std::optional<i64> scaled(const Scalar& s, i64 scale) {
  const i128 v = i128(s.small_num()) * (scale / s.small_den());
  if (!fits(v)) return std::nullopt;
  return static_cast<i64>(v);
}

// Integer-preserving (Edmonds) pivoting. Row r of the integer tableau equals
// det(B) times the rational tableau row, every entry is a minor of the
// scaled input, and each update divides exactly by the previous pivot. No
// gcds are needed. Returns nullopt on any int64 overflow so the caller can
// rerun the identical pivot sequence in rational arithmetic.
std::optional<Solution> maximize_fraction_free(const Matrix& a, std::span<const Scalar> b,
                                               std::span<const Scalar> c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t width = n + m + 1;
  std::vector<i64> t((m + 1) * width, 0);
  auto at = [&](std::size_t r, std::size_t j) -> i64& { return t[r * width + j]; };

  std::vector<const Scalar*> row;
  for (std::size_t r = 0; r < m; ++r) {
    row.clear();
    for (std::size_t j = 0; j < n; ++j) row.push_back(&a(r, j));
    row.push_back(&b[r]);
    const auto l = row_scale(row);
    if (!l) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = scaled(a(r, j), *l);
      if (!v) return std::nullopt;
      at(r, j) = *v;
    }
    const auto v = scaled(b[r], *l);
    if (!v) return std::nullopt;
    at(r, width - 1) = *v;
    at(r, n + r) = 1;
  }
  row.clear();
  for (std::size_t j = 0; j < n; ++j) row.push_back(&c[j]);
  const auto lc = row_scale(row);
  if (!lc) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = scaled(c[j], *lc);
    if (!v) return std::nullopt;
    at(m, j) = -*v;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = n + r;
  i64 det = 1;

  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (at(m, j) < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) break;
    const std::size_t e = *enter;

    std::optional<std::size_t> leave;
    for (std::size_t r = 0; r < m; ++r) {
      if (at(r, e) <= 0) continue;
      if (!leave) {
        leave = r;
        continue;
      }
      const std::size_t q = *leave;
      // Compare rhs_r / a_re with rhs_q / a_qe; both denominators positive.
      const i128 lhs = i128(at(r, width - 1)) * at(q, e);
      const i128 rhs = i128(at(q, width - 1)) * at(r, e);
      if (lhs < rhs || (lhs == rhs && basis[r] < basis[q])) leave = r;
    }
    if (!leave) return Solution{Status::unbounded, {}, {}};
    const std::size_t p = *leave;

    const i64 piv = at(p, e);
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == p) continue;
      const i64 f = at(r, e);
      for (std::size_t j = 0; j < width; ++j) {
        const i128 num = i128(at(r, j)) * piv - i128(f) * at(p, j);
        if (fits(num)) {
          // 64-bit division is far cheaper than the 128-bit library call.
          at(r, j) = static_cast<i64>(num) / det;
          continue;
        }
        const i128 v = num / det;
        if (!fits(v)) return std::nullopt;
        at(r, j) = static_cast<i64>(v);
      }
    }
    det = piv;
    basis[p] = e;
  }

  const Scalar denom = Scalar(det) * Scalar(*lc);
  Solution sol;
  sol.value = Scalar(at(m, width - 1)) / denom;
  sol.x.assign(n, Scalar());
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) sol.x[basis[r]] = Scalar(at(r, width - 1), det);
  return sol;
}

Solution maximize_rational(const Matrix& a, std::span<const Scalar> b, std::span<const Scalar> c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Columns 0..n-1 structural, n..n+m-1 slack, n+m the right-hand side.
  // Row m holds reduced costs (negated objective) and the objective value.
  const std::size_t width = n + m + 1;
  Matrix t(m + 1, width);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t(r, j) = a(r, j);
    t(r, n + r) = Scalar(1);
    t(r, width - 1) = b[r];
    basis[r] = n + r;
  }
  for (std::size_t j = 0; j < n; ++j) t(m, j) = -c[j];

  std::vector<std::size_t> nz;
  nz.reserve(width);
  for (;;) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t(m, j).sign() < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) break;
    const std::size_t e = *enter;

    std::optional<std::size_t> leave;
    Scalar best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, e).sign() <= 0) continue;
      Scalar ratio = t(r, width - 1) / t(r, e);
      if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (!leave) return Solution{Status::unbounded, {}, {}};
    const std::size_t p = *leave;

    const Scalar piv = t(p, e);
    nz.clear();
    for (std::size_t j = 0; j < width; ++j) {
      if (t(p, j).is_zero()) continue;
      t(p, j) /= piv;
      nz.push_back(j);
    }
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == p || t(r, e).is_zero()) continue;
      const Scalar f = t(r, e);
      for (std::size_t j : nz) t(r, j) -= f * t(p, j);
    }
    basis[p] = e;
  }

  Solution sol;
  sol.value = t(m, width - 1);
  sol.x.assign(n, Scalar());
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) sol.x[basis[r]] = t(r, width - 1);
  return sol;
}

} // namespace

Solution maximize(const Matrix& a, std::span<const Scalar> b, std::span<const Scalar> c) {
  if (b.size() != a.rows() || c.size() != a.cols())
    throw DomainError("simplex: inconsistent problem shape");
  for (const auto& bi : b)
    if (bi.sign() < 0) throw DomainError("simplex: right-hand side must be nonnegative");
  if (auto fast = maximize_fraction_free(a, b, c)) return *std::move(fast);
  return maximize_rational(a, b, c);
}

Solution maximize_exact_rational(const Matrix& a, std::span<const Scalar> b,
                                 std::span<const Scalar> c) {
  if (b.size() != a.rows() || c.size() != a.cols())
    throw DomainError("simplex: inconsistent problem shape");
  for (const auto& bi : b)
    if (bi.sign() < 0) throw DomainError("simplex: right-hand side must be nonnegative");
  return maximize_rational(a, b, c);
}

} // namespace metramsey::lp
