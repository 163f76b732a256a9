#include "metramsey/scalar.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "metramsey/errors.hpp"

namespace metramsey {
namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
__extension__ typedef __int128 i128;

constexpr i64 kMax = std::numeric_limits<i64>::max();

u64 uabs(i64 v) { return v < 0 ? u64(0) - u64(v) : u64(v); }

i64 gcd64(i64 a, i64 b) { return static_cast<i64>(std::gcd(uabs(a), uabs(b))); }

// Both operands must avoid INT64_MIN so that negation stays in range.
bool fits(i128 v) { return v <= kMax && v >= -kMax; }

bool mul_ok(i64 a, i64 b, i64& out) {
  i128 p = i128(a) * b;
  if (!fits(p)) return false;
  out = static_cast<i64>(p);
  return true;
}

} // namespace

Scalar::Scalar(std::int64_t n) noexcept : num_(n) {
  if (n == std::numeric_limits<i64>::min()) {
    big_ = std::make_shared<const mpq_class>(mpz_class(std::to_string(n), 10));
    num_ = 0;
  }
}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (num == std::numeric_limits<i64>::min() || den == std::numeric_limits<i64>::min()) {
    mpq_class q(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
    q.canonicalize();
    *this = from_big(std::move(q));
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = gcd64(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Scalar::Scalar(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  *this = from_big(std::move(c));
}

Scalar Scalar::from_big(mpq_class q) {
  Scalar s;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
    s.num_ = static_cast<i64>(n.get_si());
    s.den_ = static_cast<i64>(d.get_si());
    return s;
  }
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(q.get_num_mpz_t(), num_);
  mpz_set_si(q.get_den_mpz_t(), den_);
  return q;
}

double Scalar::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Scalar::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Scalar Scalar::parse(std::string_view text) {
  std::string t(text);
  auto bad = [&] { return ParseError("not a rational number: \"" + t + "\""); };
  if (t.empty()) throw bad();
  std::string body = t;
  bool neg = false;
  if (body[0] == '-' || body[0] == '+') {
    neg = body[0] == '-';
    body.erase(0, 1);
  }
  if (body.empty()) throw bad();
  auto digits = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  mpq_class q;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!d.empty() && (d[0] == '-' || d[0] == '+')) {
      neg = neg != (d[0] == '-');
      d.erase(0, 1);
    }
    if (!digits(n) || !digits(d)) throw bad();
    mpz_class dz(d, 10);
    if (dz == 0) throw bad();
    q = mpq_class(mpz_class(n, 10), dz);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits(ip) || !digits(fp)) throw bad();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    q = mpq_class(mpz_class(ip + fp, 10), den);
  } else {
    if (!digits(body)) throw bad();
    q = mpq_class(mpz_class(body, 10));
  }
  q.canonicalize();
  if (neg) q = -q;
  return from_big(std::move(q));
}

Scalar Scalar::operator-() const {
  if (big_) return from_big(-*big_);
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = i128(a.num_) + b.num_;
      if (fits(s)) return Scalar(static_cast<i64>(s));
    } else {
      // Knuth's two-gcd addition keeps intermediates small.
      const i64 g = gcd64(a.den_, b.den_);
      i64 x, y, den;
      if (mul_ok(a.num_, b.den_ / g, x) && mul_ok(b.num_, a.den_ / g, y)) {
        i128 t = i128(x) + y;
        if (fits(t)) {
          const i64 tt = static_cast<i64>(t);
          const i64 g2 = tt == 0 ? g : gcd64(tt, g);
          if (mul_ok(a.den_ / g, b.den_ / g2, den)) {
            Scalar r;
            if (tt == 0) return r;
            r.num_ = tt / g2;
            r.den_ = den;
            return r;
          }
        }
      }
    }
  }
  return Scalar::from_big(a.to_mpq() + b.to_mpq());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    const i64 g1 = gcd64(a.num_, b.den_);
    const i64 g2 = gcd64(b.num_, a.den_);
    i64 n, d;
    if (mul_ok(a.num_ / g1, b.num_ / g2, n) && mul_ok(a.den_ / g2, b.den_ / g1, d)) {
      Scalar r;
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  return Scalar::from_big(a.to_mpq() * b.to_mpq());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (!b.big_) {
    Scalar inv;
    inv.num_ = b.num_ < 0 ? -b.den_ : b.den_;
    inv.den_ = b.num_ < 0 ? -b.num_ : b.num_;
    return a * inv;
  }
  return Scalar::from_big(a.to_mpq() / b.to_mpq());
}

bool operator==(const Scalar& a, const Scalar& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  // Canonical forms never mix: a value that fits inline is never stored big.
  return false;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) noexcept {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const i128 l = i128(a.num_) * b.den_;
    const i128 r = i128(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::int64_t floor_int(const Scalar& s) {
  if (s.is_small()) {
    const i64 n = s.small_num(), d = s.small_den();
    i64 q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
  }
  const mpq_class q = s.to_mpq();
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!f.fits_slong_p()) throw DomainError("floor_int: value out of range");
  return f.get_si();
}

} // namespace metramsey
