#include <gtest/gtest.h>

#include <limits>

#include "metramsey/errors.hpp"
#include "metramsey/random.hpp"
#include "metramsey/scalar.hpp"

using metramsey::Scalar;

TEST(Scalar, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Scalar::parse("3/6"), Scalar(1, 2));
  EXPECT_EQ(Scalar::parse("-4"), Scalar(-4));
  EXPECT_EQ(Scalar::parse("-0.125"), Scalar(-1, 8));
  EXPECT_EQ(Scalar::parse("2/-4"), Scalar(-1, 2));
  EXPECT_EQ(Scalar::parse("0.025"), Scalar(1, 40));
  EXPECT_EQ(Scalar::parse("010/08"), Scalar(5, 4));
  EXPECT_EQ(Scalar::parse("1/2").str(), "1/2");
  EXPECT_EQ(Scalar(6, 3).str(), "2");
}

TEST(Scalar, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1//2", "0.1.2", "1/2x"})
    EXPECT_THROW((void)Scalar::parse(bad), metramsey::ParseError) << bad;
}

TEST(Scalar, CanonicalAcrossPromotion) {
  const Scalar big = Scalar(std::numeric_limits<std::int64_t>::max()) * Scalar(4);
  EXPECT_FALSE(big.is_small());
  const Scalar back = big / Scalar(4);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Scalar(std::numeric_limits<std::int64_t>::max()));
  EXPECT_EQ(Scalar(std::numeric_limits<std::int64_t>::min()) + Scalar(1),
            Scalar(std::numeric_limits<std::int64_t>::min() + 1));
}

TEST(Scalar, FloorInt) {
  EXPECT_EQ(metramsey::floor_int(Scalar(7, 2)), 3);
  EXPECT_EQ(metramsey::floor_int(Scalar(-7, 2)), -4);
  EXPECT_EQ(metramsey::floor_int(Scalar(-3)), -3);
}

// GMP rationals are the oracle; operands straddle the 64-bit boundary.
TEST(Scalar, AgreesWithGmpOnRandomArithmetic) {
  metramsey::Rng rng(5);
  auto draw = [&] {
    const int shift = static_cast<int>(rng.below(62));
    const std::int64_t num = rng.between(-(std::int64_t{1} << shift), std::int64_t{1} << shift);
    const std::int64_t den = rng.between(1, std::int64_t{1} << rng.below(62));
    return Scalar(num, den);
  };
  for (int i = 0; i < 5000; ++i) {
    const Scalar a = draw();
    const Scalar b = draw();
    const mpq_class qa = a.to_mpq();
    const mpq_class qb = b.to_mpq();
    EXPECT_EQ((a + b).to_mpq(), qa + qb);
    EXPECT_EQ((a - b).to_mpq(), qa - qb);
    EXPECT_EQ((a * b).to_mpq(), qa * qb);
    if (!b.is_zero()) EXPECT_EQ((a / b).to_mpq(), qa / qb);
    EXPECT_EQ(a < b, qa < qb);
    EXPECT_EQ(a == b, qa == qb);
    EXPECT_EQ(Scalar(a.to_mpq()), a);
  }
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW((void)(Scalar(1) / Scalar(0)), metramsey::DomainError);
}
