#include <gtest/gtest.h>

#include "generators.hpp"
#include "metramsey/errors.hpp"
#include "metramsey/oscillation.hpp"

using namespace metramsey;

namespace {

std::vector<TupleLinf> net(Rng& rng, std::size_t count, std::size_t d, std::size_t n) {
  std::vector<TupleLinf> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(testgen::sphere_tuple(rng, d, n, 4));
  return out;
}

FiniteMetricSpace point() { return FiniteMetricSpace({"*"}, {{Scalar(0)}}); }

} // namespace

TEST(Oscillation, ConstantColouringHasZeroDiameter) {
  Rng rng(1);
  const auto c = make_net_colouring(net(rng, 6, 1, 3), point(), std::vector<std::size_t>(6, 0));
  const auto r = oscillation_experiment(c, 10, 0);
  EXPECT_EQ(r.baseline, Scalar(0));
  EXPECT_EQ(r.best, Scalar(0));
  EXPECT_FALSE(r.best_sample.has_value());
}

TEST(Oscillation, CountZeroReportsTheNet) {
  Rng rng(2);
  auto pts = net(rng, 5, 2, 3);
  // Target is the net itself, so the identity table is 1-Lipschitz.
  FiniteMetricSpace target = make_net_colouring(pts, point(), std::vector<std::size_t>(5, 0)).colouring.domain();
  const auto c = make_net_colouring(pts, target, {0, 1, 2, 3, 4});
  const auto r = oscillation_experiment(c, 0, 7);
  EXPECT_EQ(r.best, r.baseline);
  EXPECT_EQ(r.baseline, target.diameter());
  EXPECT_TRUE(r.sample_diameters.empty());
}

TEST(Oscillation, MonotoneInCountAndDeterministic) {
  Rng rng(3);
  auto pts = net(rng, 8, 1, 3);
  FiniteMetricSpace target = make_net_colouring(pts, point(), std::vector<std::size_t>(8, 0)).colouring.domain();
  std::vector<std::size_t> id(8);
  for (std::size_t i = 0; i < 8; ++i) id[i] = i;
  const auto c = make_net_colouring(pts, target, id);
  Scalar last = oscillation_experiment(c, 0, 5).best;
  for (std::size_t count : {1u, 5u, 20u}) {
    const auto r = oscillation_experiment(c, count, 5);
    EXPECT_LE(r.best, last);
    last = r.best;
    const auto again = oscillation_experiment(c, count, 5);
    EXPECT_EQ(again.sample_diameters, r.sample_diameters);
  }
}

TEST(Oscillation, PumpkinFactoredColouringOnOneDimensionalNet) {
  // All d=1 pumpkins coincide, so any f∘PP_1 is constant on the net.
  Rng rng(4);
  const auto c = make_net_colouring(net(rng, 10, 1, 4), point(), std::vector<std::size_t>(10, 0));
  EXPECT_LE(oscillation_experiment(c, 5, 0).best, Scalar(2, 1000));
}

TEST(Oscillation, RejectsMixedShapesAndNonLipschitz) {
  Rng rng(5);
  std::vector<TupleLinf> mixed{testgen::sphere_tuple(rng, 1, 2, 4), testgen::sphere_tuple(rng, 1, 3, 4)};
  EXPECT_THROW((void)make_net_colouring(mixed, point(), {0, 0}), DomainError);
  const TupleLinf a({{Scalar(1), Scalar(0)}});
  const TupleLinf b({{Scalar(1), Scalar(1, 4)}});
  const FiniteMetricSpace far({"u", "v"}, {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}});
  EXPECT_THROW((void)make_net_colouring({a, b}, far, {0, 1}), DomainError);
}
