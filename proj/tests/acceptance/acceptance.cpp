// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "metramsey/embeddings.hpp"
#include "metramsey/geometry.hpp"
#include "metramsey/lipschitz.hpp"
#include "metramsey/pumpkin.hpp"
#include "metramsey/ramsey.hpp"
#include "metramsey/random.hpp"
#include "run.hpp"

using namespace metramsey;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(1);
  o << std::fixed << s << "s";
  return o.str();
}

const Scalar kEps(1, 1000);

Verdict pp_lipschitz() {
  const auto t0 = Clock::now();
  Rng rng(101);
  std::size_t bad = 0;
  Scalar worst = Scalar(-10);
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = 1 + rng.below(3);
    const std::size_t n = 1 + rng.below(8);
    const auto x = testgen::sphere_tuple(rng, d, n, 64);
    // Half independent pairs, half small perturbations.
    const auto y = t % 2 == 0 ? testgen::sphere_tuple(rng, d, n, 64) : testgen::perturb(rng, x, 3, 64);
    const Scalar gap = pumpkin_dist(pp_colour(x), pp_colour(y), kEps) - sup_dist(x, y);
    worst = max(worst, gap);
    if (gap > Scalar(2) * kEps) ++bad;
  }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < 120.0, std::to_string(bad) + " violations in 500 pairs, max excess " +
                                        worst.str() + ", " + fmt_seconds(secs) + " (limit 120s)"};
}

Verdict pum1_collapse() {
  Rng rng(102);
  std::vector<Pumpkin> ps;
  for (int t = 0; t < 100; ++t) ps.push_back(pp_colour(testgen::sphere_tuple(rng, 1, 1 + rng.below(8), 64)));
  Scalar worst;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) worst = max(worst, pumpkin_dist(ps[i], ps[j], kEps));
  return {worst <= Scalar(2) * kEps, "max pairwise distance " + worst.str() + " over 4950 pairs"};
}

Verdict hausdorff_axioms() {
  Rng rng(103);
  std::size_t bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = 1 + rng.below(3);
    const auto a = testgen::polytope(rng, d, 5, 16);
    const auto b = rng.below(8) == 0 ? a : testgen::polytope(rng, d, 5, 16);
    const auto c = testgen::polytope(rng, d, 5, 16);
    const Scalar ab = hausdorff(a, b);
    const bool ok = ab == hausdorff(b, a) && hausdorff(a, a).is_zero() && (ab.is_zero() == (a == b)) &&
                    ab.sign() >= 0 && hausdorff(a, c) <= ab + hausdorff(b, c);
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " violations in 1000 triples"};
}

// All labelled spaces on `n` points with distances in {1/4, 1/2, 3/4, 1}.
void spaces_of_size(std::size_t n, std::vector<FiniteMetricSpace>& out) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::size_t> code(pairs.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  while (true) {
    std::vector<std::vector<Scalar>> dist(n, std::vector<Scalar>(n));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const Scalar v(static_cast<std::int64_t>(code[p]) + 1, 4);
      dist[pairs[p].first][pairs[p].second] = v;
      dist[pairs[p].second][pairs[p].first] = v;
    }
    bool metric = true;
    for (std::size_t i = 0; i < n && metric; ++i)
      for (std::size_t j = 0; j < n && metric; ++j)
        for (std::size_t k = 0; k < n && metric; ++k) metric = dist[i][k] <= dist[i][j] + dist[j][k];
    if (metric) out.emplace_back(labels, dist);
    std::size_t p = pairs.size();
    while (p > 0 && code[p - 1] == 3) code[--p] = 0;
    if (p == 0) break;
    ++code[p - 1];
  }
}

bool isometric_by_permutation(const FiniteMetricSpace& k, const FiniteMetricSpace& l) {
  if (k.size() != l.size()) return false;
  std::vector<std::size_t> perm(k.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k.size() && ok; ++i)
      for (std::size_t j = 0; j < k.size() && ok; ++j) ok = k.d(i, j) == l.d(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Verdict antisymmetry() {
  const auto t0 = Clock::now();
  std::vector<FiniteMetricSpace> spaces;
  for (std::size_t n = 1; n <= 4; ++n) spaces_of_size(n, spaces);
  const std::size_t s = spaces.size();
  std::vector<char> le(s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) le[i * s + j] = leq(spaces[i], spaces[j]).has_value();
  std::size_t bad = 0;
  std::size_t equivalent = 0;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      const bool both = le[i * s + j] && le[j * s + i];
      const bool iso = isometric_by_permutation(spaces[i], spaces[j]);
      equivalent += both ? 1 : 0;
      if (both != iso || iso != isometric(spaces[i], spaces[j])) ++bad;
    }
  const double secs = seconds_since(t0);
  return {bad == 0 && secs < 300.0, std::to_string(s) + " spaces, " + std::to_string(equivalent) +
                                        " equivalent pairs, " + std::to_string(bad) + " disagreements, " +
                                        fmt_seconds(secs) + " (limit 300s)"};
}

Scalar sup_norm(const std::vector<Scalar>& x) {
  Scalar m;
  for (const auto& v : x) m = max(m, abs(v));
  return m;
}

bool isometry_oracle(const ScalarMatrix& t, Rng& rng) {
  const std::size_t m = t[0].size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Scalar> x(m);
    for (std::size_t j = 0; j < m; ++j) x[j] = Scalar((mask >> j) & 1 ? 1 : -1);
    if (image_norm(t, x) != Scalar(1)) return false;
  }
  for (int i = 0; i < 10000; ++i) {
    std::vector<Scalar> x(m);
    for (auto& v : x) v = rng.unit_rational(1009);
    if (image_norm(t, x) != sup_norm(x)) return false;
  }
  return true;
}

Verdict embedding_characterisation() {
  Rng rng(105);
  std::size_t bad = 0;
  std::size_t valid = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng.below(4);
    const std::size_t n = m + rng.below(4);
    ScalarMatrix rows = random_embedding(m, n, rng.next()).rows();
    switch (rng.below(4)) {
      case 0: break;
      case 1: rows[rng.below(n)][rng.below(m)] = Scalar(rng.between(-3, 3), 4); break;
      case 2:
        for (auto& row : rows)
          for (auto& v : row) v = v * Scalar(7, 8);
        break;
      default: rows[rng.below(n)][rng.below(m)] += Scalar(1, 8);
    }
    const bool v = validate_embedding(rows);
    valid += v ? 1 : 0;
    if (v != isometry_oracle(rows, rng)) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " disagreements on 200 matrices (" + std::to_string(valid) + " valid)"};
}

Verdict spread_equivariance() {
  Rng rng(106);
  Scalar worst;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const auto x = testgen::sphere_tuple(rng, 1 + rng.below(3), n, 64);
    const auto s = random_spread_embedding(n, n + 1 + rng.below(6), rng.next());
    worst = max(worst, pumpkin_dist(pp_colour(apply(s, x)), pp_colour(x), kEps));
  }
  return {worst <= Scalar(2) * kEps, "max distance " + worst.str() + " over 100 pairs"};
}

Verdict witness_round_trip() {
  Rng rng(107);
  const Scalar eps(1, 100);
  Scalar worst;
  for (int t = 0; t < 50; ++t) {
    const auto p = pp_colour(testgen::sphere_tuple(rng, 1 + rng.below(3), 1 + rng.below(8), 64));
    worst = max(worst, pumpkin_dist(pp_colour(pumpkin_witness(p, eps)), p, Scalar(5, 1000)));
  }
  return {worst <= eps, "max distance " + worst.str() + " over 50 pumpkins"};
}

Verdict intertwining() {
  Rng rng(108);
  std::vector<SupportedVector> blocks;
  std::size_t next = 0;
  for (int b = 0; b < 10; ++b) {
    next += rng.below(3);
    std::vector<std::pair<std::size_t, Scalar>> e;
    const std::size_t len = 1 + rng.below(3);
    for (std::size_t i = 0; i < len; ++i) {
      Scalar v = rng.unit_rational(8);
      if (i == 0 || v.is_zero()) v = Scalar(1);
      e.emplace_back(next++, v);
    }
    blocks.emplace_back(std::move(e));
  }
  const auto pairs = unbounded_colour_witness(blocks, 4);
  std::string counts;
  bool ok = pairs.size() == 4;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto c = intertwine_count(pairs[k].first, pairs[k].second);
    counts += (k ? "," : "") + std::to_string(c);
    ok = ok && c == k + 1;
  }
  return {ok, "counts " + counts};
}

std::uint64_t stirling2(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> s(m + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= std::min(i, n); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[m][n];
}

Verdict discrete_ground_truth() {
  const auto t0 = Clock::now();
  const auto k6 = min_colours_over_subcopies(triangle_system(6), 2);
  const auto k5 = min_colours_over_subcopies(triangle_system(5), 2);
  const bool hj1 = hj_line_check(2, 2, 1);
  const bool hj2 = hj_line_check(2, 2, 2);
  std::size_t stirling_bad = 0;
  for (std::size_t m = 1; m <= 7; ++m)
    for (std::size_t n = 1; n <= m; ++n)
      if (enumerate_rigid_surjections(m, n).size() != stirling2(m, n)) ++stirling_bad;
  const double secs = seconds_since(t0);
  const bool ok = k6 == 1 && k5 == 2 && !hj1 && hj2 && stirling_bad == 0 && secs < 300.0;
  return {ok, "K6 " + std::to_string(k6) + ", K5 " + std::to_string(k5) + ", hj(2,2,1) " +
                  (hj1 ? "true" : "false") + ", hj(2,2,2) " + (hj2 ? "true" : "false") + ", " +
                  std::to_string(stirling_bad) + " Stirling mismatches, " + fmt_seconds(secs)};
}

Verdict cli_determinism() {
  using testgen::sample;
  const std::vector<std::vector<std::string>> commands{
      {"pp", sample("tuple_cross.json")},
      {"dist", sample("tuple_diagonal.json"), sample("tuple_cross.json")},
      {"dist", sample("pumpkin_pum1.json"), sample("tuple_d1.json")},
      {"order", sample("metric_pair_half.json"), sample("metric_path3.json")},
      {"--seed", "0", "oscillation", sample("oscillation_first_coord.json"), "--count", "50"},
      {"ramsey", sample("k6_triangles.json")},
      {"ramsey", sample("k5_triangles.json")},
      {"hj", "2", "2", "2"},
      {"rigid", "5", "2"},
      {"intertwine", sample("vector_x.json"), sample("vector_y.json")},
      {"intertwine", "--blocks", sample("blocks10.json"), "--pairs", "4"},
      {"--format", "csv", "rigid", "4", "2"},
  };
  std::size_t bad = 0;
  for (const auto& c : commands) {
    const auto a = testgen::run_cli(c);
    const auto b = testgen::run_cli(c);
    if (a.exit_code != 0 || a.exit_code != b.exit_code || a.out != b.out || a.out.empty()) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " of " + std::to_string(commands.size()) +
                        " invocations differ or fail"};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"pumpkin colouring is 1-Lipschitz", pp_lipschitz},
      {"one-dimensional pumpkins collapse", pum1_collapse},
      {"Hausdorff metric axioms", hausdorff_axioms},
      {"quasiorder antisymmetry", antisymmetry},
      {"embedding characterisation", embedding_characterisation},
      {"spread-embedding equivariance", spread_equivariance},
      {"witness round trip", witness_round_trip},
      {"intertwining unboundedness", intertwining},
      {"discrete ground truth", discrete_ground_truth},
      {"CLI determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first << " (" << v.detail
              << ")" << std::endl;
  }
  return failures;
}
