#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "metramsey/embeddings.hpp"
#include "metramsey/lipschitz.hpp"
#include "metramsey/pumpkin.hpp"

namespace metramsey {

/// A colouring of a finite net of sphere tuples. The domain metric is the
/// padded sup distance between the net tuples.
struct NetColouring {
  std::vector<TupleLinf> net;
  ColouringTable colouring;
};

/// Builds the colouring over `net`, deriving the domain metric from the
/// tuples. Throws DomainError on an empty net, tuples of different shape, a
/// tuple off the sphere, or a table that is not 1-Lipschitz.
[[nodiscard]] NetColouring make_net_colouring(std::vector<TupleLinf> net, FiniteMetricSpace target,
                                              std::vector<std::size_t> table);

/// {"net": [tuple...], "target": metric space, "table": [...]}, with an
/// optional "domain" that must equal the derived one.
[[nodiscard]] NetColouring read_net_colouring(const nlohmann::json& j);
[[nodiscard]] nlohmann::json net_colouring_json(const NetColouring& c);

struct OscillationResult {
  Scalar baseline;                          // diameter of the colouring on the net itself
  Scalar best;                              // min over baseline and all samples
  std::optional<std::size_t> best_sample;   // nullopt when no sample beat the baseline
  std::optional<IsoEmbedding> best_embedding;
  std::vector<Scalar> sample_diameters;
};

/// Samples `count` spread embeddings of the net's length n into length 2n,
/// sample i drawn with seed splitmix64(seed + i). Each transported tuple is
/// coloured by its nearest net tuple (padded sup distance, lowest index on
/// ties), and the diameter of the resulting colour set is recorded. The
/// reported minimum is nonincreasing in `count`.
[[nodiscard]] OscillationResult oscillation_experiment(const NetColouring& c, std::size_t count,
                                                       std::uint64_t seed);

/// Diameter of the target points hit by the colours of `points`.
[[nodiscard]] Scalar colour_diameter(const NetColouring& c, const std::vector<TupleLinf>& points);

} // namespace metramsey
