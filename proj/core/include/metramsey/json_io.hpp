#pragma once

#include <nlohmann/json.hpp>

#include "metramsey/embeddings.hpp"
#include "metramsey/geometry.hpp"
#include "metramsey/lipschitz.hpp"
#include "metramsey/pumpkin.hpp"
#include "metramsey/ramsey.hpp"
#include "metramsey/scalar.hpp"

// Readers throw ParseError when the document has the wrong shape or types,
// and let DomainError from the value constructors through unchanged.
// Rationals are written as "p/q" strings; integers and decimal strings are
// accepted on input.
namespace metramsey::json {

using nlohmann::json;

[[nodiscard]] json scalar(const Scalar& s);
/// {"exact": "p/q", "decimal": <double>}
[[nodiscard]] json scalar_with_decimal(const Scalar& s);
[[nodiscard]] Scalar read_scalar(const json& j);

[[nodiscard]] json point(const Point& p);
[[nodiscard]] Point read_point(const json& j);

/// A list of generators.
[[nodiscard]] json polytope(const SymPolytope& p);
[[nodiscard]] SymPolytope read_polytope(const json& j);

[[nodiscard]] json pumpkin(const Pumpkin& p);
/// Generator lists are rehulled into canonical form; structure is not
/// validated here (see pumpkin_valid).
[[nodiscard]] Pumpkin read_pumpkin(const json& j);

[[nodiscard]] json tuple(const TupleLinf& x);
[[nodiscard]] TupleLinf read_tuple(const json& j);

[[nodiscard]] json metric_space(const FiniteMetricSpace& k);
[[nodiscard]] FiniteMetricSpace read_metric_space(const json& j);

[[nodiscard]] json colouring(const ColouringTable& c);
[[nodiscard]] ColouringTable read_colouring(const json& j);

[[nodiscard]] json embedding(const IsoEmbedding& t);
[[nodiscard]] json matrix(const ScalarMatrix& m);
[[nodiscard]] ScalarMatrix read_matrix(const json& j);
[[nodiscard]] IsoEmbedding read_embedding(const json& j);

[[nodiscard]] json supported_vector(const SupportedVector& v);
[[nodiscard]] SupportedVector read_supported_vector(const json& j);

/// {"objects": [...], "subcopies": [[...]...], "k": k}
[[nodiscard]] json copy_system(const CopySystem& s, std::size_t k);
[[nodiscard]] std::pair<CopySystem, std::size_t> read_copy_system(const json& j);

/// Parses text, mapping syntax errors to ParseError.
[[nodiscard]] json parse(std::string_view text);

} // namespace metramsey::json
