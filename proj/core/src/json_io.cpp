#include "metramsey/json_io.hpp"

#include <string>

#include "metramsey/errors.hpp"

namespace metramsey::json {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t read_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(where, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> read_indices(const json& j, const std::string& where) {
  std::vector<std::size_t> out;
  for (const auto& v : array(j, where)) out.push_back(read_index(v, where));
  return out;
}

std::vector<Scalar> read_row(const json& j, const std::string& where) {
  std::vector<Scalar> out;
  for (const auto& v : array(j, where)) out.push_back(read_scalar(v));
  return out;
}

std::vector<Point> read_points(const json& j, const std::string& where) {
  std::vector<Point> out;
  for (const auto& v : array(j, where)) out.push_back(read_point(v));
  if (out.empty()) fail(where, "expected at least one point");
  return out;
}

std::string label_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

} // namespace

json scalar(const Scalar& s) { return s.str(); }

json scalar_with_decimal(const Scalar& s) { return json{{"exact", s.str()}, {"decimal", s.to_double()}}; }

Scalar read_scalar(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  fail("scalar", "expected a \"p/q\" string or an integer");
}

json point(const Point& p) {
  json out = json::array();
  for (const auto& c : p.coords()) out.push_back(scalar(c));
  return out;
}

Point read_point(const json& j) { return Point(read_row(j, "point")); }

json polytope(const SymPolytope& p) {
  json out = json::array();
  for (const auto& g : p.generators()) out.push_back(point(g));
  return out;
}

SymPolytope read_polytope(const json& j) {
  const auto pts = read_points(j, "polytope");
  return sc_hull(pts);
}

json pumpkin(const Pumpkin& p) {
  json stages = json::array();
  for (const auto& s : p.stages)
    stages.push_back(json{{"base", polytope(s.base)}, {"direction", point(s.direction)}});
  return json{{"dim", p.dim}, {"stages", std::move(stages)}, {"final", polytope(p.final_body)}};
}

Pumpkin read_pumpkin(const json& j) {
  Pumpkin p;
  p.dim = read_index(field(j, "dim", "pumpkin"), "pumpkin.dim");
  for (const auto& s : array(field(j, "stages", "pumpkin"), "pumpkin.stages")) {
    p.stages.push_back(Stage{read_polytope(field(s, "base", "pumpkin stage")),
                             read_point(field(s, "direction", "pumpkin stage"))});
  }
  p.final_body = read_polytope(field(j, "final", "pumpkin"));
  return p;
}

json tuple(const TupleLinf& x) {
  json rows = json::array();
  for (const auto& r : x.rows()) {
    json row = json::array();
    for (const auto& v : r) row.push_back(scalar(v));
    rows.push_back(std::move(row));
  }
  return json{{"d", x.d()}, {"n", x.n()}, {"entries", std::move(rows)}};
}

TupleLinf read_tuple(const json& j) {
  const std::size_t d = read_index(field(j, "d", "tuple"), "tuple.d");
  const std::size_t n = read_index(field(j, "n", "tuple"), "tuple.n");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : array(field(j, "entries", "tuple"), "tuple.entries"))
    rows.push_back(read_row(r, "tuple row"));
  if (rows.size() != d) fail("tuple", "entries has " + std::to_string(rows.size()) + " rows, d = " + std::to_string(d));
  for (const auto& r : rows)
    if (r.size() != n) fail("tuple", "a row has " + std::to_string(r.size()) + " entries, n = " + std::to_string(n));
  return TupleLinf(std::move(rows));
}

json metric_space(const FiniteMetricSpace& k) {
  json dist = json::array();
  for (const auto& r : k.matrix()) {
    json row = json::array();
    for (const auto& v : r) row.push_back(scalar(v));
    dist.push_back(std::move(row));
  }
  return json{{"labels", k.labels()}, {"dist", std::move(dist)}};
}

FiniteMetricSpace read_metric_space(const json& j) {
  std::vector<std::string> labels;
  for (const auto& l : array(field(j, "labels", "metric space"), "metric space.labels"))
    labels.push_back(label_text(l));
  std::vector<std::vector<Scalar>> dist;
  for (const auto& r : array(field(j, "dist", "metric space"), "metric space.dist"))
    dist.push_back(read_row(r, "metric space row"));
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

json colouring(const ColouringTable& c) {
  return json{{"domain", metric_space(c.domain())},
              {"target", metric_space(c.target())},
              {"table", c.table()}};
}

ColouringTable read_colouring(const json& j) {
  return ColouringTable(read_metric_space(field(j, "domain", "colouring")),
                        read_metric_space(field(j, "target", "colouring")),
                        read_indices(field(j, "table", "colouring"), "colouring.table"));
}

json matrix(const ScalarMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& v : r) row.push_back(scalar(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

json embedding(const IsoEmbedding& t) {
  return json{{"m", t.m()}, {"n", t.n()}, {"rows", matrix(t.rows())}};
}

ScalarMatrix read_matrix(const json& j) {
  ScalarMatrix out;
  for (const auto& r : array(j, "matrix")) out.push_back(read_row(r, "matrix row"));
  return out;
}

IsoEmbedding read_embedding(const json& j) {
  const std::size_t m = read_index(field(j, "m", "embedding"), "embedding.m");
  const std::size_t n = read_index(field(j, "n", "embedding"), "embedding.n");
  ScalarMatrix rows = read_matrix(field(j, "rows", "embedding"));
  if (rows.size() != n) fail("embedding", "rows has " + std::to_string(rows.size()) + " rows, n = " + std::to_string(n));
  for (const auto& r : rows)
    if (r.size() != m) fail("embedding", "a row has " + std::to_string(r.size()) + " entries, m = " + std::to_string(m));
  return IsoEmbedding(std::move(rows));
}

json supported_vector(const SupportedVector& v) {
  json support = json::array();
  for (const auto& [i, x] : v.entries()) support.push_back(json::array({i, scalar(x)}));
  return json{{"support", std::move(support)}};
}

SupportedVector read_supported_vector(const json& j) {
  std::vector<std::pair<std::size_t, Scalar>> entries;
  for (const auto& e : array(field(j, "support", "vector"), "vector.support")) {
    if (!e.is_array() || e.size() != 2) fail("vector.support", "expected [index, value] pairs");
    entries.emplace_back(read_index(e[0], "vector.support"), read_scalar(e[1]));
  }
  return SupportedVector(std::move(entries));
}

json copy_system(const CopySystem& s, std::size_t k) {
  return json{{"objects", s.objects()}, {"subcopies", s.subcopies()}, {"k", k}};
}

std::pair<CopySystem, std::size_t> read_copy_system(const json& j) {
  std::vector<std::string> objects;
  for (const auto& o : array(field(j, "objects", "copy system"), "copy system.objects"))
    objects.push_back(label_text(o));
  std::vector<std::vector<std::size_t>> subs;
  for (const auto& s : array(field(j, "subcopies", "copy system"), "copy system.subcopies"))
    subs.push_back(read_indices(s, "copy system subcopy"));
  const std::size_t k = read_index(field(j, "k", "copy system"), "copy system.k");
  return {CopySystem(std::move(objects), std::move(subs)), k};
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

} // namespace metramsey::json
