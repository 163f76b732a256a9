#include "metramsey/oscillation.hpp"

#include <string>

#include "metramsey/errors.hpp"
#include "metramsey/json_io.hpp"
#include "metramsey/random.hpp"

namespace metramsey {

namespace {

FiniteMetricSpace net_space(const std::vector<TupleLinf>& net, std::vector<std::string> labels) {
  std::vector<std::vector<Scalar>> dist(net.size(), std::vector<Scalar>(net.size()));
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = i + 1; j < net.size(); ++j)
      dist[i][j] = dist[j][i] = padded_sup_dist(net[i], net[j]);
  return FiniteMetricSpace(std::move(labels), std::move(dist));
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::size_t nearest(const std::vector<TupleLinf>& net, const TupleLinf& y) {
  std::size_t best = 0;
  Scalar best_d = padded_sup_dist(net[0], y);
  for (std::size_t i = 1; i < net.size(); ++i) {
    Scalar d = padded_sup_dist(net[i], y);
    if (d < best_d) {
      best = i;
      best_d = std::move(d);
    }
  }
  return best;
}

NetColouring build(std::vector<TupleLinf> net, std::vector<std::string> labels,
                   FiniteMetricSpace target, std::vector<std::size_t> table) {
  if (net.empty()) throw DomainError("colouring net is empty");
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i].d() != net[0].d() || net[i].n() != net[0].n())
      throw DomainError("net tuple " + std::to_string(i) + " has a different shape");
    if (auto row = net[i].first_row_off_sphere())
      throw DomainError("net tuple " + std::to_string(i) + " row " + std::to_string(*row) +
                        " is not a unit vector of l-infinity");
  }
  FiniteMetricSpace domain = net_space(net, std::move(labels));
  return NetColouring{std::move(net),
                      ColouringTable(std::move(domain), std::move(target), std::move(table))};
}

} // namespace

NetColouring make_net_colouring(std::vector<TupleLinf> net, FiniteMetricSpace target,
                                std::vector<std::size_t> table) {
  auto labels = default_labels(net.size());
  return build(std::move(net), std::move(labels), std::move(target), std::move(table));
}

NetColouring read_net_colouring(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("net") || !j.contains("target") || !j.contains("table"))
    throw ParseError("net colouring: expected an object with \"net\", \"target\" and \"table\"");
  if (!j["net"].is_array()) throw ParseError("net colouring: \"net\" must be an array");
  std::vector<TupleLinf> net;
  for (const auto& t : j["net"]) net.push_back(json::read_tuple(t));
  std::vector<std::size_t> table;
  if (!j["table"].is_array()) throw ParseError("net colouring: \"table\" must be an array");
  for (const auto& v : j["table"]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
      throw ParseError("net colouring: table entries must be nonnegative integers");
    table.push_back(v.get<std::size_t>());
  }
  FiniteMetricSpace target = json::read_metric_space(j["target"]);
  if (j.contains("domain")) {
    FiniteMetricSpace given = json::read_metric_space(j["domain"]);
    NetColouring c = build(std::move(net), given.labels(), std::move(target), std::move(table));
    if (c.colouring.domain() != given)
      throw DomainError("net colouring: declared domain distances differ from the net's sup distances");
    return c;
  }
  return make_net_colouring(std::move(net), std::move(target), std::move(table));
}

nlohmann::json net_colouring_json(const NetColouring& c) {
  nlohmann::json net = nlohmann::json::array();
  for (const auto& t : c.net) net.push_back(json::tuple(t));
  nlohmann::json out = json::colouring(c.colouring);
  out["net"] = std::move(net);
  return out;
}

Scalar colour_diameter(const NetColouring& c, const std::vector<TupleLinf>& points) {
  std::vector<std::size_t> colours;
  for (const auto& y : points) colours.push_back(c.colouring(nearest(c.net, y)));
  Scalar diam;
  const auto& target = c.colouring.target();
  for (std::size_t i = 0; i < colours.size(); ++i)
    for (std::size_t j = i + 1; j < colours.size(); ++j)
      diam = max(diam, target.d(colours[i], colours[j]));
  return diam;
}

OscillationResult oscillation_experiment(const NetColouring& c, std::size_t count, std::uint64_t seed) {
  OscillationResult r;
  r.baseline = colour_diameter(c, c.net);
  r.best = r.baseline;
  const std::size_t m = c.net[0].n();
  for (std::size_t i = 0; i < count; ++i) {
    IsoEmbedding t = random_spread_embedding(m, 2 * m, splitmix64(seed + i));
    std::vector<TupleLinf> moved;
    moved.reserve(c.net.size());
    for (const auto& x : c.net) moved.push_back(apply(t, x));
    Scalar d = colour_diameter(c, moved);
    if (d < r.best) {
      r.best = d;
      r.best_sample = i;
      r.best_embedding = t;
    }
    r.sample_diameters.push_back(std::move(d));
  }
  return r;
}

} // namespace metramsey
