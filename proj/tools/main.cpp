#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "metramsey/embeddings.hpp"
#include "metramsey/errors.hpp"
#include "metramsey/json_io.hpp"
#include "metramsey/lipschitz.hpp"
#include "metramsey/oscillation.hpp"
#include "metramsey/pumpkin.hpp"
#include "metramsey/ramsey.hpp"
#include "metramsey/random.hpp"
#include "report.hpp"

namespace {

using nlohmann::json;
using namespace metramsey;
namespace mj = metramsey::json;

enum Exit : int { kOk = 0, kSemantic = 1, kParse = 2, kGuard = 3 };

struct Options {
  std::string eps = "1/1000";
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  bool timing = false;
  std::uint64_t max_colourings = kDefaultMaxColourings;
};

// What a subcommand hands back: its echoed arguments, the inputs it read, and
// the result payload.
struct Outcome {
  json args = json::object();
  std::vector<cli::Input> inputs;
  json result;
};

Scalar positive_eps(const Options& o) {
  Scalar eps = Scalar::parse(o.eps);
  if (eps.sign() <= 0) throw DomainError("--eps must be positive");
  return eps;
}

json parse_input(const cli::Input& in) {
  try {
    return mj::parse(in.text);
  } catch (const ParseError& e) {
    throw ParseError(in.name + ": " + e.what());
  }
}

// A pumpkin file, or a tuple file coloured on the fly.
Pumpkin read_pumpkin_or_tuple(const json& j) {
  if (j.is_object() && j.contains("entries")) return pp_colour(mj::read_tuple(j));
  return mj::read_pumpkin(j);
}

json diagnosis_json(const PumpkinDiagnosis& d) {
  return json{{"kind", to_string(d.kind)}, {"reason", d.reason}};
}

Outcome cmd_pp(const Options& o, const std::string& path) {
  Outcome r;
  r.args = {{"tuple", path}, {"eps", o.eps}};
  r.inputs.push_back(cli::read_input(path));
  (void)positive_eps(o);
  const Pumpkin p = pp_colour(mj::read_tuple(parse_input(r.inputs[0])));
  r.result = {{"pumpkin", mj::pumpkin(p)}, {"diagnosis", diagnosis_json(pumpkin_valid(p))}};
  return r;
}

Outcome cmd_dist(const Options& o, const std::string& a, const std::string& b) {
  Outcome r;
  r.args = {{"first", a}, {"second", b}, {"eps", o.eps}};
  r.inputs = {cli::read_input(a), cli::read_input(b)};
  const Scalar eps = positive_eps(o);
  const Pumpkin p = read_pumpkin_or_tuple(parse_input(r.inputs[0]));
  const Pumpkin q = read_pumpkin_or_tuple(parse_input(r.inputs[1]));
  r.result = {{"distance", mj::scalar_with_decimal(pumpkin_dist(p, q, eps))}, {"eps", eps.str()}};
  return r;
}

Outcome cmd_order(const std::string& a, const std::string& b) {
  Outcome r;
  r.args = {{"k", a}, {"l", b}};
  r.inputs = {cli::read_input(a), cli::read_input(b)};
  const FiniteMetricSpace k = mj::read_metric_space(parse_input(r.inputs[0]));
  const FiniteMetricSpace l = mj::read_metric_space(parse_input(r.inputs[1]));
  const auto w = leq(k, l);
  r.result = {{"leq", w.has_value()}, {"isometric", isometric(k, l)}};
  if (w) {
    json named = json::object();
    for (std::size_t i = 0; i < w->size(); ++i) named[l.label(i)] = k.label((*w)[i]);
    r.result["witness"] = *w;
    r.result["witness_labels"] = std::move(named);
  } else {
    r.result["witness"] = "none";
  }
  return r;
}

Outcome cmd_oscillation(const Options& o, const std::string& path, std::size_t count) {
  Outcome r;
  r.args = {{"colouring", path}, {"count", count}, {"seed", o.seed}, {"eps", o.eps}};
  r.inputs.push_back(cli::read_input(path));
  const Scalar eps = positive_eps(o);
  const NetColouring c = read_net_colouring(parse_input(r.inputs[0]));
  const OscillationResult res = oscillation_experiment(c, count, o.seed);
  json diams = json::array();
  for (const auto& d : res.sample_diameters) diams.push_back(d.str());
  r.result = {
      {"baseline_diameter", mj::scalar_with_decimal(res.baseline)},
      {"best_diameter", mj::scalar_with_decimal(res.best)},
      {"within_2eps", res.best <= Scalar(2) * eps},
      {"best_sample", res.best_sample ? json(*res.best_sample) : json(nullptr)},
      {"best_embedding", res.best_embedding ? mj::embedding(*res.best_embedding) : json(nullptr)},
      {"sample_diameters", std::move(diams)},
  };
  return r;
}

Outcome cmd_ramsey(const Options& o, const std::string& path, std::optional<std::size_t> k_override) {
  Outcome r;
  r.args = {{"system", path}, {"max_colourings", o.max_colourings}};
  if (k_override) r.args["k"] = *k_override;
  r.inputs.push_back(cli::read_input(path));
  auto [system, k] = mj::read_copy_system(parse_input(r.inputs[0]));
  if (k_override) k = *k_override;
  r.result = {{"k", k},
              {"objects", system.size()},
              {"subcopies", system.subcopies().size()},
              {"min_colours", min_colours_over_subcopies(system, k, o.max_colourings)}};
  return r;
}

Outcome cmd_hj(const Options& o, std::size_t a, std::size_t k, std::size_t n) {
  Outcome r;
  r.args = {{"alphabet", a}, {"colours", k}, {"length", n}, {"max_colourings", o.max_colourings}};
  r.result = {{"every_colouring_has_monochromatic_line", hj_line_check(a, k, n, o.max_colourings)}};
  return r;
}

Outcome cmd_rigid(std::size_t m, std::size_t n, std::uint64_t max_count) {
  Outcome r;
  r.args = {{"m", m}, {"n", n}, {"max_count", max_count}};
  const auto all = enumerate_rigid_surjections(m, n, max_count);
  json tables = json::array();
  for (const auto& s : all) tables.push_back(s.table());
  r.result = {{"count", all.size()}, {"surjections", std::move(tables)}};
  return r;
}

Outcome cmd_intertwine(const std::vector<std::string>& vectors, const std::string& blocks_path,
                       std::size_t pairs) {
  Outcome r;
  if (!blocks_path.empty()) {
    if (!vectors.empty()) throw ParseError("intertwine: give either two vectors or --blocks");
    r.args = {{"blocks", blocks_path}, {"pairs", pairs}};
    r.inputs.push_back(cli::read_input(blocks_path));
    const json doc = parse_input(r.inputs[0]);
    if (!doc.is_object() || !doc.contains("blocks") || !doc["blocks"].is_array())
      throw ParseError(blocks_path + ": expected {\"blocks\": [...]}");
    std::vector<SupportedVector> blocks;
    for (const auto& b : doc["blocks"]) blocks.push_back(mj::read_supported_vector(b));
    json out = json::array();
    for (const auto& [x, y] : unbounded_colour_witness(blocks, pairs))
      out.push_back({{"x", mj::supported_vector(x)},
                     {"y", mj::supported_vector(y)},
                     {"count", intertwine_count(x, y)}});
    r.result = {{"pairs", std::move(out)}};
    return r;
  }
  if (vectors.size() != 2) throw ParseError("intertwine: expected two vector files");
  r.args = {{"x", vectors[0]}, {"y", vectors[1]}};
  r.inputs = {cli::read_input(vectors[0]), cli::read_input(vectors[1])};
  const SupportedVector x = mj::read_supported_vector(parse_input(r.inputs[0]));
  const SupportedVector y = mj::read_supported_vector(parse_input(r.inputs[1]));
  r.result = {{"count", intertwine_count(x, y)}};
  return r;
}

void emit(const Options& o, const std::string& command, const Outcome& r, double millis) {
  json report = {
      {"command", command},
      {"args", r.args},
      {"inputs_digest", cli::inputs_digest(r.inputs)},
      {"result", r.result},
      {"version", METRAMSEY_VERSION},
      {"rng", Rng::kName},
  };
  if (o.timing) report["wall_time_ms"] = millis;
  const std::string text = o.format == "csv" ? cli::to_csv(report) : report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw DomainError("cannot write " + o.out);
  f << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact pumpkin colourings, Lipschitz quasiorders and Ramsey brute force"};
  app.require_subcommand(1);
  app.set_version_flag("--version", METRAMSEY_VERSION);

  Options o;
  app.add_option("--eps", o.eps, "Tolerance for distances, as p/q or a decimal")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for the random generator")->capture_default_str();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write the report here instead of standard output");
  app.add_option("--max-colourings", o.max_colourings, "Size guard for exhaustive searches")
      ->capture_default_str();
  app.add_flag("--timing", o.timing, "Add wall time to the report");
  app.fallthrough();

  std::function<Outcome()> run;
  std::string command;
  auto on = [&](CLI::App* sub, std::function<Outcome()> fn) {
    sub->callback([&, sub, fn] {
      command = sub->get_name();
      run = fn;
    });
  };

  std::string file_a;
  std::string file_b;

  auto* pp = app.add_subcommand("pp", "Pumpkin colour of a tuple");
  pp->add_option("tuple", file_a, "Tuple JSON file, - for stdin")->required();
  on(pp, [&] { return cmd_pp(o, file_a); });

  auto* dist = app.add_subcommand("dist", "Distance between two pumpkins (or tuples)");
  dist->add_option("first", file_a)->required();
  dist->add_option("second", file_b)->required();
  on(dist, [&] { return cmd_dist(o, file_a, file_b); });

  auto* order = app.add_subcommand("order", "Is K <= L, with the least 1-Lipschitz surjection L -> K");
  order->add_option("k", file_a)->required();
  order->add_option("l", file_b)->required();
  on(order, [&] { return cmd_order(file_a, file_b); });

  std::size_t count = 50;
  auto* osc = app.add_subcommand("oscillation", "Oscillation of a net colouring under spread embeddings");
  osc->add_option("colouring", file_a)->required();
  osc->add_option("--count", count, "Number of sampled embeddings")->capture_default_str();
  on(osc, [&] { return cmd_oscillation(o, file_a, count); });

  std::optional<std::size_t> k_override;
  auto* ramsey = app.add_subcommand("ramsey", "Least number of colours forced on some subcopy");
  ramsey->add_option("system", file_a)->required();
  ramsey->add_option("--k", k_override, "Number of colours (overrides the file)");
  on(ramsey, [&] { return cmd_ramsey(o, file_a, k_override); });

  std::size_t a = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  auto* hj = app.add_subcommand("hj", "Monochromatic combinatorial lines in every colouring");
  hj->add_option("alphabet", a)->required();
  hj->add_option("colours", k)->required();
  hj->add_option("length", n)->required();
  on(hj, [&] { return cmd_hj(o, a, k, n); });

  std::uint64_t max_count = 1'000'000;
  auto* rigid = app.add_subcommand("rigid", "List the rigid surjections [m] -> [n]");
  rigid->add_option("m", a)->required();
  rigid->add_option("n", n)->required();
  rigid->add_option("--max-count", max_count, "Size guard")->capture_default_str();
  on(rigid, [&] { return cmd_rigid(a, n, max_count); });

  std::vector<std::string> vectors;
  std::string blocks;
  std::size_t pairs = 4;
  auto* inter = app.add_subcommand("intertwine", "Intertwining count, or block witnesses");
  inter->add_option("vectors", vectors, "Two supported-vector files");
  inter->add_option("--blocks", blocks, "Block list file; report witness pairs instead");
  inter->add_option("--pairs", pairs, "Number of witness pairs")->capture_default_str();
  on(inter, [&] { return cmd_intertwine(vectors, blocks, pairs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Outcome r = run();
    const auto stop = std::chrono::steady_clock::now();
    emit(o, command, r, std::chrono::duration<double, std::milli>(stop - start).count());
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const GuardExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
}
