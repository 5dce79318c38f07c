#include "tokenswap/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace tokenswap {

namespace {

using nlohmann::json;

Tree tree_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("edge must be a pair [u,v]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Tree(n, std::move(edges));
}

json tree_to_json(const Tree& tree) {
  json edges = json::array();
  for (auto [u, v] : tree.edges()) edges.push_back({u, v});
  return json{{"n", tree.vertex_count()}, {"edges", edges}};
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, true, /*ignore_comments=*/false);
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  return j;
}

}  // namespace

SequentialInstance parse_sequential_json(const std::string& text) {
  json j = parse_text(text);
  if (j.value("mode", "sequential") != "sequential") {
    throw std::invalid_argument("instance mode is not sequential");
  }
  SequentialInstance instance{tree_from_json(j.at("tree")),
                              j.at("start").get<Configuration>(),
                              j.at("target").get<Configuration>(),
                              std::nullopt,
                              std::nullopt};
  if (j.contains("weights") && !j["weights"].is_null()) {
    instance.weights = j["weights"].get<std::vector<int>>();
  }
  if (j.contains("budget") && !j["budget"].is_null()) {
    instance.budget = j["budget"].get<long long>();
  }
  instance.validate();
  return instance;
}

ParallelInstance parse_parallel_json(const std::string& text) {
  json j = parse_text(text);
  if (j.value("mode", "") != "parallel") {
    throw std::invalid_argument("instance mode is not parallel");
  }
  ParallelInstance instance{tree_from_json(j.at("tree")),
                            j.at("start").get<Configuration>(),
                            j.at("target").get<Configuration>(),
                            std::nullopt};
  if (j.contains("budget") && !j["budget"].is_null()) {
    instance.budget = j["budget"].get<long long>();
  }
  instance.validate();
  return instance;
}

AnyInstance parse_instance_json(const std::string& text) {
  json j = parse_text(text);
  std::string mode = j.value("mode", "sequential");
  if (mode == "parallel") return parse_parallel_json(text);
  if (mode == "sequential") return parse_sequential_json(text);
  throw std::invalid_argument("unknown mode: " + mode);
}

std::string to_json(const SequentialInstance& instance) {
  json j{{"tree", tree_to_json(instance.tree)},
         {"start", instance.start},
         {"target", instance.target},
         {"mode", "sequential"}};
  if (instance.weights) j["weights"] = *instance.weights;
  if (instance.budget) j["budget"] = *instance.budget;
  return j.dump(2);
}

std::string to_json(const ParallelInstance& instance) {
  json j{{"tree", tree_to_json(instance.tree)},
         {"start", instance.start},
         {"target", instance.target},
         {"mode", "parallel"}};
  if (instance.budget) j["budget"] = *instance.budget;
  return j.dump(2);
}

AnyWitness parse_witness_json(const std::string& text) {
  json j = parse_text(text);
  if (j.contains("swaps")) {
    SwapSequence seq;
    for (const auto& e : j["swaps"]) seq.swaps.emplace_back(e[0].get<int>(), e[1].get<int>());
    return seq;
  }
  if (j.contains("rounds")) {
    RoundSchedule sched;
    for (const auto& round : j["rounds"]) {
      std::vector<Edge> edges;
      for (const auto& e : round) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      sched.rounds.push_back(std::move(edges));
    }
    return sched;
  }
  throw std::invalid_argument("witness needs a \"swaps\" or \"rounds\" field");
}

std::string to_json(const SwapSequence& seq) {
  json swaps = json::array();
  for (auto [u, v] : seq.swaps) swaps.push_back({u, v});
  return json{{"swaps", swaps}}.dump(2);
}

std::string to_json(const RoundSchedule& sched) {
  json rounds = json::array();
  for (const auto& round : sched.rounds) {
    json r = json::array();
    for (auto [u, v] : round) r.push_back({u, v});
    rounds.push_back(r);
  }
  return json{{"rounds", rounds}}.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace tokenswap
