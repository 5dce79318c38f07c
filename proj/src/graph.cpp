#include "tokenswap/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tokenswap {

Edge make_edge(Vertex u, Vertex v) {
  if (u == v) {
    throw std::invalid_argument("edge endpoints must differ: " + std::to_string(u));
  }
  return u < v ? Edge{u, v} : Edge{v, u};
}

Tree::Tree(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 1) {
    throw std::invalid_argument("tree needs at least one vertex");
  }
  if (static_cast<int>(edges.size()) != vertex_count - 1) {
    throw std::invalid_argument("tree on " + std::to_string(vertex_count) +
                                " vertices needs " + std::to_string(vertex_count - 1) +
                                " edges, got " + std::to_string(edges.size()));
  }
  adjacency_.assign(vertex_count, {});
  std::set<Edge> seen;
  for (auto& e : edges) {
    Vertex u = e.first, v = e.second;
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    Edge canon = make_edge(u, v);
    if (!seen.insert(canon).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(canon.first) +
                                  "," + std::to_string(canon.second) + ")");
    }
    edges_.push_back(canon);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  // BFS from every vertex; also checks connectivity.
  dist_.assign(vertex_count, std::vector<int>(vertex_count, -1));
  hop_.assign(vertex_count, std::vector<Vertex>(vertex_count, -1));
  for (Vertex s = 0; s < vertex_count; ++s) {
    auto& dist = dist_[s];
    auto& hop = hop_[s];
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : adjacency_[u]) {
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        hop[v] = (u == s) ? v : hop[u];
        queue.push_back(v);
      }
    }
    if (s == 0) {
      for (Vertex v = 0; v < vertex_count; ++v) {
        if (dist[v] < 0) throw std::invalid_argument("tree is not connected");
      }
    }
  }
}

const std::vector<Vertex>& Tree::neighbors(Vertex v) const {
  if (v < 0 || v >= vertex_count_) throw std::invalid_argument("vertex out of range");
  return adjacency_[v];
}

bool Tree::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_ || u == v) return false;
  return dist_[u][v] == 1;
}

int Tree::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

int Tree::distance(Vertex u, Vertex v) const {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
    throw std::invalid_argument("vertex out of range");
  }
  return dist_[u][v];
}

Vertex Tree::next_on_path(Vertex u, Vertex v) const {
  if (u == v) throw std::invalid_argument("next_on_path requires distinct vertices");
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_) {
    throw std::invalid_argument("vertex out of range");
  }
  return hop_[u][v];
}

std::vector<Vertex> Tree::path(Vertex u, Vertex v) const {
  std::vector<Vertex> result{u};
  while (u != v) {
    u = next_on_path(u, v);
    result.push_back(u);
  }
  return result;
}

int tree_distance(const Tree& tree, Vertex u, Vertex v) {
  return tree.distance(u, v);
}

void check_configuration(const Configuration& config, int vertex_count,
                         const std::string& what) {
  if (static_cast<int>(config.size()) != vertex_count) {
    throw std::invalid_argument(what + ": expected " + std::to_string(vertex_count) +
                                " entries, got " + std::to_string(config.size()));
  }
  std::vector<char> seen(vertex_count, 0);
  for (Token t : config) {
    if (t < 0 || t >= vertex_count || seen[t]) {
      throw std::invalid_argument(what + ": not a bijection on 0.." +
                                  std::to_string(vertex_count - 1));
    }
    seen[t] = 1;
  }
}

void SequentialInstance::validate() const {
  check_configuration(start, tree.vertex_count(), "start configuration");
  check_configuration(target, tree.vertex_count(), "target configuration");
  if (weights) {
    if (static_cast<int>(weights->size()) != tree.vertex_count()) {
      throw std::invalid_argument("weights: one weight per token required");
    }
    for (int w : *weights) {
      if (w < 0) throw std::invalid_argument("weights must be nonnegative");
    }
  }
  if (budget && *budget < 0) throw std::invalid_argument("budget must be nonnegative");
}

void ParallelInstance::validate() const {
  check_configuration(start, tree.vertex_count(), "start configuration");
  check_configuration(target, tree.vertex_count(), "target configuration");
  if (budget && *budget < 0) throw std::invalid_argument("budget must be nonnegative");
}

ApplyResult apply_swap_sequence(const SequentialInstance& instance,
                                const SwapSequence& seq) {
  ApplyResult result{instance.start, 0};
  const auto& weights = instance.weights;
  for (size_t i = 0; i < seq.swaps.size(); ++i) {
    auto [u, v] = seq.swaps[i];
    if (!instance.tree.has_edge(u, v)) {
      throw std::invalid_argument("swap " + std::to_string(i) + " uses edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") which is not in the tree");
    }
    Token a = result.config[u], b = result.config[v];
    result.total_cost += weights ? (*weights)[a] + (*weights)[b] : 1;
    std::swap(result.config[u], result.config[v]);
  }
  return result;
}

Configuration apply_round_schedule(const Tree& tree, const Configuration& start,
                                   const RoundSchedule& sched) {
  check_configuration(start, tree.vertex_count(), "start configuration");
  Configuration config = start;
  for (size_t r = 0; r < sched.rounds.size(); ++r) {
    std::vector<char> used(tree.vertex_count(), 0);
    for (auto [u, v] : sched.rounds[r]) {
      if (!tree.has_edge(u, v)) {
        throw std::invalid_argument("round " + std::to_string(r) + " uses edge (" +
                                    std::to_string(u) + "," + std::to_string(v) +
                                    ") which is not in the tree");
      }
      if (used[u] || used[v]) {
        throw std::invalid_argument("round " + std::to_string(r) +
                                    " is not a matching: vertex " +
                                    std::to_string(used[u] ? u : v) + " repeated");
      }
      used[u] = used[v] = 1;
    }
    // Disjoint edges commute, so in-order application matches the round.
    for (auto [u, v] : sched.rounds[r]) std::swap(config[u], config[v]);
  }
  return config;
}

SolutionCheck is_solution(const SequentialInstance& instance,
                          const SwapSequence& witness) {
  instance.validate();
  ApplyResult applied = apply_swap_sequence(instance, witness);
  SolutionCheck check;
  check.cost = applied.total_cost;
  if (applied.config != instance.target) {
    check.verdict = Verdict::kWrongFinal;
    check.reason = "wrong_final";
  } else if (instance.budget && applied.total_cost > *instance.budget) {
    check.verdict = Verdict::kOverBudget;
    check.reason = "over_budget";
  }
  return check;
}

SolutionCheck is_solution(const ParallelInstance& instance,
                          const RoundSchedule& witness) {
  instance.validate();
  Configuration final = apply_round_schedule(instance.tree, instance.start, witness);
  SolutionCheck check;
  check.cost = static_cast<long long>(witness.rounds.size());
  if (final != instance.target) {
    check.verdict = Verdict::kWrongFinal;
    check.reason = "wrong_final";
  } else if (instance.budget && check.cost > *instance.budget) {
    check.verdict = Verdict::kOverBudget;
    check.reason = "over_budget";
  }
  return check;
}

namespace {

// Token pair (unordered) keyed by canonical order.
using TokenPair = std::pair<Token, Token>;

TokenPair make_pair_key(Token a, Token b) {
  return a < b ? TokenPair{a, b} : TokenPair{b, a};
}

}  // namespace

SwapSequence normalize_sequence(const SequentialInstance& instance,
                                const SwapSequence& seq) {
  Configuration expected = apply_swap_sequence(instance, seq).config;
  if (expected != instance.target) {
    throw std::invalid_argument("normalize_sequence: sequence does not reach the target");
  }

  std::vector<Edge> swaps = seq.swaps;
  for (;;) {
    // Replay, recording each unordered token pair's swap positions.
    Configuration config = instance.start;
    std::map<TokenPair, std::vector<size_t>> occurrences;
    for (size_t i = 0; i < swaps.size(); ++i) {
      auto [u, v] = swaps[i];
      occurrences[make_pair_key(config[u], config[v])].push_back(i);
      std::swap(config[u], config[v]);
    }
    // Earliest position whose pair swaps again later; drop that pair's
    // last two swaps. Token names exchange implicitly in between.
    const std::vector<size_t>* worst = nullptr;
    for (auto& [pair, positions] : occurrences) {
      if (positions.size() < 2) continue;
      if (!worst || positions.front() < worst->front()) worst = &positions;
    }
    if (!worst) break;
    size_t last = (*worst)[worst->size() - 1];
    size_t second_last = (*worst)[worst->size() - 2];
    std::vector<Edge> next;
    next.reserve(swaps.size() - 2);
    for (size_t i = 0; i < swaps.size(); ++i) {
      if (i != last && i != second_last) next.push_back(swaps[i]);
    }
    swaps = std::move(next);
  }

  SwapSequence result{swaps};
  if (apply_swap_sequence(instance, result).config != expected) {
    throw std::logic_error("normalize_sequence changed the final configuration");
  }
  return result;
}

}  // namespace tokenswap
