#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tokenswap {

using Vertex = int;
using Token = int;

// Unordered vertex pair with first <= second.
using Edge = std::pair<Vertex, Vertex>;

Edge make_edge(Vertex u, Vertex v);

// Thrown when an input exceeds a configured enumeration/search cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An undirected tree on vertices 0..n-1. Construction validates that the
// edge set forms a tree (n-1 edges, connected, no duplicates or loops).
class Tree {
 public:
  Tree() : Tree(1, {}) {}
  Tree(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;

  int distance(Vertex u, Vertex v) const;
  // First vertex after u on the unique u->v path. Requires u != v.
  Vertex next_on_path(Vertex u, Vertex v) const;
  // Vertices of the unique u->v path, inclusive of both endpoints.
  std::vector<Vertex> path(Vertex u, Vertex v) const;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  // dist_[u][v] and hop_[u][v] (first step from u toward v), built eagerly;
  // trees in this workbench stay small (a few hundred vertices).
  std::vector<std::vector<int>> dist_;
  std::vector<std::vector<Vertex>> hop_;
};

int tree_distance(const Tree& tree, Vertex u, Vertex v);

// vertex -> token label; always a bijection on 0..n-1.
using Configuration = std::vector<Token>;

void check_configuration(const Configuration& config, int vertex_count,
                         const std::string& what);

// Ordered list of edge swaps.
struct SwapSequence {
  std::vector<Edge> swaps;
};

// Ordered list of rounds; each round is a matching.
struct RoundSchedule {
  std::vector<std::vector<Edge>> rounds;
};

struct SequentialInstance {
  Tree tree;
  Configuration start;
  Configuration target;
  // One weight per token when present; swap cost is then the sum of the two
  // swapped tokens' weights instead of the swap count.
  std::optional<std::vector<int>> weights;
  std::optional<long long> budget;

  void validate() const;
};

struct ParallelInstance {
  Tree tree;
  Configuration start;
  Configuration target;
  std::optional<long long> budget;  // round budget

  void validate() const;
};

struct ApplyResult {
  Configuration config;
  long long total_cost = 0;
};

// Applies swaps in order; cost is the swap count without weights, otherwise
// the sum over swaps of the two moved tokens' weights.
ApplyResult apply_swap_sequence(const SequentialInstance& instance,
                                const SwapSequence& seq);

Configuration apply_round_schedule(const Tree& tree, const Configuration& start,
                                   const RoundSchedule& sched);

enum class Verdict {
  kYes,
  kWrongFinal,
  kOverBudget,
};

struct SolutionCheck {
  Verdict verdict = Verdict::kYes;
  long long cost = 0;  // weighted/unweighted cost, or round count
  std::string reason;

  bool yes() const { return verdict == Verdict::kYes; }
};

SolutionCheck is_solution(const SequentialInstance& instance,
                          const SwapSequence& witness);
SolutionCheck is_solution(const ParallelInstance& instance,
                          const RoundSchedule& witness);

// Removes repeated swaps of the same unordered token pair: drops the last two
// swaps of an offending pair (the intermediate edge list is untouched) and
// repeats until no pair swaps twice. Preserves the final configuration.
SwapSequence normalize_sequence(const SequentialInstance& instance,
                                const SwapSequence& seq);

// Swaps touch two tokens each, so a sequence of s swaps makes 2s moves.
inline long long move_count(const SwapSequence& seq) {
  return 2LL * static_cast<long long>(seq.swaps.size());
}

}  // namespace tokenswap
