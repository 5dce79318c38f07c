#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tokenswap/graph.hpp"

namespace tokenswap {

struct ExactResult {
  long long cost = 0;
  SwapSequence witness;
};

// Exact optimum by search over token configurations: breadth-first without
// weights, least-cost-first with them. Guarded by a vertex-count cap since
// the state space is n!.
ExactResult exact_opt(const SequentialInstance& instance, int vertex_cap = 10);

// Minimum swaps on a path: inversions of the relative permutation along the
// path order.
long long exact_path(const SequentialInstance& instance);

// Minimum swaps on a star, with a greedy witness: while the center token is
// away from home, swap it toward its destination leaf; otherwise pull in the
// lowest-index leaf token that still sits on a nontrivial cycle.
ExactResult exact_star(const SequentialInstance& instance);

enum class VaughanOp { kHappySwap, kHappyDestSwap, kSymmetricShove };

struct VaughanStep {
  VaughanOp op;
  Edge edge;
};

// Default policy: scan for the smallest applicable edge, trying happy swaps,
// then happy destination swaps, then symmetric shoves. A scripted policy
// replays an explicit operation list (each step validated) instead.
struct VaughanScript {
  std::vector<VaughanStep> steps;
};
using VaughanPolicy = std::variant<std::monostate, VaughanScript>;

struct VaughanResult {
  SwapSequence sequence;       // front part ++ back part, ready to execute
  std::vector<VaughanStep> ops;  // in application order
  long long happy_swaps = 0;
  long long happy_dest_swaps = 0;
  long long shoves = 0;
  long long initial_potential = 0;  // D = sum over tokens of d(t, t_f)
};

// Vaughan's two-ended 2-approximation: happy swaps extend the front of the
// output, happy destination swaps and the closing half of each shove prepend
// to the back.
VaughanResult vaughan_solve(const SequentialInstance& instance,
                            const VaughanPolicy& policy = {});

// Happy-swap baseline: happy swaps while they exist, otherwise shove the
// unhappy token that sits closest to the happy token blocking its chain of
// desired moves. 1-straying by construction.
SwapSequence happy_swap_solve(const SequentialInstance& instance);

struct TkbInstance {
  int k = 0;
  int b = 0;
  SequentialInstance instance;

  Vertex center() const { return 0; }
  Vertex branch_vertex(int branch, int depth) const;  // depth 1..k
  Vertex leaf(int index) const;                       // index 0..k-1
  // -1 for the center and the attached leaves, else the branch index.
  int branch_of_vertex(Vertex v) const;
};

// Lower-bound family: b branches of length k plus k extra leaves on a center;
// each branch's tokens target the next branch (mod b) at equal depth.
TkbInstance generate_tkb(int k, int b);

// The (b+1)-exchange rotation through the leaf set; cost is at most
// (b+1) * (k*(k+1)/2 + 2k).
SwapSequence tkb_upper_bound_solution(int k, int b);

}  // namespace tokenswap
