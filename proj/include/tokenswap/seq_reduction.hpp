#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokenswap/graph.hpp"
#include "tokenswap/star_sts.hpp"

namespace tokenswap {

// Both sequential reductions share one layout: a root, an ordering gadget
// (path to the "left" of the root) and one slot gadget per slot (paths to the
// "right"), each slot gadget carrying a nook leaf at distance k from the
// root. Non-item tokens travel in segments: big segments of length k replace
// the x_j / y_j tokens, padding segments of length k_prime the p_{i,j} /
// q_{i,j} tokens. The weighted construction is the k = 1 member of the family
// with no padding segments and slot paths of length n_i.

enum class SegmentFamily { kBigX, kBigY, kPadP, kPadQ };

struct Segment {
  SegmentFamily family;
  int j = 0;     // round index 1..n
  int slot = 0;  // slot gadget the segment starts in (y/q) or ends in (x/p)
  int length = 0;
};

enum class VertexRole { kRoot, kOrdering, kSlotPath, kNook };

struct VertexInfo {
  VertexRole role = VertexRole::kRoot;
  int slot = 0;  // slot gadget index for kSlotPath / kNook
  int pos = 0;   // distance from the root along the gadget path
};

enum class TokenClass { kItem, kSlotToken, kNonSlotToken };

struct TokenRole {
  TokenClass token_class = TokenClass::kItem;
  int item_label = -1;    // for items
  int segment_id = -1;    // for segment tokens
  int offset = -1;        // left-to-right offset inside the segment
};

struct GadgetParams {
  int m = 0;
  int n = 0;
  int k = 1;
  int k_prime = 0;  // 0 when there are no padding segments (weighted case)
  long long H = 0;
  long long K = 0;
  bool weighted = false;
};

struct GadgetInstance {
  SequentialInstance instance;
  StarSTSInstance sts;
  GadgetParams params;

  std::vector<VertexInfo> vertex_roles;        // by vertex id
  std::vector<TokenRole> token_roles;          // by token id
  std::vector<Segment> segments;               // by segment id
  std::vector<int> slot_path_length;           // [1..m], index 0 unused
  // Left-to-right segment lists; for the ordering gadget left is the far end,
  // for a slot gadget left is the root end.
  std::vector<int> initial_ordering;
  std::vector<int> final_ordering;
  std::vector<std::vector<int>> initial_slot;  // [1..m]
  std::vector<std::vector<int>> final_slot;

  Vertex root() const { return 0; }
  int ordering_length() const;
  Vertex ordering_vertex(int pos) const;       // pos = 1..ordering_length()
  Vertex slot_vertex(int slot, int pos) const;  // pos = 1..slot_path_length[slot]
  Vertex nook(int slot) const;
  Vertex nook_parent(int slot) const { return slot_vertex(slot, params.k); }

  // -1 for the root, 0 for the ordering gadget, i>=1 for slot gadget i
  // (nook included).
  int gadget_of_vertex(Vertex v) const;
  // Signed coordinate on the left-right axis of the construction; moves that
  // increase it are "right" moves. Nooks sit just right of their parent.
  int axis_coordinate(Vertex v) const;

  Vertex token_start(Token t) const { return t; }
  Vertex token_target(Token t) const;
};

// Slot paths of length n_i (occurrences of slot i), items weight 0 at the
// root and nooks, weight-1 x/y tokens, budget K = sum of the non-item
// shortest-path distances.
GadgetInstance build_weighted_instance(const StarSTSInstance& sts);

// Segmented construction: big segments of length k, padding segments of
// length k_prime, H = (1/2) * sum over non-item tokens of (d_t + 1) and
// budget K = H + n.
GadgetInstance build_unweighted_instance(const StarSTSInstance& sts, int k,
                                         int k_prime);

// Witness generators. The scaffold re-homes every non-item token along its
// shortest path, leaves the items fixed, and costs exactly H (for the
// weighted instance it costs the full budget K since item swaps are free).
SwapSequence scaffold_solution(const GadgetInstance& g);
// Scaffold plus one nook swap per chosen step of the Star STS solution.
SwapSequence intended_solution(const GadgetInstance& g,
                               const StarSTSSolution& sol);

// Convenience wrappers matching the two constructions.
SwapSequence intended_weighted_solution(const StarSTSInstance& sts,
                                        const StarSTSSolution& sol,
                                        const GadgetInstance& g);
SwapSequence scaffold_unweighted(const GadgetInstance& g);
SwapSequence intended_unweighted(const GadgetInstance& g,
                                 const StarSTSInstance& sts,
                                 const StarSTSSolution& sol);

// Padding-pair order for round j: the left-to-right order of the q_{.,j}
// block in the final ordering gadget (q_{s_{j+1},j} first when j < n,
// q_{s_j,j} last, the rest by slot index).
std::vector<int> padding_block_order(const StarSTSInstance& sts, int j);

std::string to_json(const GadgetInstance& g);
GadgetInstance parse_gadget_json(const std::string& text);

}  // namespace tokenswap
