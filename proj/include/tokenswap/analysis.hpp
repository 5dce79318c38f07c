#pragma once

#include <map>
#include <vector>

#include "tokenswap/graph.hpp"
#include "tokenswap/seq_reduction.hpp"
#include "tokenswap/solvers.hpp"

namespace tokenswap {

struct StrayingReport {
  // Max over time of the distance from a token to the farthest vertex of its
  // start->target path reached so far.
  std::vector<int> per_token_radius;
  int overall = 0;
};

StrayingReport straying_radius(const SequentialInstance& instance,
                               const SwapSequence& seq);

struct ContraryMoveReport {
  std::vector<long long> per_token;   // c_t
  std::vector<long long> moves;       // total moves per token
  long long total = 0;                // sum of c_t
  long long total_moves = 0;          // 2 * |seq|
};

// Right moves of slot and item tokens, left moves of non-slot tokens, on the
// gadget's left-right axis (nook entries count as right moves). Requires a
// sequence that solves the gadget instance.
ContraryMoveReport contrary_moves(const GadgetInstance& g, const SwapSequence& seq);

struct ExchangeSequence {
  std::vector<int> chi;  // slot gadget indices, in order
};

// Tracks the free item token (the item most recently at the root); appends i
// whenever an item token arriving from slot gadget i replaces it.
ExchangeSequence exchange_sequence(const GadgetInstance& g, const SwapSequence& seq);

// D after every operation of a Vaughan run, starting with the initial value;
// each operation decreases D by exactly 2.
std::vector<long long> potential_trace(const SequentialInstance& instance,
                                       const VaughanResult& result);

}  // namespace tokenswap
