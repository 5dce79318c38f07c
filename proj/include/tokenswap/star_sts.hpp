#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tokenswap/graph.hpp"

namespace tokenswap {

// Star Subsequence Token-Swapping Reachability. The star has center 0 and
// leaves 1..m; token i starts at vertex i. sequence[j] in 1..m names the leaf
// of the j-th allowed swap (0, sequence[j]). target[i] is the vertex token i
// must end on. A solution chooses a subsequence of the allowed swaps.
struct StarSTSInstance {
  int m = 0;
  std::vector<int> sequence;
  std::vector<int> target;  // token -> destination vertex, over tokens 0..m

  int n() const { return static_cast<int>(sequence.size()); }
  void validate() const;
  // True when every slot 1..m occurs in the sequence and no slot occurs twice
  // in a row; the tree reductions require this form.
  bool is_normalized() const;
};

struct StarSTSSolution {
  std::vector<bool> chosen;
};

// vertex -> token after performing the chosen swaps in order.
std::vector<int> apply_subsequence(const StarSTSInstance& instance,
                                   const StarSTSSolution& solution);

// True when the chosen subsequence puts every token i on vertex target[i].
bool solution_realizes_target(const StarSTSInstance& instance,
                              const StarSTSSolution& solution);

// Exhaustive search over all 2^n subsequences, returning the
// lexicographically smallest witness (false < true) or nullopt.
// Guarded by a cap on n (default 24).
std::optional<StarSTSSolution> solve_star_sts(const StarSTSInstance& instance,
                                              int cap = 24);

// Deletes slots that never occur in the sequence (their tokens must be fixed
// by the target, otherwise the instance cannot be normalized and an error is
// raised) and rejects sequences with an immediate slot repeat.
StarSTSInstance normalize_star_sts(const StarSTSInstance& instance);

// WPPSG2 input: transpositions (a_i, b_i) over 1..m plus a target permutation
// of 1..m (token -> destination).
struct Wppsg2Instance {
  int m = 0;
  std::vector<std::pair<int, int>> swaps;
  std::vector<int> target;  // target[i-1] = destination of token i

  void validate() const;
};

// Decides WPPSG2 by trying all 2^n subsets of the transpositions.
bool solve_wppsg2_brute_force(const Wppsg2Instance& instance, int cap = 24);

// Appendix-style reduction: leaves 1..m keep their labels; each input swap i
// adds leaves s_in_i = m+2i-1 and s_out_i = m+2i and the 6-swap block
// [s_in_i, a_i, b_i, a_i, s_out_i, s_in_i]. The target fixes token 0, applies
// the input permutation on 1..m and transposes each s_in_i <-> s_out_i.
StarSTSInstance reduce_wppsg2_to_star_sts(const Wppsg2Instance& instance);

StarSTSInstance parse_star_sts_json(const std::string& text);
std::string to_json(const StarSTSInstance& instance);
Wppsg2Instance parse_wppsg2_json(const std::string& text);
std::string to_json(const Wppsg2Instance& instance);
std::string to_json(const StarSTSSolution& solution);

}  // namespace tokenswap
