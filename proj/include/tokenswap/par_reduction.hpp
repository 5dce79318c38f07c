#pragma once

#include <string>
#include <vector>

#include "tokenswap/graph.hpp"
#include "tokenswap/star_sts.hpp"

namespace tokenswap {

// Subdivided-star reduction for parallel token swapping. The star has
// n + (m+n) + 2 branches of length K = 8n hanging off a root: swap branches
// w^1..w^n, slot branches s^1..s^{m+n} and garbage branches g, g'.
// Enforcement tokens start at distance exactly K from their targets, so they
// must cross the root on fixed rounds, which pins down every root swap.

enum class ParTokenClass { kItem, kEnforcement, kFiller };

struct ParTokenRole {
  ParTokenClass token_class = ParTokenClass::kFiller;
  int item_label = -1;  // items
  int d = 0;            // enforcement tokens: odd index, start depth
};

struct EnforcementEntry {
  int d = 0;        // odd, 1..K-1
  int x_branch = 0;  // start branch (token begins at depth d)
  int y_branch = 0;  // target branch (token ends at depth K-d)
};

struct ParallelGadgetInstance {
  ParallelInstance instance;
  StarSTSInstance sts;
  int K = 0;

  std::vector<ParTokenRole> token_roles;        // by token id
  std::vector<EnforcementEntry> enforcement;    // ordered by d

  int branch_count() const { return 2 * sts.n() + sts.m + 2; }
  // Branch indices: 0..n-1 are w^1..w^n, n..n+m+n-1 are s^1..s^{m+n},
  // then g and g'.
  int w_branch(int t) const;        // t = 1..n
  int s_branch(int i) const;        // i = 1..m+n
  int g_branch() const { return 2 * sts.n() + sts.m; }
  int g_prime_branch() const { return 2 * sts.n() + sts.m + 1; }

  Vertex root() const { return 0; }
  Vertex branch_vertex(int branch, int depth) const;  // depth 1..K
  int branch_of_vertex(Vertex v) const;               // -1 for the root
  int depth_of_vertex(Vertex v) const;                // 0 for the root
};

// Branch actively representing slot i after t swaps: a(i,0) = i,
// a(s_t,t) = m+t and a(i,t) = a(i,t-1) otherwise. Returns an s-branch
// number in 1..m+n.
int active_branch(int i, int t, const StarSTSInstance& sts);

ParallelGadgetInstance build_parallel_instance(const StarSTSInstance& sts);

// K rounds, each moving every enforcement token one step along its unique
// shortest path. Legal (a matching every round) by construction.
RoundSchedule parallel_scaffold(const ParallelGadgetInstance& pg);

// Scaffold plus a swap of w^t_1 and w^t_2 in round 8t-4 for every chosen t.
RoundSchedule forward_parallel_solution(const ParallelGadgetInstance& pg,
                                        const StarSTSSolution& sol);

// Replays a solving schedule (it must contain the scaffold: each enforcement
// token needs all K rounds) and reads off, per 8-round window, whether the
// two item tokens passing through the swap branch exchanged.
StarSTSSolution extract_star_sts_solution(const ParallelGadgetInstance& pg,
                                          const RoundSchedule& sched);

std::string to_json(const ParallelGadgetInstance& pg);
ParallelGadgetInstance parse_parallel_gadget_json(const std::string& text);

}  // namespace tokenswap
