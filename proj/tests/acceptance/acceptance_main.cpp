// Acceptance suite: one check per numbered criterion, each printed as a
// single pass/fail line. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "tokenswap/analysis.hpp"
#include "tokenswap/graph.hpp"
#include "tokenswap/par_reduction.hpp"
#include "tokenswap/seq_reduction.hpp"
#include "tokenswap/solvers.hpp"
#include "tokenswap/star_sts.hpp"

using namespace tokenswap;

namespace {

int failures = 0;
long long cases = 0;  // instances exercised by the running criterion
std::vector<std::string> notes;

void require(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    notes.push_back(what);
  }
}

struct Criterion {
  const char* name;
  std::function<void()> body;
};

// All normalized sequences over slots 1..m with length <= max_n.
std::vector<std::vector<int>> normalized_sequences(int m, int max_n) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  auto rec = [&](auto&& self) -> void {
    if (!seq.empty()) {
      std::vector<char> seen(m + 1, 0);
      for (int s : seq) seen[s] = 1;
      bool all = true;
      for (int i = 1; i <= m; ++i) all = all && seen[i];
      if (all) out.push_back(seq);
    }
    if (static_cast<int>(seq.size()) == max_n) return;
    for (int s = 1; s <= m; ++s) {
      if (!seq.empty() && seq.back() == s) continue;
      seq.push_back(s);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<std::vector<int>> permutations_of(int count) {
  std::vector<int> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Vertex> target_of_map(const Configuration& target) {
  std::vector<Vertex> target_of(target.size());
  for (Vertex v = 0; v < static_cast<Vertex>(target.size()); ++v) {
    target_of[target[v]] = v;
  }
  return target_of;
}

Tree random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.push_back(make_edge(pick(rng), v));
  }
  return Tree(n, std::move(edges));
}

// ---- 1. Star STS reduction soundness -------------------------------------

void criterion_star_sts() {
  // Exhaustive: m <= 3, n <= 3 over unordered transpositions and targets.
  for (int m = 2; m <= 3; ++m) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= m; ++a) {
      for (int b = a + 1; b <= m; ++b) pairs.emplace_back(a, b);
    }
    std::vector<std::vector<int>> swap_lists{{}};
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::vector<int>> next;
      for (const auto& list : swap_lists) {
        for (size_t p = 0; p < pairs.size(); ++p) {
          auto extended = list;
          extended.push_back(static_cast<int>(p));
          next.push_back(extended);
        }
      }
      swap_lists = next;
      for (const auto& list : swap_lists) {
        for (const auto& target : permutations_of(m)) {
          Wppsg2Instance inst;
          inst.m = m;
          for (int p : list) inst.swaps.push_back(pairs[p]);
          for (int t : target) inst.target.push_back(t + 1);
          bool direct = solve_wppsg2_brute_force(inst);
          bool reduced = solve_star_sts(reduce_wppsg2_to_star_sts(inst)).has_value();
          require(direct == reduced, "wppsg2/star-sts mismatch (exhaustive)");
          ++cases;
        }
      }
    }
  }
  // 200 random cases with m <= 4, n <= 4.
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 2 + static_cast<int>(rng() % 3);
    int n = 1 + static_cast<int>(rng() % 4);
    Wppsg2Instance inst;
    inst.m = m;
    for (int i = 0; i < n; ++i) {
      int a = 1 + static_cast<int>(rng() % m);
      int b = 1 + static_cast<int>(rng() % m);
      while (b == a) b = 1 + static_cast<int>(rng() % m);
      inst.swaps.emplace_back(a, b);
    }
    inst.target.resize(m);
    std::iota(inst.target.begin(), inst.target.end(), 1);
    std::shuffle(inst.target.begin(), inst.target.end(), rng);
    bool direct = solve_wppsg2_brute_force(inst);
    bool reduced = solve_star_sts(reduce_wppsg2_to_star_sts(inst)).has_value();
    require(direct == reduced, "wppsg2/star-sts mismatch (random)");
    ++cases;
  }
  require(cases > 200, "case generation came up short");
}

// ---- 2. Weighted reduction answer-preservation ----------------------------

void criterion_weighted() {
  for (const auto& seq : normalized_sequences(2, 3)) {
    for (const auto& target : permutations_of(3)) {
      StarSTSInstance sts{2, seq, target};
      ++cases;
      GadgetInstance g = build_weighted_instance(sts);
      require(g.instance.tree.vertex_count() <= 9, "weighted tree too large");
      ExactResult oracle = exact_opt(g.instance, 9);
      auto sol = solve_star_sts(sts);
      require((oracle.cost <= g.params.K) == sol.has_value(),
              "weighted oracle disagrees with star sts");
      if (sol) {
        SolutionCheck check = is_solution(g.instance, intended_weighted_solution(sts, *sol, g));
        require(check.yes(), "weighted intended witness rejected");
        require(check.cost == g.params.K, "weighted intended cost is not exactly K");
      }
    }
  }
}

// ---- 3. Unweighted YES-side ------------------------------------------------

long long count_contrary_expected(const GadgetInstance& g, const SwapSequence& seq) {
  ContraryMoveReport report = contrary_moves(g, seq);
  return report.total;
}

void criterion_unweighted() {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& seq : normalized_sequences(m, 3)) {
      for (const auto& target : permutations_of(m + 1)) {
        StarSTSInstance sts{m, seq, target};
        auto sol = solve_star_sts(sts);
        if (!sol) continue;
        for (int k : {2, 3, 4}) {
          ++cases;
          GadgetInstance g = build_unweighted_instance(sts, k, 1);
          SwapSequence scaffold = scaffold_solution(g);
          require(static_cast<long long>(scaffold.swaps.size()) == g.params.H,
                  "scaffold cost differs from H");
          SwapSequence intended = intended_solution(g, *sol);
          long long chosen = std::count(sol->chosen.begin(), sol->chosen.end(), true);
          require(static_cast<long long>(intended.swaps.size()) == g.params.H + chosen,
                  "intended cost differs from H + |chosen|");
          SolutionCheck check = is_solution(g.instance, intended);
          require(check.yes(), "intended witness rejected");
          require(check.cost <= g.params.K, "intended witness over budget");

          // Property assertions on the scaffold (P1, P2, P4, P5 and the P3
          // partner characterization), plus the move identity on both
          // witnesses.
          const int vertex_count = g.instance.tree.vertex_count();
          std::vector<long long> moves(vertex_count, 0);
          std::vector<std::set<Token>> partners(vertex_count);
          std::vector<Token> root_arrivals;
          std::vector<char> seen_root(vertex_count, 0);
          Configuration config = g.instance.start;
          bool class_clash = false;
          for (auto [u, v] : scaffold.swaps) {
            Token a = config[u], b = config[v];
            moves[a]++;
            moves[b]++;
            partners[a].insert(b);
            partners[b].insert(a);
            TokenClass ca = g.token_roles[a].token_class;
            TokenClass cb = g.token_roles[b].token_class;
            if (ca == cb && ca != TokenClass::kItem) class_clash = true;
            std::swap(config[u], config[v]);
            if (!seen_root[config[g.root()]]) {
              seen_root[config[g.root()]] = 1;
              root_arrivals.push_back(config[g.root()]);
            }
          }
          require(!class_clash, "P2: two same-class non-item tokens swapped");

          auto target_of = target_of_map(g.instance.target);
          long long non_item = 0;
          bool p1 = true, p4 = true;
          for (Token t = 0; t < vertex_count; ++t) {
            if (g.token_roles[t].token_class == TokenClass::kItem) continue;
            ++non_item;
            p1 = p1 && moves[t] == g.instance.tree.distance(t, target_of[t]);
            p4 = p4 && partners[0].count(t) == 1;
          }
          require(p1, "P1: a non-item token left its shortest path");
          require(p4, "P4: token 0 missed a non-item token");
          require(static_cast<long long>(partners[0].size()) == non_item,
                  "P4: token 0 swapped beyond the non-item tokens");

          // P5 via segment tables.
          std::vector<std::vector<Token>> seg_tokens(g.segments.size());
          for (Token t = 0; t < vertex_count; ++t) {
            const TokenRole& role = g.token_roles[t];
            if (role.segment_id >= 0) {
              auto& list = seg_tokens[role.segment_id];
              if (static_cast<int>(list.size()) <= role.offset) list.resize(role.offset + 1);
              list[role.offset] = t;
            }
          }
          std::vector<Token> slot_expected, non_slot_expected;
          for (int segment : g.final_ordering) {
            for (Token t : seg_tokens[segment]) slot_expected.push_back(t);
          }
          for (auto it = g.initial_ordering.rbegin(); it != g.initial_ordering.rend(); ++it) {
            for (auto tok = seg_tokens[*it].rbegin(); tok != seg_tokens[*it].rend(); ++tok) {
              non_slot_expected.push_back(*tok);
            }
          }
          std::vector<Token> slot_seen, non_slot_seen;
          for (Token t : root_arrivals) {
            if (g.token_roles[t].token_class == TokenClass::kSlotToken) slot_seen.push_back(t);
            if (g.token_roles[t].token_class == TokenClass::kNonSlotToken) {
              non_slot_seen.push_back(t);
            }
          }
          require(slot_seen == slot_expected, "P5: slot tokens out of order at the root");
          require(non_slot_seen == non_slot_expected,
                  "P5: non-slot tokens out of order at the root");

          // P3 partner characterization.
          auto partner_of = [&](int segment) {
            const Segment& s = g.segments[segment];
            for (size_t other = 0; other < g.segments.size(); ++other) {
              const Segment& o = g.segments[other];
              bool partner_family =
                  (s.family == SegmentFamily::kBigY && o.family == SegmentFamily::kBigX) ||
                  (s.family == SegmentFamily::kBigX && o.family == SegmentFamily::kBigY) ||
                  (s.family == SegmentFamily::kPadQ && o.family == SegmentFamily::kPadP) ||
                  (s.family == SegmentFamily::kPadP && o.family == SegmentFamily::kPadQ);
              if (partner_family && o.j == s.j && o.slot == s.slot) {
                return static_cast<int>(other);
              }
            }
            return -1;
          };
          bool p3 = true;
          for (int slot = 1; slot <= g.params.m; ++slot) {
            const auto& gadget = g.initial_slot[slot];
            for (size_t pos = 0; pos < gadget.size(); ++pos) {
              std::set<Token> expected;
              for (size_t before = 0; before < pos; ++before) {
                for (Token t : seg_tokens[partner_of(gadget[before])]) expected.insert(t);
              }
              int partner = partner_of(gadget[pos]);
              auto it = std::find(g.initial_ordering.begin(), g.initial_ordering.end(), partner);
              for (auto walk = g.initial_ordering.begin(); walk <= it; ++walk) {
                for (Token t : seg_tokens[*walk]) expected.insert(t);
              }
              for (Token t : seg_tokens[gadget[pos]]) {
                std::set<Token> measured;
                for (Token p : partners[t]) {
                  if (g.token_roles[p].token_class == TokenClass::kNonSlotToken) {
                    measured.insert(p);
                  }
                }
                p3 = p3 && measured == expected;
              }
            }
          }
          require(p3, "P3: partner sets differ from the layout characterization");

          // Move identity on both witnesses (scaffold solves the items-fixed
          // variant of the instance).
          GadgetInstance fixed = g;
          for (Token t = 0; t < vertex_count; ++t) {
            if (g.token_roles[t].token_class == TokenClass::kItem) {
              fixed.instance.target[t] = t;
            }
          }
          long long dist_sum = 0;
          for (Token t = 0; t < vertex_count; ++t) {
            if (g.token_roles[t].token_class != TokenClass::kItem) {
              dist_sum += g.instance.tree.distance(t, target_of[t]);
            }
          }
          ContraryMoveReport scaffold_report = contrary_moves(fixed, scaffold);
          require(scaffold_report.total_moves == dist_sum + 2 * scaffold_report.total,
                  "move identity failed on the scaffold");
          ContraryMoveReport intended_report = contrary_moves(g, intended);
          require(intended_report.total_moves == dist_sum + 2 * intended_report.total,
                  "move identity failed on the intended witness");
        }
      }
    }
  }
}

// ---- 4. Parallel reduction -------------------------------------------------

void criterion_parallel() {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& seq : normalized_sequences(m, 3)) {
      for (const auto& target : permutations_of(m + 1)) {
        StarSTSInstance sts{m, seq, target};
        ++cases;
        ParallelGadgetInstance pg = build_parallel_instance(sts);
        RoundSchedule scaffold = parallel_scaffold(pg);

        // Legality: apply_round_schedule validates every round is a matching.
        Configuration end;
        try {
          end = apply_round_schedule(pg.instance.tree, pg.instance.start, scaffold);
        } catch (const std::exception&) {
          require(false, "scaffold is not a legal matching sequence");
          continue;
        }
        require(static_cast<int>(scaffold.rounds.size()) == pg.K,
                "scaffold does not use exactly K rounds");

        auto target_of = target_of_map(pg.instance.target);
        std::set<Vertex> item_targets, item_ends;
        bool enforcement_ok = true;
        for (Token t = 0; t < static_cast<Token>(pg.token_roles.size()); ++t) {
          if (pg.token_roles[t].token_class == ParTokenClass::kEnforcement) {
            enforcement_ok = enforcement_ok && end[target_of[t]] == t &&
                             pg.instance.tree.distance(t, target_of[t]) == pg.K;
          }
          if (pg.token_roles[t].token_class == ParTokenClass::kItem) {
            item_targets.insert(target_of[t]);
          }
        }
        require(enforcement_ok, "an enforcement token missed its target");
        for (Vertex v = 0; v < static_cast<Vertex>(end.size()); ++v) {
          if (pg.token_roles[end[v]].token_class == ParTokenClass::kItem) {
            item_ends.insert(v);
          }
        }
        require(item_ends == item_targets, "items left the item-target set");

        auto sol = solve_star_sts(sts);
        if (sol) {
          RoundSchedule forward = forward_parallel_solution(pg, *sol);
          SolutionCheck check = is_solution(pg.instance, forward);
          require(check.yes(), "forward schedule rejected");
          require(check.cost <= pg.K, "forward schedule over the round budget");
          StarSTSSolution extracted = extract_star_sts_solution(pg, forward);
          require(solution_realizes_target(sts, extracted),
                  "extraction failed the round trip");
        }
      }
    }
  }
}

// ---- 5. Exact-solver cross-validation --------------------------------------

void criterion_exact_solvers() {
  // Paths up to 6 vertices, exhaustive over targets.
  for (int n = 2; n <= 6; ++n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back(make_edge(v - 1, v));
    Tree tree(n, edges);
    Configuration start(n);
    std::iota(start.begin(), start.end(), 0);
    for (const auto& target : permutations_of(n)) {
      SequentialInstance instance{tree, start, target, std::nullopt, std::nullopt};
      ++cases;
      require(exact_path(instance) == exact_opt(instance).cost,
              "path inversion count differs from search");
    }
  }
  // Stars with up to 5 leaves, exhaustive.
  for (int leaves = 1; leaves <= 5; ++leaves) {
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back(make_edge(0, v));
    Tree tree(leaves + 1, edges);
    Configuration start(leaves + 1);
    std::iota(start.begin(), start.end(), 0);
    for (const auto& target : permutations_of(leaves + 1)) {
      SequentialInstance instance{tree, start, target, std::nullopt, std::nullopt};
      ++cases;
      ExactResult greedy = exact_star(instance);
      require(greedy.cost == exact_opt(instance).cost,
              "star greedy differs from search");
      require(is_solution(instance, greedy.witness).yes(), "star witness rejected");
    }
  }
}

// ---- 6. Vaughan on T_{k,b} --------------------------------------------------

void criterion_vaughan_tkb() {
  double previous_ratio = 0.0;
  double final_ratio = 0.0;
  for (int k : {5, 7, 9}) {
    int b = k;
    ++cases;
    TkbInstance tkb = generate_tkb(k, b);
    VaughanResult result = vaughan_solve(tkb.instance);
    require(is_solution(tkb.instance, result.sequence).yes(), "vaughan output rejected");
    require(result.happy_swaps <= static_cast<long long>(b) * k,
            "happy swaps exceed bk");
    require(static_cast<long long>(result.sequence.swaps.size()) >=
                static_cast<long long>(b) * k * (k - 3),
            "total swaps fall below bk(k-3)");
    require(result.initial_potential == static_cast<long long>(b) * k * (k + 1),
            "initial D differs from bk(k+1)");
    std::vector<long long> trace = potential_trace(tkb.instance, result);
    bool steps_of_two = trace.back() == 0;
    for (size_t i = 1; i < trace.size(); ++i) {
      steps_of_two = steps_of_two && trace[i - 1] - trace[i] == 2;
    }
    require(steps_of_two, "an operation did not decrease D by exactly 2");

    SwapSequence ub = tkb_upper_bound_solution(k, b);
    require(is_solution(tkb.instance, ub).yes(), "upper-bound witness rejected");
    double ratio = static_cast<double>(result.sequence.swaps.size()) /
                   static_cast<double>(ub.swaps.size());
    require(ratio >= previous_ratio, "ratio is not nondecreasing over the sizes");
    previous_ratio = ratio;
    final_ratio = ratio;
  }
  std::ostringstream note;
  note << "vaughan/upper-bound ratio at k=b=9 is " << final_ratio;
  require(final_ratio >= 1.50, note.str() + " (< 1.50)");
}

// ---- 7. T_{2,3} exact check --------------------------------------------------

void criterion_t23() {
  ++cases;
  TkbInstance tkb = generate_tkb(2, 3);
  require(tkb.instance.tree.vertex_count() == 9, "T_{2,3} is not 9 vertices");
  long long opt = exact_opt(tkb.instance, 10).cost;
  SwapSequence ub = tkb_upper_bound_solution(2, 3);
  require(is_solution(tkb.instance, ub).yes(), "upper-bound witness rejected");
  require(static_cast<long long>(ub.swaps.size()) >= opt, "upper bound beat the optimum");
  require(static_cast<long long>(ub.swaps.size()) <= 28,
          "upper bound exceeds (b+1)(C(k+1,2)+2k) = 28");
  VaughanResult vaughan = vaughan_solve(tkb.instance);
  require(is_solution(tkb.instance, vaughan.sequence).yes(), "vaughan output rejected");
  require(static_cast<long long>(vaughan.sequence.swaps.size()) <= 2 * opt,
          "vaughan exceeded twice the optimum");
}

// ---- 8. Straying ---------------------------------------------------------

void criterion_straying() {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Configuration start(n);
    std::iota(start.begin(), start.end(), 0);
    std::shuffle(start.begin(), start.end(), rng);
    Configuration target(n);
    std::iota(target.begin(), target.end(), 0);
    SequentialInstance instance{random_tree(n, rng), start, target, std::nullopt,
                                std::nullopt};
    SwapSequence seq = happy_swap_solve(instance);
    ++cases;
    require(is_solution(instance, seq).yes(), "happy-swap output rejected");
    require(straying_radius(instance, seq).overall <= 1,
            "happy-swap output strayed beyond 1");
  }

  // Scripted Vaughan on the 9-vertex path: the centre token strays (n-1)/2.
  const int k = 4, n = 9;
  Configuration start(n);
  for (int p = 0; p < k; ++p) start[p] = k + 1 + p;
  start[k] = k;
  for (int p = k + 1; p < n; ++p) start[p] = p - k - 1;
  Configuration target(n);
  std::iota(target.begin(), target.end(), 0);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back(make_edge(v - 1, v));
  SequentialInstance instance{Tree(n, edges), start, target, std::nullopt, std::nullopt};
  VaughanScript script;
  for (int i = k; i >= 1; --i) {
    script.steps.push_back({VaughanOp::kSymmetricShove, make_edge(i - 1, i)});
    for (int j = i; j < i + k; ++j) {
      script.steps.push_back({VaughanOp::kHappySwap, make_edge(j, j + 1)});
    }
  }
  VaughanResult result = vaughan_solve(instance, VaughanPolicy{script});
  ++cases;
  require(is_solution(instance, result.sequence).yes(), "scripted run rejected");
  StrayingReport report = straying_radius(instance, result.sequence);
  require(report.per_token_radius[k] == (n - 1) / 2,
          "scripted vaughan did not stray (n-1)/2");
}

// ---- 9. Normalization -------------------------------------------------------

void criterion_normalization() {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    SequentialInstance instance{random_tree(n, rng), Configuration(n), Configuration(n),
                                std::nullopt, std::nullopt};
    std::iota(instance.start.begin(), instance.start.end(), 0);
    SwapSequence seq;
    int length = 4 + static_cast<int>(rng() % 30);
    for (int i = 0; i < length; ++i) {
      const auto& edges = instance.tree.edges();
      seq.swaps.push_back(edges[rng() % edges.size()]);
    }
    instance.target = apply_swap_sequence(instance, seq).config;
    ++cases;
    SwapSequence normalized = normalize_sequence(instance, seq);
    require(apply_swap_sequence(instance, normalized).config == instance.target,
            "normalization changed the final configuration");
    require(normalized.swaps.size() <= seq.swaps.size(), "normalization grew the sequence");
    Configuration config = instance.start;
    std::set<std::pair<Token, Token>> pairs;
    bool repeats = false;
    for (auto [u, v] : normalized.swaps) {
      auto key = std::minmax(config[u], config[v]);
      repeats = repeats || !pairs.insert({key.first, key.second}).second;
      std::swap(config[u], config[v]);
    }
    require(!repeats, "a token pair still swaps twice");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"1 star-sts reduction soundness", criterion_star_sts},
      {"2 weighted reduction answer-preservation", criterion_weighted},
      {"3 unweighted yes-side", criterion_unweighted},
      {"4 parallel reduction", criterion_parallel},
      {"5 exact-solver cross-validation", criterion_exact_solvers},
      {"6 vaughan on t_kb", criterion_vaughan_tkb},
      {"7 t_23 exact check", criterion_t23},
      {"8 straying", criterion_straying},
      {"9 normalization", criterion_normalization},
  };
  int exit_code = 0;
  for (const auto& criterion : criteria) {
    int before = failures;
    notes.clear();
    cases = 0;
    auto begin = std::chrono::steady_clock::now();
    try {
      criterion.body();
    } catch (const std::exception& e) {
      ++failures;
      notes.push_back(std::string("exception: ") + e.what());
    }
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin);
    bool ok = failures == before;
    std::printf("[%s] criterion %s (%lld cases, %.1fs)\n", ok ? "PASS" : "FAIL",
                criterion.name, cases, seconds.count());
    if (!ok) {
      exit_code = 1;
      std::set<std::string> unique(notes.begin(), notes.end());
      for (const auto& note : unique) std::printf("       - %s\n", note.c_str());
    }
  }
  return exit_code;
}
