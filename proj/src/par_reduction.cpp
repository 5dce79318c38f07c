#include "tokenswap/par_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "tokenswap/io.hpp"

namespace tokenswap {

int ParallelGadgetInstance::w_branch(int t) const {
  if (t < 1 || t > sts.n()) throw std::invalid_argument("swap branch out of range");
  return t - 1;
}

int ParallelGadgetInstance::s_branch(int i) const {
  if (i < 1 || i > sts.m + sts.n()) {
    throw std::invalid_argument("slot branch out of range");
  }
  return sts.n() + i - 1;
}

Vertex ParallelGadgetInstance::branch_vertex(int branch, int depth) const {
  if (branch < 0 || branch >= branch_count() || depth < 1 || depth > K) {
    throw std::invalid_argument("branch vertex out of range");
  }
  return 1 + branch * K + (depth - 1);
}

int ParallelGadgetInstance::branch_of_vertex(Vertex v) const {
  if (v == 0) return -1;
  return (v - 1) / K;
}

int ParallelGadgetInstance::depth_of_vertex(Vertex v) const {
  if (v == 0) return 0;
  return (v - 1) % K + 1;
}

int active_branch(int i, int t, const StarSTSInstance& sts) {
  if (i < 1 || i > sts.m || t < 0 || t > sts.n()) {
    throw std::invalid_argument("active_branch argument out of range");
  }
  int branch = i;
  for (int step = 1; step <= t; ++step) {
    if (sts.sequence[step - 1] == i) branch = sts.m + step;
  }
  return branch;
}

namespace {

std::vector<EnforcementEntry> enforcement_table(const ParallelGadgetInstance& pg) {
  std::vector<EnforcementEntry> table;
  const StarSTSInstance& sts = pg.sts;
  for (int t = 1; t <= sts.n(); ++t) {
    int s_t = sts.sequence[t - 1];
    table.push_back({8 * t - 7, pg.w_branch(t), pg.s_branch(active_branch(s_t, t - 1, sts))});
    table.push_back({8 * t - 5, pg.w_branch(t), pg.g_branch()});
    table.push_back({8 * t - 3, pg.g_prime_branch(), pg.w_branch(t)});
    table.push_back({8 * t - 1, pg.s_branch(active_branch(s_t, t, sts)), pg.w_branch(t)});
  }
  std::sort(table.begin(), table.end(),
            [](const EnforcementEntry& a, const EnforcementEntry& b) { return a.d < b.d; });
  return table;
}

// Edge moving enforcement token e_d one step toward its target in round r.
Edge enforcement_step(const ParallelGadgetInstance& pg, const EnforcementEntry& e,
                      int round) {
  if (round < e.d) {
    return make_edge(pg.branch_vertex(e.x_branch, e.d - round + 1),
                     pg.branch_vertex(e.x_branch, e.d - round));
  }
  if (round == e.d) return make_edge(pg.branch_vertex(e.x_branch, 1), pg.root());
  if (round == e.d + 1) return make_edge(pg.root(), pg.branch_vertex(e.y_branch, 1));
  return make_edge(pg.branch_vertex(e.y_branch, round - e.d - 1),
                   pg.branch_vertex(e.y_branch, round - e.d));
}

RoundSchedule scaffold_schedule(const ParallelGadgetInstance& pg) {
  RoundSchedule sched;
  for (int round = 1; round <= pg.K; ++round) {
    std::vector<Edge> edges;
    for (const EnforcementEntry& e : pg.enforcement) {
      edges.push_back(enforcement_step(pg, e, round));
    }
    sched.rounds.push_back(std::move(edges));
  }
  return sched;
}

}  // namespace

ParallelGadgetInstance build_parallel_instance(const StarSTSInstance& sts) {
  sts.validate();
  if (!sts.is_normalized()) {
    throw std::invalid_argument(
        "star sts instance is not normalized (every slot must occur, no "
        "immediate repeats)");
  }
  ParallelGadgetInstance pg;
  pg.sts = sts;
  pg.K = 8 * sts.n();

  const int vertex_count = 1 + pg.branch_count() * pg.K;
  std::vector<Edge> edges;
  for (int branch = 0; branch < pg.branch_count(); ++branch) {
    for (int depth = 1; depth <= pg.K; ++depth) {
      Vertex v = 1 + branch * pg.K + (depth - 1);
      edges.push_back(make_edge(depth == 1 ? 0 : v - 1, v));
    }
  }
  Tree tree(vertex_count, std::move(edges));

  Configuration start(vertex_count);
  std::iota(start.begin(), start.end(), 0);

  pg.token_roles.assign(vertex_count, ParTokenRole{});
  pg.token_roles[0] = ParTokenRole{ParTokenClass::kItem, 0, 0};
  for (int i = 1; i <= sts.m; ++i) {
    Token t = 1 + pg.s_branch(i) * pg.K;  // s^i_1
    pg.token_roles[t] = ParTokenRole{ParTokenClass::kItem, i, 0};
  }
  pg.enforcement = enforcement_table(pg);
  for (const EnforcementEntry& e : pg.enforcement) {
    Token t = pg.branch_vertex(e.x_branch, e.d);
    if (pg.token_roles[t].token_class != ParTokenClass::kFiller) {
      throw std::logic_error("enforcement start collides with another token");
    }
    pg.token_roles[t] = ParTokenRole{ParTokenClass::kEnforcement, -1, e.d};
  }

  // Targets: items by the star permutation, enforcement tokens at depth K-d
  // of their y branch, fillers wherever the scaffold leaves them.
  pg.instance.tree = std::move(tree);
  pg.instance.start = start;
  pg.instance.budget = pg.K;
  Configuration end = apply_round_schedule(pg.instance.tree, start, scaffold_schedule(pg));

  Configuration target(vertex_count, -1);
  std::vector<char> vertex_taken(vertex_count, 0);
  auto assign = [&](Vertex v, Token t) {
    if (vertex_taken[v]) throw std::logic_error("two tokens share a target vertex");
    vertex_taken[v] = 1;
    target[v] = t;
  };
  for (int label = 0; label <= sts.m; ++label) {
    Token t = label == 0 ? 0 : 1 + pg.s_branch(label) * pg.K;
    int dest_slot = sts.target[label];
    assign(dest_slot == 0
               ? pg.root()
               : pg.branch_vertex(pg.s_branch(active_branch(dest_slot, sts.n(), sts)), 1),
           t);
  }
  for (const EnforcementEntry& e : pg.enforcement) {
    assign(pg.branch_vertex(e.y_branch, pg.K - e.d), pg.branch_vertex(e.x_branch, e.d));
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    Token t = end[v];
    if (pg.token_roles[t].token_class == ParTokenClass::kFiller) assign(v, t);
  }
  check_configuration(target, vertex_count, "parallel gadget target");
  pg.instance.target = std::move(target);
  pg.instance.validate();
  return pg;
}

RoundSchedule parallel_scaffold(const ParallelGadgetInstance& pg) {
  return scaffold_schedule(pg);
}

RoundSchedule forward_parallel_solution(const ParallelGadgetInstance& pg,
                                        const StarSTSSolution& sol) {
  if (static_cast<int>(sol.chosen.size()) != pg.sts.n()) {
    throw std::invalid_argument("solution length does not match the instance");
  }
  if (!solution_realizes_target(pg.sts, sol)) {
    throw std::invalid_argument("solution does not solve the star sts instance");
  }
  RoundSchedule sched = scaffold_schedule(pg);
  for (int t = 1; t <= pg.sts.n(); ++t) {
    if (sol.chosen[t - 1]) {
      sched.rounds[8 * t - 4 - 1].push_back(
          make_edge(pg.branch_vertex(pg.w_branch(t), 1), pg.branch_vertex(pg.w_branch(t), 2)));
    }
  }
  return sched;
}

StarSTSSolution extract_star_sts_solution(const ParallelGadgetInstance& pg,
                                          const RoundSchedule& sched) {
  SolutionCheck check = is_solution(pg.instance, sched);
  if (!check.yes()) {
    throw std::invalid_argument("schedule does not solve the instance: " + check.reason);
  }
  if (static_cast<int>(sched.rounds.size()) != pg.K) {
    throw std::invalid_argument("schedule must use exactly K rounds");
  }
  RoundSchedule scaffold = scaffold_schedule(pg);
  for (int round = 0; round < pg.K; ++round) {
    std::set<Edge> have(sched.rounds[round].begin(), sched.rounds[round].end());
    for (const Edge& e : scaffold.rounds[round]) {
      if (!have.count(e)) {
        throw std::invalid_argument(
            "schedule drops a forced enforcement swap in round " +
            std::to_string(round + 1) +
            "; every enforcement token must advance every round");
      }
    }
  }

  const StarSTSInstance& sts = pg.sts;
  auto is_item = [&](Token t) {
    return pg.token_roles[t].token_class == ParTokenClass::kItem;
  };
  // Item branch snapshot after round 8t: token at the root plus, per slot i,
  // the item in the active branch a(i, t).
  Configuration config = pg.instance.start;
  auto root_item = [&]() {
    Token t = config[pg.root()];
    if (!is_item(t)) throw std::invalid_argument("no item token at the root after a window");
    return t;
  };
  auto item_in_branch = [&](int branch) {
    Token found = -1;
    for (int depth = 1; depth <= pg.K; ++depth) {
      Token t = config[pg.branch_vertex(branch, depth)];
      if (is_item(t)) {
        if (found >= 0) {
          throw std::invalid_argument("two item tokens in one active branch");
        }
        found = t;
      }
    }
    if (found < 0) throw std::invalid_argument("active branch lost its item token");
    return found;
  };

  StarSTSSolution sol;
  sol.chosen.assign(sts.n(), false);
  Token at_root = root_item();
  for (int t = 1; t <= sts.n(); ++t) {
    int s_t = sts.sequence[t - 1];
    Token from_slot = item_in_branch(pg.s_branch(active_branch(s_t, t - 1, sts)));
    for (int round = 8 * (t - 1); round < 8 * t; ++round) {
      for (const Edge& e : sched.rounds[round]) std::swap(config[e.first], config[e.second]);
    }
    Token now_at_root = root_item();
    if (now_at_root == from_slot) {
      sol.chosen[t - 1] = true;
    } else if (now_at_root != at_root) {
      throw std::invalid_argument("unexpected item token reached the root");
    }
    at_root = now_at_root;
  }
  if (!solution_realizes_target(sts, sol)) {
    throw std::invalid_argument("extracted subsequence does not realize the target");
  }
  return sol;
}

namespace {
using nlohmann::json;
}

std::string to_json(const ParallelGadgetInstance& pg) {
  json j = json::parse(to_json(pg.instance));
  json branches = json::array();
  for (int t = 1; t <= pg.sts.n(); ++t) branches.push_back("w" + std::to_string(t));
  for (int i = 1; i <= pg.sts.m + pg.sts.n(); ++i) branches.push_back("s" + std::to_string(i));
  branches.push_back("g");
  branches.push_back("g'");
  json table = json::array();
  for (const EnforcementEntry& e : pg.enforcement) {
    table.push_back({{"d", e.d},
                     {"x", branches[e.x_branch]},
                     {"y", branches[e.y_branch]}});
  }
  json classes = json::array();
  for (const ParTokenRole& role : pg.token_roles) {
    switch (role.token_class) {
      case ParTokenClass::kItem:
        classes.push_back({{"class", "item"}, {"label", role.item_label}});
        break;
      case ParTokenClass::kEnforcement:
        classes.push_back({{"class", "enforcement"}, {"d", role.d}});
        break;
      case ParTokenClass::kFiller:
        classes.push_back({{"class", "filler"}});
        break;
    }
  }
  j["branches"] = {{"order", branches}, {"length", pg.K}};
  j["enforcement_table"] = table;
  j["token_classes"] = classes;
  j["K"] = pg.K;
  j["sts"] = json::parse(to_json(pg.sts));
  return j.dump(2);
}

ParallelGadgetInstance parse_parallel_gadget_json(const std::string& text) {
  json j = json::parse(text);
  StarSTSInstance sts = parse_star_sts_json(j.at("sts").dump());
  ParallelGadgetInstance rebuilt = build_parallel_instance(sts);
  ParallelInstance stored = parse_parallel_json(text);
  if (stored.tree.edges() != rebuilt.instance.tree.edges() ||
      stored.start != rebuilt.instance.start ||
      stored.target != rebuilt.instance.target ||
      stored.budget != rebuilt.instance.budget ||
      j.at("K").get<int>() != rebuilt.K) {
    throw std::invalid_argument("parallel gadget file does not match its construction");
  }
  return rebuilt;
}

}  // namespace tokenswap
