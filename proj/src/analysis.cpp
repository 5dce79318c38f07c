#include "tokenswap/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokenswap {

StrayingReport straying_radius(const SequentialInstance& instance,
                               const SwapSequence& seq) {
  instance.validate();
  const Tree& tree = instance.tree;
  const int n = tree.vertex_count();
  std::vector<Vertex> target_of(n);
  for (Vertex v = 0; v < n; ++v) target_of[instance.target[v]] = v;

  // P_t as an index into the start->target path; reached[t] is the farthest
  // path index visited so far.
  std::vector<std::vector<Vertex>> paths(n);
  std::vector<std::vector<int>> index_on_path(n, std::vector<int>(n, -1));
  std::vector<int> reached(n, 0);
  std::vector<Vertex> where(n);
  for (Token t = 0; t < n; ++t) {
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (instance.start[v] == t) start = v;
    }
    where[t] = start;
    paths[t] = tree.path(start, target_of[t]);
    for (size_t i = 0; i < paths[t].size(); ++i) index_on_path[t][paths[t][i]] = static_cast<int>(i);
  }

  StrayingReport report;
  report.per_token_radius.assign(n, 0);
  Configuration config = instance.start;
  auto observe = [&](Token t) {
    int idx = index_on_path[t][where[t]];
    if (idx > reached[t]) reached[t] = idx;
    int radius = tree.distance(where[t], paths[t][reached[t]]);
    report.per_token_radius[t] = std::max(report.per_token_radius[t], radius);
  };
  for (size_t i = 0; i < seq.swaps.size(); ++i) {
    auto [u, v] = seq.swaps[i];
    if (!tree.has_edge(u, v)) {
      throw std::invalid_argument("swap " + std::to_string(i) + " is not a tree edge");
    }
    Token a = config[u], b = config[v];
    std::swap(config[u], config[v]);
    where[a] = v;
    where[b] = u;
    observe(a);
    observe(b);
  }
  for (int r : report.per_token_radius) report.overall = std::max(report.overall, r);
  return report;
}

ContraryMoveReport contrary_moves(const GadgetInstance& g, const SwapSequence& seq) {
  SolutionCheck check = is_solution(g.instance, seq);
  if (check.verdict == Verdict::kWrongFinal) {
    throw std::invalid_argument("sequence does not solve the gadget instance");
  }
  const int n = g.instance.tree.vertex_count();
  ContraryMoveReport report;
  report.per_token.assign(n, 0);
  report.moves.assign(n, 0);
  Configuration config = g.instance.start;
  for (auto [u, v] : seq.swaps) {
    Token a = config[u], b = config[v];
    std::swap(config[u], config[v]);
    bool a_right = g.axis_coordinate(v) > g.axis_coordinate(u);
    auto contrary = [&](Token t, bool moved_right) {
      switch (g.token_roles[t].token_class) {
        case TokenClass::kSlotToken:
          return moved_right;
        case TokenClass::kNonSlotToken:
          return !moved_right;
        case TokenClass::kItem:
          return moved_right;  // the arbitrary orientation for items
      }
      return false;
    };
    report.per_token[a] += contrary(a, a_right);
    report.per_token[b] += contrary(b, !a_right);
    report.moves[a] += 1;
    report.moves[b] += 1;
  }
  for (long long c : report.per_token) report.total += c;
  report.total_moves = move_count(seq);
  return report;
}

ExchangeSequence exchange_sequence(const GadgetInstance& g, const SwapSequence& seq) {
  SolutionCheck check = is_solution(g.instance, seq);
  if (check.verdict == Verdict::kWrongFinal) {
    throw std::invalid_argument("sequence does not solve the gadget instance");
  }
  auto is_item = [&](Token t) {
    return g.token_roles[t].token_class == TokenClass::kItem;
  };
  ExchangeSequence chi;
  Configuration config = g.instance.start;
  Token free_item = config[g.root()];
  for (auto [u, v] : seq.swaps) {
    Vertex other = (u == g.root()) ? v : (v == g.root()) ? u : -1;
    std::swap(config[u], config[v]);
    if (other < 0) continue;
    Token arrived = config[g.root()];
    if (!is_item(arrived) || arrived == free_item) continue;
    int from_gadget = g.gadget_of_vertex(other);
    if (from_gadget >= 1) chi.chi.push_back(from_gadget);
    free_item = arrived;
  }
  return chi;
}

std::vector<long long> potential_trace(const SequentialInstance& instance,
                                       const VaughanResult& result) {
  instance.validate();
  const Tree& tree = instance.tree;
  const int n = tree.vertex_count();
  std::vector<Vertex> real_at(n), dest_at(n);
  for (Vertex v = 0; v < n; ++v) {
    real_at[instance.start[v]] = v;
    dest_at[instance.target[v]] = v;
  }
  Configuration real = instance.start;
  Configuration dest = instance.target;
  auto potential = [&]() {
    long long d = 0;
    for (Token t = 0; t < n; ++t) d += tree.distance(real_at[t], dest_at[t]);
    return d;
  };
  std::vector<long long> trace{potential()};
  for (const VaughanStep& step : result.ops) {
    auto [u, v] = step.edge;
    auto swap_real = [&] {
      std::swap(real[u], real[v]);
      real_at[real[u]] = u;
      real_at[real[v]] = v;
    };
    auto swap_dest = [&] {
      std::swap(dest[u], dest[v]);
      dest_at[dest[u]] = u;
      dest_at[dest[v]] = v;
    };
    switch (step.op) {
      case VaughanOp::kHappySwap:
        swap_real();
        break;
      case VaughanOp::kHappyDestSwap:
        swap_dest();
        break;
      case VaughanOp::kSymmetricShove:
        swap_real();
        swap_dest();
        break;
    }
    trace.push_back(potential());
  }
  return trace;
}

}  // namespace tokenswap
