#include "tokenswap/solvers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace tokenswap {

namespace {

struct ConfigHash {
  size_t operator()(const Configuration& config) const {
    size_t h = 1469598103934665603ull;
    for (int t : config) {
      h ^= static_cast<size_t>(t) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

ExactResult exact_opt(const SequentialInstance& instance, int vertex_cap) {
  instance.validate();
  const int n = instance.tree.vertex_count();
  if (n > vertex_cap) {
    throw CapacityError("exact_opt: " + std::to_string(n) +
                        " vertices exceed the cap " + std::to_string(vertex_cap));
  }
  const auto& edges = instance.tree.edges();
  const auto& weights = instance.weights;

  struct Visit {
    long long cost;
    Configuration previous;
    Edge via;
  };
  std::unordered_map<Configuration, Visit, ConfigHash> visited;
  visited.emplace(instance.start, Visit{0, {}, {}});

  auto expand = [&](const Configuration& config, long long cost, auto&& push) {
    for (const Edge& e : edges) {
      long long swap_cost =
          weights ? (*weights)[config[e.first]] + (*weights)[config[e.second]] : 1;
      Configuration next = config;
      std::swap(next[e.first], next[e.second]);
      auto it = visited.find(next);
      if (it == visited.end()) {
        visited.emplace(next, Visit{cost + swap_cost, config, e});
        push(std::move(next), cost + swap_cost);
      } else if (it->second.cost > cost + swap_cost) {
        it->second = Visit{cost + swap_cost, config, e};
        push(std::move(next), cost + swap_cost);
      }
    }
  };

  if (!weights) {
    std::deque<Configuration> queue{instance.start};
    while (!queue.empty() && !visited.count(instance.target)) {
      Configuration config = std::move(queue.front());
      queue.pop_front();
      long long cost = visited.at(config).cost;
      expand(config, cost, [&](Configuration next, long long) {
        queue.push_back(std::move(next));
      });
    }
  } else {
    using Entry = std::pair<long long, Configuration>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0, instance.start);
    while (!queue.empty()) {
      auto [cost, config] = queue.top();
      queue.pop();
      if (visited.at(config).cost != cost) continue;  // stale entry
      if (config == instance.target) break;
      expand(config, cost, [&](Configuration next, long long next_cost) {
        queue.emplace(next_cost, std::move(next));
      });
    }
  }

  auto it = visited.find(instance.target);
  if (it == visited.end()) {
    throw std::logic_error("search exhausted without reaching the target");
  }
  ExactResult result;
  result.cost = it->second.cost;
  Configuration cur = instance.target;
  while (cur != instance.start) {
    const Visit& visit = visited.at(cur);
    result.witness.swaps.push_back(visit.via);
    cur = visit.previous;
  }
  std::reverse(result.witness.swaps.begin(), result.witness.swaps.end());
  return result;
}

namespace {

// Endpoint-to-endpoint vertex order of a path graph.
std::vector<Vertex> path_order(const Tree& tree) {
  const int n = tree.vertex_count();
  Vertex end = -1;
  for (Vertex v = 0; v < n && end < 0; ++v) {
    if (tree.degree(v) <= 1) end = v;
  }
  std::vector<Vertex> order{end};
  Vertex prev = -1, cur = end;
  while (static_cast<int>(order.size()) < n) {
    Vertex next = -1;
    for (Vertex nb : tree.neighbors(cur)) {
      if (nb != prev) {
        if (next >= 0) throw std::invalid_argument("tree is not a path");
        next = nb;
      }
    }
    if (next < 0) throw std::invalid_argument("tree is not a path");
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

long long exact_path(const SequentialInstance& instance) {
  instance.validate();
  const int n = instance.tree.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (instance.tree.degree(v) > 2) {
      throw std::invalid_argument("exact_path: tree is not a path");
    }
  }
  std::vector<Vertex> order = n == 1 ? std::vector<Vertex>{0} : path_order(instance.tree);
  // relative[i] = final path index of the token now at path index i
  std::vector<int> final_index(n);
  for (int i = 0; i < n; ++i) final_index[instance.target[order[i]]] = i;
  std::vector<int> relative(n);
  for (int i = 0; i < n; ++i) relative[i] = final_index[instance.start[order[i]]];
  long long inversions = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (relative[i] > relative[j]) ++inversions;
    }
  }
  return inversions;
}

ExactResult exact_star(const SequentialInstance& instance) {
  instance.validate();
  const int n = instance.tree.vertex_count();
  Vertex center = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (instance.tree.degree(v) == n - 1) center = v;
  }
  if (n > 2 && center < 0) {
    throw std::invalid_argument("exact_star: tree is not a star");
  }
  if (center < 0) center = 0;

  std::vector<Vertex> target_of(n);
  for (Vertex v = 0; v < n; ++v) target_of[instance.target[v]] = v;

  Configuration config = instance.start;
  ExactResult result;
  auto emit = [&](Vertex leaf) {
    result.witness.swaps.push_back(make_edge(center, leaf));
    std::swap(config[center], config[leaf]);
    ++result.cost;
  };
  for (;;) {
    Token center_token = config[center];
    if (target_of[center_token] != center) {
      emit(target_of[center_token]);
      continue;
    }
    Vertex pull = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (v != center && target_of[config[v]] != v) {
        pull = v;
        break;
      }
    }
    if (pull < 0) break;
    emit(pull);
  }
  return result;
}

namespace {

// Both token placements of Vaughan's pairing: real[v] and dest[v] name the
// token / destination token on vertex v.
struct VaughanState {
  const Tree& tree;
  Configuration real;
  Configuration dest;
  std::vector<Vertex> real_at;  // token -> vertex
  std::vector<Vertex> dest_at;

  VaughanState(const Tree& t, const Configuration& start, const Configuration& target)
      : tree(t), real(start), dest(target) {
    real_at.resize(real.size());
    dest_at.resize(real.size());
    for (Vertex v = 0; v < static_cast<Vertex>(real.size()); ++v) {
      real_at[real[v]] = v;
      dest_at[dest[v]] = v;
    }
  }

  bool happy(Token t) const { return real_at[t] == dest_at[t]; }

  // Direction an unhappy token at u wants: the next vertex toward its
  // destination token.
  bool token_wants(Vertex u, Vertex v) const {
    Token t = real[u];
    return !happy(t) && tree.next_on_path(u, dest_at[t]) == v;
  }

  bool dest_wants(Vertex u, Vertex v) const {
    Token t = dest[u];
    return !happy(t) && tree.next_on_path(u, real_at[t]) == v;
  }

  void swap_real(Vertex u, Vertex v) {
    std::swap(real[u], real[v]);
    real_at[real[u]] = u;
    real_at[real[v]] = v;
  }

  void swap_dest(Vertex u, Vertex v) {
    std::swap(dest[u], dest[v]);
    dest_at[dest[u]] = u;
    dest_at[dest[v]] = v;
  }

  long long potential() const {
    long long d = 0;
    for (Token t = 0; t < static_cast<Token>(real.size()); ++t) {
      d += tree.distance(real_at[t], dest_at[t]);
    }
    return d;
  }

  bool all_happy() const {
    for (Token t = 0; t < static_cast<Token>(real.size()); ++t) {
      if (!happy(t)) return false;
    }
    return true;
  }

  bool is_happy_swap(Vertex u, Vertex v) const {
    return token_wants(u, v) && token_wants(v, u);
  }
  bool is_happy_dest_swap(Vertex u, Vertex v) const {
    return dest_wants(u, v) && dest_wants(v, u);
  }
  // Ordered: u carries the unhappy token and destination token, v the happy pair.
  bool is_shove(Vertex u, Vertex v) const {
    return real[v] == dest[v] && token_wants(u, v) && dest_wants(u, v);
  }
};

}  // namespace

VaughanResult vaughan_solve(const SequentialInstance& instance,
                            const VaughanPolicy& policy) {
  instance.validate();
  if (instance.weights) {
    throw std::invalid_argument("vaughan_solve handles unweighted instances only");
  }
  VaughanState state(instance.tree, instance.start, instance.target);
  VaughanResult result;
  result.initial_potential = state.potential();

  std::vector<Edge> front;
  std::deque<Edge> back;

  auto apply = [&](const VaughanStep& step) {
    auto [u, v] = step.edge;
    switch (step.op) {
      case VaughanOp::kHappySwap:
        front.push_back(make_edge(u, v));
        state.swap_real(u, v);
        ++result.happy_swaps;
        break;
      case VaughanOp::kHappyDestSwap:
        back.push_front(make_edge(u, v));
        state.swap_dest(u, v);
        ++result.happy_dest_swaps;
        break;
      case VaughanOp::kSymmetricShove:
        front.push_back(make_edge(u, v));
        back.push_front(make_edge(u, v));
        state.swap_real(u, v);
        state.swap_dest(u, v);
        ++result.shoves;
        break;
    }
    result.ops.push_back(VaughanStep{step.op, make_edge(u, v)});
  };

  if (const auto* script = std::get_if<VaughanScript>(&policy)) {
    for (const VaughanStep& step : script->steps) {
      auto [u, v] = step.edge;
      bool ok = false;
      switch (step.op) {
        case VaughanOp::kHappySwap:
          ok = state.is_happy_swap(u, v);
          break;
        case VaughanOp::kHappyDestSwap:
          ok = state.is_happy_dest_swap(u, v);
          break;
        case VaughanOp::kSymmetricShove:
          // Scripted shoves give the edge unordered; orient it.
          if (state.is_shove(v, u)) {
            std::swap(u, v);
            ok = true;
          } else {
            ok = state.is_shove(u, v);
          }
          break;
      }
      if (!ok) {
        throw std::invalid_argument("scripted operation is not applicable");
      }
      apply(VaughanStep{step.op, {u, v}});
    }
    if (!state.all_happy()) {
      throw std::invalid_argument("script did not finish the instance");
    }
  } else {
    std::vector<Edge> edges = instance.tree.edges();
    std::sort(edges.begin(), edges.end());  // smallest-edge tie break
    while (!state.all_happy()) {
      std::optional<VaughanStep> step;
      for (const Edge& e : edges) {
        if (state.is_happy_swap(e.first, e.second)) {
          step = VaughanStep{VaughanOp::kHappySwap, e};
          break;
        }
      }
      if (!step) {
        for (const Edge& e : edges) {
          if (state.is_happy_dest_swap(e.first, e.second)) {
            step = VaughanStep{VaughanOp::kHappyDestSwap, e};
            break;
          }
        }
      }
      if (!step) {
        for (Vertex u = 0; u < instance.tree.vertex_count() && !step; ++u) {
          for (Vertex v : instance.tree.neighbors(u)) {
            if (state.is_shove(u, v)) {
              step = VaughanStep{VaughanOp::kSymmetricShove, {u, v}};
              break;
            }
          }
        }
      }
      if (!step) {
        throw std::logic_error(
            "no happy swap, happy destination swap or symmetric shove applies");
      }
      apply(*step);
    }
  }

  result.sequence.swaps = std::move(front);
  result.sequence.swaps.insert(result.sequence.swaps.end(), back.begin(), back.end());
  return result;
}

SwapSequence happy_swap_solve(const SequentialInstance& instance) {
  instance.validate();
  if (instance.weights) {
    throw std::invalid_argument("happy_swap_solve handles unweighted instances only");
  }
  const Tree& tree = instance.tree;
  const int n = tree.vertex_count();
  Configuration config = instance.start;
  std::vector<Vertex> target_of(n);
  for (Vertex v = 0; v < n; ++v) target_of[instance.target[v]] = v;

  auto wants = [&](Vertex u) -> Vertex {
    Token t = config[u];
    if (target_of[t] == u) return -1;
    return tree.next_on_path(u, target_of[t]);
  };

  SwapSequence out;
  std::vector<Edge> edges = tree.edges();
  std::sort(edges.begin(), edges.end());  // smallest-edge tie break
  const long long cap = 4LL * n * n + 16;
  for (;;) {
    if (static_cast<long long>(out.swaps.size()) > cap) {
      throw std::logic_error("happy_swap_solve exceeded its swap cap");
    }
    std::optional<Edge> happy;
    for (const Edge& e : edges) {
      Vertex wu = wants(e.first), wv = wants(e.second);
      if (wu == e.second && wv == e.first) {
        happy = e;
        break;
      }
    }
    if (happy) {
      out.swaps.push_back(*happy);
      std::swap(config[happy->first], config[happy->second]);
      continue;
    }
    // No happy swap: follow desired moves from the lowest unhappy token's
    // vertex. The chain cannot backtrack, so it ends on a happy token; shove
    // the last unhappy token in the chain through it.
    Vertex start = -1;
    for (Vertex v = 0; v < n && start < 0; ++v) {
      if (wants(v) >= 0) start = v;
    }
    if (start < 0) break;  // solved
    Vertex cur = start;
    for (;;) {
      Vertex next = wants(cur);
      if (next < 0) throw std::logic_error("chain left an unhappy token");
      if (wants(next) < 0) {
        out.swaps.push_back(make_edge(cur, next));
        std::swap(config[cur], config[next]);
        break;
      }
      cur = next;
    }
  }
  return out;
}

Vertex TkbInstance::branch_vertex(int branch, int depth) const {
  if (branch < 0 || branch >= b || depth < 1 || depth > k) {
    throw std::invalid_argument("branch vertex out of range");
  }
  return 1 + branch * k + (depth - 1);
}

Vertex TkbInstance::leaf(int index) const {
  if (index < 0 || index >= k) throw std::invalid_argument("leaf index out of range");
  return 1 + b * k + index;
}

int TkbInstance::branch_of_vertex(Vertex v) const {
  if (v <= 0 || v > b * k) return -1;
  return (v - 1) / k;
}

TkbInstance generate_tkb(int k, int b) {
  if (b < 1 || b % 2 == 0) throw std::invalid_argument("b must be odd");
  if (k < 1) throw std::invalid_argument("k must be positive");
  TkbInstance tkb;
  tkb.k = k;
  tkb.b = b;
  const int n = 1 + b * k + k;
  std::vector<Edge> edges;
  for (int branch = 0; branch < b; ++branch) {
    for (int depth = 1; depth <= k; ++depth) {
      int v = 1 + branch * k + (depth - 1);
      edges.push_back(make_edge(depth == 1 ? 0 : v - 1, v));
    }
  }
  for (int leaf = 0; leaf < k; ++leaf) edges.push_back(make_edge(0, 1 + b * k + leaf));
  Tree tree(n, std::move(edges));

  Configuration start(n);
  std::iota(start.begin(), start.end(), 0);
  Configuration target(n);
  std::iota(target.begin(), target.end(), 0);
  for (int branch = 0; branch < b; ++branch) {
    for (int depth = 1; depth <= k; ++depth) {
      Token t = 1 + branch * k + (depth - 1);
      target[1 + ((branch + 1) % b) * k + (depth - 1)] = t;
    }
  }
  tkb.instance = SequentialInstance{std::move(tree), std::move(start),
                                    std::move(target), std::nullopt, std::nullopt};
  tkb.instance.validate();
  return tkb;
}

SwapSequence tkb_upper_bound_solution(int k, int b) {
  TkbInstance tkb = generate_tkb(k, b);
  Configuration config = tkb.instance.start;
  std::vector<Vertex> target_of(config.size());
  for (Vertex v = 0; v < static_cast<Vertex>(config.size()); ++v) {
    target_of[tkb.instance.target[v]] = v;
  }
  SwapSequence out;
  auto emit = [&](Vertex u, Vertex v) {
    out.swaps.push_back(make_edge(u, v));
    std::swap(config[u], config[v]);
  };

  // One exchange swaps the k tokens at the leaf set with the contents of a
  // branch, inserting deepest-bound tokens first so each slides exactly as
  // far as needed. Each insertion's leaf swap also evacuates the branch token
  // pushed to the center by the previous slide; one closing swap parks the
  // last branch token and restores the center token. Because b is odd, the
  // parking positions work out so the original leaf tokens come home in the
  // final exchange. Cost per exchange: k(k+1)/2 + k + 1.
  auto run_exchange = [&](int branch) {
    std::vector<Vertex> leaf_of_depth(k + 1, -1);
    std::vector<char> leaf_used(k, 0);
    // Map each leaf token to the depth it must occupy in this branch; tokens
    // without a forced depth (the original leaf tokens being parked) fill the
    // remaining depths in leaf order.
    for (int leaf = 0; leaf < k; ++leaf) {
      Vertex lv = tkb.leaf(leaf);
      Vertex dest = target_of[config[lv]];
      if (tkb.branch_of_vertex(dest) == branch) {
        leaf_of_depth[(dest - 1) % k + 1] = lv;
        leaf_used[leaf] = 1;
      }
    }
    int next_depth = 1;
    for (int leaf = 0; leaf < k; ++leaf) {
      if (leaf_used[leaf]) continue;
      while (leaf_of_depth[next_depth] >= 0) ++next_depth;
      leaf_of_depth[next_depth] = tkb.leaf(leaf);
    }
    Vertex first_leaf = leaf_of_depth[k];
    for (int depth = k; depth >= 1; --depth) {
      emit(0, leaf_of_depth[depth]);
      for (int d = 1; d <= depth; ++d) {
        emit(d == 1 ? 0 : tkb.branch_vertex(branch, d - 1), tkb.branch_vertex(branch, d));
      }
    }
    emit(0, first_leaf);
  };

  for (int e = 0; e <= b; ++e) run_exchange(e % b);
  return out;
}

}  // namespace tokenswap
