#include "tokenswap/seq_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "tokenswap/io.hpp"

namespace tokenswap {

int GadgetInstance::ordering_length() const {
  return params.n * params.k + params.n * params.m * params.k_prime;
}

Vertex GadgetInstance::ordering_vertex(int pos) const {
  if (pos < 1 || pos > ordering_length()) {
    throw std::invalid_argument("ordering position out of range");
  }
  return pos;
}

Vertex GadgetInstance::slot_vertex(int slot, int pos) const {
  if (slot < 1 || slot > params.m || pos < 1 || pos > slot_path_length[slot]) {
    throw std::invalid_argument("slot path position out of range");
  }
  int base = 1 + ordering_length();
  for (int i = 1; i < slot; ++i) base += slot_path_length[i] + 1;
  return base + pos - 1;
}

Vertex GadgetInstance::nook(int slot) const {
  return slot_vertex(slot, slot_path_length[slot]) + 1;
}

int GadgetInstance::gadget_of_vertex(Vertex v) const {
  const VertexInfo& info = vertex_roles.at(v);
  switch (info.role) {
    case VertexRole::kRoot:
      return -1;
    case VertexRole::kOrdering:
      return 0;
    default:
      return info.slot;
  }
}

int GadgetInstance::axis_coordinate(Vertex v) const {
  const VertexInfo& info = vertex_roles.at(v);
  switch (info.role) {
    case VertexRole::kRoot:
      return 0;
    case VertexRole::kOrdering:
      return -2 * info.pos;
    case VertexRole::kSlotPath:
      return 2 * info.pos;
    case VertexRole::kNook:
      return 2 * info.pos + 1;  // just right of the nook parent
  }
  return 0;
}

Vertex GadgetInstance::token_target(Token t) const {
  for (Vertex v = 0; v < static_cast<Vertex>(instance.target.size()); ++v) {
    if (instance.target[v] == t) return v;
  }
  throw std::invalid_argument("unknown token");
}

std::vector<int> padding_block_order(const StarSTSInstance& sts, int j) {
  int n = sts.n();
  if (j < 1 || j > n) throw std::invalid_argument("round index out of range");
  int last = sts.sequence[j - 1];
  int first = (j < n) ? sts.sequence[j] : -1;
  std::vector<int> order;
  if (first > 0) order.push_back(first);
  for (int i = 1; i <= sts.m; ++i) {
    if (i != last && i != first) order.push_back(i);
  }
  order.push_back(last);
  return order;
}

namespace {

struct LayoutBuilder {
  const StarSTSInstance& sts;
  int k;
  int k_prime;  // 0 = no padding segments
  bool weighted;

  GadgetInstance build() {
    sts.validate();
    if (!sts.is_normalized()) {
      throw std::invalid_argument(
          "star sts instance is not normalized (every slot must occur, no "
          "immediate repeats)");
    }
    GadgetInstance g;
    g.sts = sts;
    g.params.m = sts.m;
    g.params.n = sts.n();
    g.params.k = k;
    g.params.k_prime = k_prime;
    g.params.weighted = weighted;

    const int m = sts.m;
    const int n = sts.n();
    std::vector<int> occurrences(m + 1, 0);
    for (int s : sts.sequence) ++occurrences[s];

    // Segments. Big segments first (y_j, x_j), then padding (q_{i,j}, p_{i,j}).
    std::vector<int> y_id(n + 1, -1), x_id(n + 1, -1);
    std::vector<std::vector<int>> q_id(m + 1, std::vector<int>(n + 1, -1));
    std::vector<std::vector<int>> p_id(m + 1, std::vector<int>(n + 1, -1));
    auto add_segment = [&g](SegmentFamily family, int j, int slot, int length) {
      g.segments.push_back(Segment{family, j, slot, length});
      return static_cast<int>(g.segments.size()) - 1;
    };
    for (int j = 1; j <= n; ++j) {
      y_id[j] = add_segment(SegmentFamily::kBigY, j, sts.sequence[j - 1], k);
      x_id[j] = add_segment(SegmentFamily::kBigX, j, sts.sequence[j - 1], k);
    }
    if (k_prime > 0) {
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          q_id[i][j] = add_segment(SegmentFamily::kPadQ, j, i, k_prime);
          p_id[i][j] = add_segment(SegmentFamily::kPadP, j, i, k_prime);
        }
      }
    }

    // Final ordering, left to right: y_j then the q block of round j.
    for (int j = 1; j <= n; ++j) {
      g.final_ordering.push_back(y_id[j]);
      if (k_prime > 0) {
        for (int i : padding_block_order(sts, j)) g.final_ordering.push_back(q_id[i][j]);
      }
    }
    // Initial ordering: reversed pattern with y -> x and q -> p.
    auto partner = [&](int seg) {
      const Segment& s = g.segments[seg];
      switch (s.family) {
        case SegmentFamily::kBigY:
          return x_id[s.j];
        case SegmentFamily::kBigX:
          return y_id[s.j];
        case SegmentFamily::kPadQ:
          return p_id[s.slot][s.j];
        case SegmentFamily::kPadP:
          return q_id[s.slot][s.j];
      }
      return -1;
    };
    g.initial_ordering.assign(g.final_ordering.rbegin(), g.final_ordering.rend());
    for (int& seg : g.initial_ordering) seg = partner(seg);

    // Slot gadget i, left to right: y_j just before q_{i,j} when s_j = i.
    g.initial_slot.assign(m + 1, {});
    g.final_slot.assign(m + 1, {});
    g.slot_path_length.assign(m + 1, 0);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (sts.sequence[j - 1] == i) g.initial_slot[i].push_back(y_id[j]);
        if (k_prime > 0) g.initial_slot[i].push_back(q_id[i][j]);
      }
      g.final_slot[i].assign(g.initial_slot[i].rbegin(), g.initial_slot[i].rend());
      for (int& seg : g.final_slot[i]) seg = partner(seg);
      g.slot_path_length[i] = occurrences[i] * k + n * k_prime;
      if (g.slot_path_length[i] < k) {
        throw std::logic_error("slot path is shorter than the nook depth");
      }
    }

    build_tree_and_configs(g);
    set_budgets(g);
    g.instance.validate();
    return g;
  }

  void build_tree_and_configs(GadgetInstance& g) const {
    const int m = sts.m;
    const int ord_len = g.params.n * k + g.params.n * m * k_prime;
    int vertex_count = 1 + ord_len;
    for (int i = 1; i <= m; ++i) vertex_count += g.slot_path_length[i] + 1;

    g.vertex_roles.assign(vertex_count, VertexInfo{});
    std::vector<Edge> edges;
    g.vertex_roles[0] = VertexInfo{VertexRole::kRoot, 0, 0};
    for (int pos = 1; pos <= ord_len; ++pos) {
      g.vertex_roles[pos] = VertexInfo{VertexRole::kOrdering, 0, pos};
      edges.push_back(make_edge(pos == 1 ? 0 : pos - 1, pos));
    }
    int next = 1 + ord_len;
    for (int i = 1; i <= m; ++i) {
      for (int pos = 1; pos <= g.slot_path_length[i]; ++pos) {
        g.vertex_roles[next] = VertexInfo{VertexRole::kSlotPath, i, pos};
        edges.push_back(make_edge(pos == 1 ? 0 : next - 1, next));
        ++next;
      }
      // Nook leaf off the vertex at distance k from the root.
      g.vertex_roles[next] = VertexInfo{VertexRole::kNook, i, k};
      edges.push_back(make_edge(next - (g.slot_path_length[i] - k) - 1, next));
      ++next;
    }
    g.instance.tree = Tree(vertex_count, std::move(edges));

    // Tokens are named after their start vertices.
    g.instance.start.resize(vertex_count);
    std::iota(g.instance.start.begin(), g.instance.start.end(), 0);
    g.instance.target.assign(vertex_count, -1);
    g.token_roles.assign(vertex_count, TokenRole{});

    std::vector<std::vector<Token>> seg_tokens(g.segments.size());
    auto place_initial = [&](const std::vector<int>& segs, auto vertex_of) {
      int lr = 0;
      for (int seg : segs) {
        for (int o = 0; o < g.segments[seg].length; ++o, ++lr) {
          Token t = vertex_of(lr);
          seg_tokens[seg].push_back(t);
          g.token_roles[t] = TokenRole{g.gadget_of_vertex(t) == 0
                                           ? TokenClass::kNonSlotToken
                                           : TokenClass::kSlotToken,
                                       -1, seg, o};
        }
      }
    };
    // Ordering: left-to-right index lr sits at position ord_len - lr.
    place_initial(g.initial_ordering,
                  [&](int lr) { return g.ordering_vertex(ord_len - lr); });
    for (int i = 1; i <= m; ++i) {
      place_initial(g.initial_slot[i],
                    [&](int lr) { return g.slot_vertex(i, lr + 1); });
    }
    // Items: label 0 at the root, label i in nook i.
    g.token_roles[0] = TokenRole{TokenClass::kItem, 0, -1, -1};
    for (int i = 1; i <= m; ++i) {
      g.token_roles[g.nook(i)] = TokenRole{TokenClass::kItem, i, -1, -1};
    }

    auto place_final = [&](const std::vector<int>& segs, auto vertex_of) {
      int lr = 0;
      for (int seg : segs) {
        for (int o = 0; o < g.segments[seg].length; ++o, ++lr) {
          g.instance.target[vertex_of(lr)] = seg_tokens[seg][o];
        }
      }
    };
    place_final(g.final_ordering,
                [&](int lr) { return g.ordering_vertex(ord_len - lr); });
    for (int i = 1; i <= m; ++i) {
      place_final(g.final_slot[i],
                  [&](int lr) { return g.slot_vertex(i, lr + 1); });
    }
    for (int label = 0; label <= m; ++label) {
      Token t = (label == 0) ? 0 : g.nook(label);
      int dest_slot = sts.target[label];
      g.instance.target[dest_slot == 0 ? g.root() : g.nook(dest_slot)] = t;
    }
    check_configuration(g.instance.target, vertex_count, "gadget target");
  }

  void set_budgets(GadgetInstance& g) const {
    long long dist_sum = 0;
    long long dist_plus_one_sum = 0;
    std::vector<Vertex> target_of(g.instance.target.size());
    for (Vertex v = 0; v < static_cast<Vertex>(g.instance.target.size()); ++v) {
      target_of[g.instance.target[v]] = v;
    }
    for (Token t = 0; t < static_cast<Token>(g.token_roles.size()); ++t) {
      if (g.token_roles[t].token_class == TokenClass::kItem) continue;
      int d = g.instance.tree.distance(t, target_of[t]);
      dist_sum += d;
      dist_plus_one_sum += d + 1;
    }
    if (dist_plus_one_sum % 2 != 0) {
      throw std::logic_error("sum of (d_t + 1) over non-item tokens is odd");
    }
    g.params.H = dist_plus_one_sum / 2;
    if (weighted) {
      g.params.K = dist_sum;
      std::vector<int> weights(g.token_roles.size(), 1);
      for (Token t = 0; t < static_cast<Token>(g.token_roles.size()); ++t) {
        if (g.token_roles[t].token_class == TokenClass::kItem) weights[t] = 0;
      }
      g.instance.weights = std::move(weights);
    } else {
      g.params.K = g.params.H + g.params.n;
    }
    g.instance.budget = g.params.K;
  }
};

}  // namespace

GadgetInstance build_weighted_instance(const StarSTSInstance& sts) {
  return LayoutBuilder{sts, 1, 0, true}.build();
}

GadgetInstance build_unweighted_instance(const StarSTSInstance& sts, int k,
                                         int k_prime) {
  if (k < 1 || k_prime < 1) {
    throw std::invalid_argument("segment lengths must be positive");
  }
  if (k_prime > k) {
    throw std::invalid_argument("padding segments must not exceed big segments");
  }
  return LayoutBuilder{sts, k, k_prime, false}.build();
}

namespace {

// Emits the scaffold/intended swap script while simulating it, so every
// positional assumption is checked as the sequence is produced.
struct WitnessBuilder {
  const GadgetInstance& g;
  Configuration config;
  std::vector<Vertex> where;
  std::vector<Vertex> target_of;
  std::vector<std::vector<Token>> seg_tokens;
  std::vector<Edge> out;

  explicit WitnessBuilder(const GadgetInstance& gadget)
      : g(gadget), config(gadget.instance.start) {
    where.resize(config.size());
    target_of.resize(config.size());
    for (Vertex v = 0; v < static_cast<Vertex>(config.size()); ++v) {
      where[config[v]] = v;
      target_of[g.instance.target[v]] = v;
    }
    seg_tokens.resize(g.segments.size());
    for (Token t = 0; t < static_cast<Token>(config.size()); ++t) {
      const TokenRole& role = g.token_roles[t];
      if (role.segment_id >= 0) {
        auto& tokens = seg_tokens[role.segment_id];
        if (static_cast<int>(tokens.size()) <= role.offset) {
          tokens.resize(role.offset + 1, -1);
        }
        tokens[role.offset] = t;
      }
    }
  }

  bool is_item(Token t) const {
    return g.token_roles[t].token_class == TokenClass::kItem;
  }

  void emit(Vertex u, Vertex v) {
    Token a = config[u], b = config[v];
    std::swap(config[u], config[v]);
    where[a] = v;
    where[b] = u;
    out.push_back(make_edge(u, v));
  }

  void walk(Token t, Vertex dest) {
    Vertex cur = where[t];
    while (cur != dest) {
      Vertex next = g.instance.tree.next_on_path(cur, dest);
      emit(cur, next);
      cur = next;
    }
  }

  void cross_pair(int slot_seg, int ord_seg, int slot, bool nook_swap) {
    int len = g.segments[slot_seg].length;
    if (!is_item(config[g.root()])) {
      throw std::logic_error("expected an item token at the root");
    }
    // The departing segment must sit packed against the root.
    for (int pos = 1; pos <= len; ++pos) {
      if (config[g.slot_vertex(slot, pos)] != seg_tokens[slot_seg][pos - 1]) {
        throw std::logic_error("departing segment is not packed against the root");
      }
    }
    // Item walk-through: the root item crosses the departing segment, ending
    // at distance len (the nook parent when this is a big segment).
    for (int pos = 1; pos <= len; ++pos) {
      emit(pos == 1 ? g.root() : g.slot_vertex(slot, pos - 1),
           g.slot_vertex(slot, pos));
    }
    if (nook_swap) {
      if (!is_item(config[g.nook(slot)])) {
        throw std::logic_error("nook does not hold an item token");
      }
      emit(g.nook_parent(slot), g.nook(slot));
    }
    // Departing segment slides to its final window, lead token first.
    for (int o = 0; o < len; ++o) walk(seg_tokens[slot_seg][o], target_of[seg_tokens[slot_seg][o]]);
    // Arriving segment follows, deepest-bound token first; its last token
    // pushes the item back to the root.
    for (int o = len - 1; o >= 0; --o) walk(seg_tokens[ord_seg][o], target_of[seg_tokens[ord_seg][o]]);
    if (!is_item(config[g.root()])) {
      throw std::logic_error("item token did not return to the root");
    }
  }

  SwapSequence run(const std::vector<bool>* chosen) {
    std::vector<int> y_id(g.params.n + 1, -1), x_id(g.params.n + 1, -1);
    std::vector<std::vector<int>> q_id(g.params.m + 1,
                                       std::vector<int>(g.params.n + 1, -1));
    std::vector<std::vector<int>> p_id(g.params.m + 1,
                                       std::vector<int>(g.params.n + 1, -1));
    for (size_t s = 0; s < g.segments.size(); ++s) {
      const Segment& seg = g.segments[s];
      switch (seg.family) {
        case SegmentFamily::kBigY: y_id[seg.j] = static_cast<int>(s); break;
        case SegmentFamily::kBigX: x_id[seg.j] = static_cast<int>(s); break;
        case SegmentFamily::kPadQ: q_id[seg.slot][seg.j] = static_cast<int>(s); break;
        case SegmentFamily::kPadP: p_id[seg.slot][seg.j] = static_cast<int>(s); break;
      }
    }
    for (int j = 1; j <= g.params.n; ++j) {
      int slot = g.sts.sequence[j - 1];
      cross_pair(y_id[j], x_id[j], slot, chosen && (*chosen)[j - 1]);
      if (g.params.k_prime > 0) {
        for (int i : padding_block_order(g.sts, j)) {
          cross_pair(q_id[i][j], p_id[i][j], i, false);
        }
      }
    }
    return SwapSequence{std::move(out)};
  }
};

}  // namespace

SwapSequence scaffold_solution(const GadgetInstance& g) {
  return WitnessBuilder(g).run(nullptr);
}

SwapSequence intended_solution(const GadgetInstance& g, const StarSTSSolution& sol) {
  if (static_cast<int>(sol.chosen.size()) != g.params.n) {
    throw std::invalid_argument("solution length does not match the instance");
  }
  if (!solution_realizes_target(g.sts, sol)) {
    throw std::invalid_argument("solution does not solve the star sts instance");
  }
  return WitnessBuilder(g).run(&sol.chosen);
}

SwapSequence intended_weighted_solution(const StarSTSInstance& sts,
                                        const StarSTSSolution& sol,
                                        const GadgetInstance& g) {
  if (sts.sequence != g.sts.sequence || sts.target != g.sts.target) {
    throw std::invalid_argument("gadget was built from a different instance");
  }
  return intended_solution(g, sol);
}

SwapSequence scaffold_unweighted(const GadgetInstance& g) {
  return scaffold_solution(g);
}

SwapSequence intended_unweighted(const GadgetInstance& g, const StarSTSInstance& sts,
                                 const StarSTSSolution& sol) {
  return intended_weighted_solution(sts, sol, g);
}

namespace {

using nlohmann::json;

const char* family_name(SegmentFamily f) {
  switch (f) {
    case SegmentFamily::kBigX: return "x";
    case SegmentFamily::kBigY: return "y";
    case SegmentFamily::kPadP: return "p";
    case SegmentFamily::kPadQ: return "q";
  }
  return "?";
}

}  // namespace

std::string to_json(const GadgetInstance& g) {
  json j = json::parse(to_json(g.instance));
  json vertex_roles = json::array();
  for (const VertexInfo& info : g.vertex_roles) {
    switch (info.role) {
      case VertexRole::kRoot:
        vertex_roles.push_back({{"role", "root"}});
        break;
      case VertexRole::kOrdering:
        vertex_roles.push_back({{"role", "ordering"}, {"pos", info.pos}});
        break;
      case VertexRole::kSlotPath:
        vertex_roles.push_back({{"role", "slot"}, {"slot", info.slot}, {"pos", info.pos}});
        break;
      case VertexRole::kNook:
        vertex_roles.push_back({{"role", "nook"}, {"slot", info.slot}});
        break;
    }
  }
  json token_roles = json::array();
  for (const TokenRole& role : g.token_roles) {
    if (role.token_class == TokenClass::kItem) {
      token_roles.push_back({{"class", "item"}, {"label", role.item_label}});
    } else {
      const Segment& seg = g.segments[role.segment_id];
      token_roles.push_back({{"class", role.token_class == TokenClass::kSlotToken
                                           ? "slot"
                                           : "non_slot"},
                             {"family", family_name(seg.family)},
                             {"j", seg.j},
                             {"slot", seg.slot},
                             {"offset", role.offset}});
    }
  }
  j["vertex_roles"] = vertex_roles;
  j["token_roles"] = token_roles;
  j["params"] = {{"m", g.params.m},       {"n", g.params.n},
                 {"k", g.params.k},       {"k_prime", g.params.k_prime},
                 {"H", g.params.H},       {"K", g.params.K},
                 {"weighted", g.params.weighted}};
  j["sts"] = json::parse(to_json(g.sts));
  return j.dump(2);
}

GadgetInstance parse_gadget_json(const std::string& text) {
  json j = json::parse(text);
  StarSTSInstance sts = parse_star_sts_json(j.at("sts").dump());
  json params = j.at("params");
  GadgetInstance rebuilt =
      params.at("weighted").get<bool>()
          ? build_weighted_instance(sts)
          : build_unweighted_instance(sts, params.at("k").get<int>(),
                                      params.at("k_prime").get<int>());
  SequentialInstance stored = parse_sequential_json(text);
  if (stored.tree.edges() != rebuilt.instance.tree.edges() ||
      stored.start != rebuilt.instance.start ||
      stored.target != rebuilt.instance.target ||
      stored.weights != rebuilt.instance.weights ||
      stored.budget != rebuilt.instance.budget) {
    throw std::invalid_argument("gadget file does not match its construction");
  }
  return rebuilt;
}

}  // namespace tokenswap
