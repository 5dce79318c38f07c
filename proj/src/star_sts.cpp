#include "tokenswap/star_sts.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace tokenswap {

void StarSTSInstance::validate() const {
  if (m < 1) throw std::invalid_argument("star needs at least one leaf");
  for (int s : sequence) {
    if (s < 1 || s > m) {
      throw std::invalid_argument("sequence element " + std::to_string(s) +
                                  " outside 1.." + std::to_string(m));
    }
  }
  check_configuration(target, m + 1, "star sts target");
}

bool StarSTSInstance::is_normalized() const {
  std::vector<char> seen(m + 1, 0);
  for (size_t j = 0; j < sequence.size(); ++j) {
    if (j > 0 && sequence[j] == sequence[j - 1]) return false;
    seen[sequence[j]] = 1;
  }
  for (int i = 1; i <= m; ++i) {
    if (!seen[i]) return false;
  }
  return true;
}

std::vector<int> apply_subsequence(const StarSTSInstance& instance,
                                   const StarSTSSolution& solution) {
  instance.validate();
  if (solution.chosen.size() != instance.sequence.size()) {
    throw std::invalid_argument("solution length does not match sequence length");
  }
  std::vector<int> token_at(instance.m + 1);
  for (int v = 0; v <= instance.m; ++v) token_at[v] = v;
  for (size_t j = 0; j < instance.sequence.size(); ++j) {
    if (solution.chosen[j]) std::swap(token_at[0], token_at[instance.sequence[j]]);
  }
  return token_at;
}

bool solution_realizes_target(const StarSTSInstance& instance,
                              const StarSTSSolution& solution) {
  std::vector<int> token_at = apply_subsequence(instance, solution);
  for (int t = 0; t <= instance.m; ++t) {
    if (token_at[instance.target[t]] != t) return false;
  }
  return true;
}

namespace {

// DFS over chosen-prefixes in lexicographic order (false branch first), with
// an incrementally maintained count of misplaced tokens so leaves test in
// O(1). The first solution found is the lexicographically smallest.
struct StarSTSSearch {
  const StarSTSInstance& instance;
  std::vector<int> token_at;  // vertex -> token
  int misplaced = 0;          // tokens not on their target vertex
  std::vector<bool> chosen;

  explicit StarSTSSearch(const StarSTSInstance& inst) : instance(inst) {
    token_at.resize(inst.m + 1);
    for (int v = 0; v <= inst.m; ++v) token_at[v] = v;
    for (int t = 0; t <= inst.m; ++t) {
      if (inst.target[t] != t) ++misplaced;
    }
    chosen.assign(inst.sequence.size(), false);
  }

  bool dfs(size_t j) {
    if (j == instance.sequence.size()) return misplaced == 0;
    if (dfs(j + 1)) return true;
    int leaf = instance.sequence[j];
    apply(leaf);
    chosen[j] = true;
    if (dfs(j + 1)) return true;
    chosen[j] = false;
    apply(leaf);  // undo: a center swap is an involution
    return false;
  }

  void apply(int leaf) {
    int a = token_at[0], b = token_at[leaf];
    misplaced -= (0 != instance.target[a]) + (leaf != instance.target[b]);
    token_at[0] = b;
    token_at[leaf] = a;
    misplaced += (leaf != instance.target[a]) + (0 != instance.target[b]);
  }
};

}  // namespace

std::optional<StarSTSSolution> solve_star_sts(const StarSTSInstance& instance,
                                              int cap) {
  instance.validate();
  if (instance.n() > cap) {
    throw CapacityError("star sts sequence length " + std::to_string(instance.n()) +
                        " exceeds the enumeration cap " + std::to_string(cap));
  }
  StarSTSSearch search(instance);
  if (!search.dfs(0)) return std::nullopt;
  return StarSTSSolution{search.chosen};
}

StarSTSInstance normalize_star_sts(const StarSTSInstance& instance) {
  instance.validate();
  for (size_t j = 1; j < instance.sequence.size(); ++j) {
    if (instance.sequence[j] == instance.sequence[j - 1]) {
      throw std::invalid_argument("sequence repeats slot " +
                                  std::to_string(instance.sequence[j]) +
                                  " twice in a row at position " + std::to_string(j));
    }
  }
  std::vector<char> used(instance.m + 1, 0);
  for (int s : instance.sequence) used[s] = 1;
  // Unused slots can only be deleted when their tokens stay put.
  for (int i = 1; i <= instance.m; ++i) {
    if (!used[i] && instance.target[i] != i) {
      throw std::invalid_argument("slot " + std::to_string(i) +
                                  " never occurs in the sequence but its token must move");
    }
  }
  std::vector<int> relabel(instance.m + 1, -1);
  relabel[0] = 0;
  int next = 0;
  for (int i = 1; i <= instance.m; ++i) {
    if (used[i]) relabel[i] = ++next;
  }
  StarSTSInstance result;
  result.m = next;
  for (int s : instance.sequence) result.sequence.push_back(relabel[s]);
  result.target.assign(next + 1, -1);
  for (int t = 0; t <= instance.m; ++t) {
    if (relabel[t] >= 0) result.target[relabel[t]] = relabel[instance.target[t]];
  }
  result.validate();
  return result;
}

void Wppsg2Instance::validate() const {
  if (m < 1) throw std::invalid_argument("wppsg2 needs at least one element");
  for (auto [a, b] : swaps) {
    if (a < 1 || a > m || b < 1 || b > m || a == b) {
      throw std::invalid_argument("swap (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") outside 1.." +
                                  std::to_string(m));
    }
  }
  if (static_cast<int>(target.size()) != m) {
    throw std::invalid_argument("wppsg2 target must cover 1..m");
  }
  std::vector<char> seen(m + 1, 0);
  for (int t : target) {
    if (t < 1 || t > m || seen[t]) throw std::invalid_argument("wppsg2 target is not a permutation");
    seen[t] = 1;
  }
}

bool solve_wppsg2_brute_force(const Wppsg2Instance& instance, int cap) {
  instance.validate();
  int n = static_cast<int>(instance.swaps.size());
  if (n > cap) {
    throw CapacityError("wppsg2 swap count exceeds the enumeration cap");
  }
  std::vector<int> where(instance.m + 1);
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    for (int i = 1; i <= instance.m; ++i) where[i] = i;
    for (int j = 0; j < n; ++j) {
      if (mask & (1ULL << j)) {
        auto [a, b] = instance.swaps[j];
        // Exchange the tokens at vertices a and b.
        for (int i = 1; i <= instance.m; ++i) {
          if (where[i] == a) {
            where[i] = b;
          } else if (where[i] == b) {
            where[i] = a;
          }
        }
      }
    }
    bool ok = true;
    for (int i = 1; i <= instance.m && ok; ++i) ok = where[i] == instance.target[i - 1];
    if (ok) return true;
  }
  return false;
}

StarSTSInstance reduce_wppsg2_to_star_sts(const Wppsg2Instance& instance) {
  instance.validate();
  int m = instance.m;
  int n = static_cast<int>(instance.swaps.size());
  StarSTSInstance result;
  result.m = m + 2 * n;
  result.target.assign(result.m + 1, -1);
  result.target[0] = 0;
  for (int i = 1; i <= m; ++i) result.target[i] = instance.target[i - 1];
  for (int i = 1; i <= n; ++i) {
    int s_in = m + 2 * i - 1;
    int s_out = m + 2 * i;
    auto [a, b] = instance.swaps[i - 1];
    result.sequence.insert(result.sequence.end(), {s_in, a, b, a, s_out, s_in});
    result.target[s_in] = s_out;
    result.target[s_out] = s_in;
  }
  result.validate();
  return result;
}

namespace {
using nlohmann::json;
}

StarSTSInstance parse_star_sts_json(const std::string& text) {
  json j = json::parse(text);
  StarSTSInstance instance;
  instance.m = j.at("m").get<int>();
  instance.sequence = j.at("sequence").get<std::vector<int>>();
  instance.target = j.at("target").get<std::vector<int>>();
  instance.validate();
  return instance;
}

std::string to_json(const StarSTSInstance& instance) {
  return json{{"m", instance.m}, {"sequence", instance.sequence}, {"target", instance.target}}
      .dump(2);
}

Wppsg2Instance parse_wppsg2_json(const std::string& text) {
  json j = json::parse(text);
  Wppsg2Instance instance;
  instance.m = j.at("m").get<int>();
  for (const auto& e : j.at("swaps")) {
    instance.swaps.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  instance.target = j.at("target").get<std::vector<int>>();
  instance.validate();
  return instance;
}

std::string to_json(const Wppsg2Instance& instance) {
  json swaps = json::array();
  for (auto [a, b] : instance.swaps) swaps.push_back({a, b});
  return json{{"m", instance.m}, {"swaps", swaps}, {"target", instance.target}}.dump(2);
}

std::string to_json(const StarSTSSolution& solution) {
  json chosen = json::array();
  for (bool c : solution.chosen) chosen.push_back(c);
  return json{{"chosen", chosen}}.dump(2);
}

}  // namespace tokenswap
