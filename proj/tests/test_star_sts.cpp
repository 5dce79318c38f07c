#include <algorithm>
#include <random>

#include "doctest.h"
#include "tokenswap/star_sts.hpp"

using namespace tokenswap;

namespace {

// All normalized sequences of length n over slots 1..m (every slot appears,
// no immediate repeats).
void enumerate_sequences(int m, int n, std::vector<std::vector<int>>& out) {
  std::vector<int> seq;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == n) {
      std::vector<char> seen(m + 1, 0);
      for (int s : seq) seen[s] = 1;
      for (int i = 1; i <= m; ++i) {
        if (!seen[i]) return;
      }
      out.push_back(seq);
      return;
    }
    for (int s = 1; s <= m; ++s) {
      if (!seq.empty() && seq.back() == s) continue;
      seq.push_back(s);
      self(self);
      seq.pop_back();
    }
  };
  rec(rec);
}

std::vector<std::vector<int>> all_permutations(int count) {
  std::vector<int> perm(count);
  for (int i = 0; i < count; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("apply_subsequence") {
  StarSTSInstance sts{2, {1, 2, 1}, {0, 1, 2}};
  SUBCASE("all-false is the identity") {
    CHECK(apply_subsequence(sts, StarSTSSolution{{false, false, false}}) ==
          std::vector<int>{0, 1, 2});
  }
  SUBCASE("all-true hand simulation") {
    CHECK(apply_subsequence(sts, StarSTSSolution{{true, true, true}}) ==
          std::vector<int>{0, 2, 1});
  }
  SUBCASE("single exchange") {
    StarSTSInstance one{2, {1}, {0, 1, 2}};
    CHECK(apply_subsequence(one, StarSTSSolution{{true}}) == std::vector<int>{1, 0, 2});
  }
}

TEST_CASE("solve_star_sts") {
  SUBCASE("transposing 1 and 2 needs the third swap") {
    StarSTSInstance sts{2, {1, 2}, {0, 2, 1}};
    CHECK_FALSE(solve_star_sts(sts).has_value());
    sts.sequence = {1, 2, 1};
    auto sol = solve_star_sts(sts);
    REQUIRE(sol.has_value());
    CHECK(sol->chosen == std::vector<bool>{true, true, true});
  }
  SUBCASE("identity target accepts the all-false vector") {
    StarSTSInstance sts{2, {1, 2}, {0, 1, 2}};
    auto sol = solve_star_sts(sts);
    REQUIRE(sol.has_value());
    CHECK(sol->chosen == std::vector<bool>{false, false});
  }
  SUBCASE("witness is the lexicographically smallest") {
    // Token 1 to the center and back: [1,...,1] works, but so do longer
    // combinations; the smallest prefix of trues must win.
    StarSTSInstance sts{2, {1, 2, 1, 2}, {0, 1, 2}};
    auto sol = solve_star_sts(sts);
    REQUIRE(sol.has_value());
    CHECK(sol->chosen == std::vector<bool>{false, false, false, false});
  }
  SUBCASE("cap raises a capacity error") {
    StarSTSInstance sts{1, {1, 1, 1}, {0, 1}};
    CHECK_THROWS_AS(solve_star_sts(sts, 2), CapacityError);
  }
  SUBCASE("solver agrees with direct enumeration on m,n <= 3") {
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        std::vector<std::vector<int>> sequences;
        enumerate_sequences(m, n, sequences);
        for (const auto& seq : sequences) {
          for (const auto& target : all_permutations(m + 1)) {
            StarSTSInstance sts{m, seq, target};
            bool found = false;
            for (unsigned mask = 0; mask < (1u << n) && !found; ++mask) {
              StarSTSSolution sol;
              sol.chosen.assign(n, false);
              for (int j = 0; j < n; ++j) sol.chosen[j] = (mask >> j) & 1;
              found = solution_realizes_target(sts, sol);
            }
            CHECK(solve_star_sts(sts).has_value() == found);
          }
        }
      }
    }
  }
}

TEST_CASE("normalize_star_sts") {
  SUBCASE("drops unused slots and relabels") {
    StarSTSInstance sts{3, {1, 3, 1}, {0, 1, 2, 3}};
    StarSTSInstance normalized = normalize_star_sts(sts);
    CHECK(normalized.m == 2);
    CHECK(normalized.sequence == std::vector<int>{1, 2, 1});
    CHECK(normalized.target == std::vector<int>{0, 1, 2});
    CHECK(normalized.is_normalized());
  }
  SUBCASE("rejects adjacent duplicate slots") {
    StarSTSInstance sts{2, {1, 1, 2}, {0, 1, 2}};
    CHECK_THROWS_WITH_AS(normalize_star_sts(sts), doctest::Contains("twice in a row"),
                         std::invalid_argument);
  }
  SUBCASE("rejects an unused slot whose token must move") {
    StarSTSInstance sts{2, {1}, {0, 2, 1}};
    CHECK_THROWS_AS(normalize_star_sts(sts), std::invalid_argument);
  }
}

TEST_CASE("wppsg2 reduction") {
  SUBCASE("one swap gives 4 leaves and a 6-element sequence") {
    Wppsg2Instance inst{2, {{1, 2}}, {2, 1}};
    StarSTSInstance sts = reduce_wppsg2_to_star_sts(inst);
    CHECK(sts.m == 4);
    CHECK(sts.sequence == std::vector<int>{3, 1, 2, 1, 4, 3});
    CHECK(sts.target == std::vector<int>{0, 2, 1, 4, 3});
    SUBCASE("yes via choosing all six") {
      auto sol = solve_star_sts(sts);
      REQUIRE(sol.has_value());
      CHECK(solution_realizes_target(sts, *sol));
    }
  }
  SUBCASE("identity target chooses only the in/out block") {
    Wppsg2Instance inst{2, {{1, 2}}, {1, 2}};
    StarSTSInstance sts = reduce_wppsg2_to_star_sts(inst);
    auto sol = solve_star_sts(sts);
    REQUIRE(sol.has_value());
    CHECK(sol->chosen == std::vector<bool>{true, false, false, false, true, true});
  }
  SUBCASE("per-block choice over the middle is all-three or none") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      int m = 2 + static_cast<int>(rng() % 2);
      int n = 1 + static_cast<int>(rng() % 3);
      Wppsg2Instance inst;
      inst.m = m;
      for (int i = 0; i < n; ++i) {
        int a = 1 + static_cast<int>(rng() % m);
        int b = 1 + static_cast<int>(rng() % m);
        while (b == a) b = 1 + static_cast<int>(rng() % m);
        inst.swaps.emplace_back(a, b);
      }
      inst.target.resize(m);
      for (int i = 0; i < m; ++i) inst.target[i] = i + 1;
      std::shuffle(inst.target.begin(), inst.target.end(), rng);
      StarSTSInstance sts = reduce_wppsg2_to_star_sts(inst);
      auto sol = solve_star_sts(sts);
      if (!sol) continue;
      for (int i = 0; i < n; ++i) {
        bool a1 = sol->chosen[6 * i + 1];
        bool b1 = sol->chosen[6 * i + 2];
        bool a2 = sol->chosen[6 * i + 3];
        bool all = a1 && b1 && a2;
        bool none = !a1 && !b1 && !a2;
        CHECK((all || none));
      }
    }
  }
}
