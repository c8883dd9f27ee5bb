#include "discarr/rset.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace discarr;

namespace {

const std::vector<std::vector<int>> kCrapo = {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}};

// Brute force: every family of r distinct (k+1)-subsets of [n] that is a
// non-intersecting r-set covering [n], reduced to its sorted profile orbit.
std::set<std::vector<int>> brute_force_orbits(int r, int k, int n) {
  std::vector<Mask> subsets;
  for_each_combination(n, k + 1, [&](const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    subsets.push_back(m);
  });
  std::set<std::vector<int>> orbits;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(pick.size()) == r) {
      std::vector<std::vector<int>> sets;
      for (int s : pick) {
        std::vector<int> labels;
        for (int p : mask_elements(subsets[s])) labels.push_back(p + 1);
        sets.push_back(labels);
      }
      const RSet t = make_rset(n, k, sets);
      if (!is_r_set(t) || popcount(t.union_mask()) != n || classify(t) != RSetType::non_intersecting) return;
      orbits.insert(canonical_form(pair_profile(t)).tuple());
      return;
    }
    for (std::size_t s = start; s < subsets.size(); ++s) {
      // Prune: members must meet pairwise and no label may lie in three.
      bool ok = true;
      for (std::size_t x = 0; x < pick.size() && ok; ++x) {
        ok = (subsets[pick[x]] & subsets[s]) != 0;
        for (std::size_t y = x + 1; y < pick.size() && ok; ++y) ok = (subsets[pick[x]] & subsets[pick[y]] & subsets[s]) == 0;
      }
      if (!ok) continue;
      pick.push_back(static_cast<int>(s));
      self(self, s + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return orbits;
}

}  // namespace

TEST(IsRSet, Examples) {
  EXPECT_TRUE(is_r_set(make_rset(6, 2, kCrapo)));
  EXPECT_FALSE(is_r_set(make_rset(7, 2, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {5, 6, 7}})));
  EXPECT_TRUE(is_r_set(good_rs_partition(3, 2)));
  EXPECT_THROW(make_rset(6, 2, {{1, 2}}), InputError);
  EXPECT_THROW(make_rset(6, 2, {{1, 2, 9}}), InputError);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(make_rset(6, 2, kCrapo)), RSetType::non_intersecting);
  EXPECT_EQ(classify(good_rs_partition(4, 3)), RSetType::intersecting);
  EXPECT_EQ(classify(good_rs_partition(3, 2)), RSetType::trivial_intersecting_3);
  EXPECT_THROW(classify(make_rset(4, 2, {{1, 2, 3}, {2, 3, 4}})), InputError);
}

TEST(PairProfile, Examples) {
  EXPECT_EQ(pair_profile(make_rset(6, 2, kCrapo)).tuple(), (std::vector<int>{1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(pair_profile(good_rs_partition(3, 2)).tuple(), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(pair_profile(good_rs_partition(4, 3)).tuple(), (std::vector<int>{6, 6, 6, 6, 6, 6}));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_nonintersecting(4, 2, true).size(), 1u);
  EXPECT_EQ(enumerate_nonintersecting(5, 3, true).size(), 1u);
  EXPECT_EQ(enumerate_nonintersecting(5, 4, true).size(), 0u);
  EXPECT_EQ(enumerate_nonintersecting(4, 1, true).size(), 0u);
  EXPECT_EQ(enumerate_nonintersecting(4, 2, true).at(0).tuple(), (std::vector<int>{1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(enumerate_nonintersecting(3, 2, true), InputError);
}

TEST(Enumerate, EmptyBelowTheDimensionBound) {
  for (int r = 4; r <= 7; ++r)
    for (int k = 1; k < r - 2; ++k) EXPECT_TRUE(enumerate_nonintersecting(r, k, false).empty()) << r << "," << k;
}

TEST(Enumerate, MatchesBruteForceOrbits) {
  for (auto [r, k] : std::vector<std::pair<int, int>>{{4, 2}, {4, 3}, {4, 4}, {5, 3}}) {
    const int n = r * (k + 1) / 2;
    std::set<std::vector<int>> listed;
    for (const auto& p : enumerate_nonintersecting(r, k, true)) listed.insert(p.tuple());
    EXPECT_EQ(listed, brute_force_orbits(r, k, n)) << "r=" << r << " k=" << k;
  }
}

TEST(Enumerate, ProfilesMaterializeToNonIntersectingRSets) {
  for (int r = 4; r <= 6; ++r)
    for (int k = r - 2; k <= r + 2; ++k)
      for (const auto& p : enumerate_nonintersecting(r, k, true)) {
        EXPECT_EQ(canonical_form(p), p);
        const RSet t = materialize(p);
        EXPECT_TRUE(is_r_set(t));
        EXPECT_EQ(classify(t), RSetType::non_intersecting);
        EXPECT_EQ(2 * t.n, r * (k + 1));
        EXPECT_EQ(2 * popcount(t.union_mask()), r * (k + 1));
        EXPECT_EQ(2 * p.total(), r * (k + 1));
        EXPECT_EQ(pair_profile(t), p);
      }
}

TEST(Enumerate, UndedupedListIsClosedUnderRelabeling) {
  const auto all = enumerate_nonintersecting(4, 4, false);
  std::set<std::vector<int>> tuples;
  for (const auto& p : all) tuples.insert(p.tuple());
  for (const auto& p : all) {
    std::vector<int> perm = {0, 1, 2, 3};
    do {
      const auto q = p.relabeled(perm);
      if (q.at(1, 2) + q.at(1, 3) + q.at(1, 4) == 5) {
        EXPECT_TRUE(tuples.count(q.tuple()));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST(Materialize, Examples) {
  EXPECT_EQ(materialize(enumerate_nonintersecting(4, 2, true).at(0)).sets, kCrapo);
  PairProfile k3(4, 3);
  k3.set(2, 3, 2), k3.set(2, 4, 1), k3.set(3, 4, 1);
  k3.set(1, 2, 1), k3.set(1, 3, 1), k3.set(1, 4, 2);
  EXPECT_EQ(k3.tuple(), (std::vector<int>{1, 1, 2, 2, 1, 1}));
  const RSet t = materialize(k3);
  EXPECT_EQ(t.n, 8);
  EXPECT_EQ(t.sets, (std::vector<std::vector<int>>{{1, 2, 3, 4}, {1, 5, 6, 7}, {2, 5, 6, 8}, {3, 4, 7, 8}}));
  const RSet b10 = materialize(enumerate_nonintersecting(5, 3, true).at(0));
  EXPECT_EQ(b10.sets.at(0), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(b10.sets.at(1), (std::vector<int>{1, 5, 6, 7}));
  EXPECT_EQ(b10.sets.at(4), (std::vector<int>{4, 7, 9, 10}));
  PairProfile bad(4, 2);
  EXPECT_THROW(materialize(bad), InputError);
}

TEST(GoodRs, Examples) {
  const RSet falk = good_rs_partition(3, 2);
  EXPECT_EQ(falk.n, 6);
  EXPECT_EQ(falk.k, 3);
  for (const auto& L : falk.sets) EXPECT_EQ(L.size(), 4u);
  const RSet b12 = good_rs_partition(4, 3);
  EXPECT_EQ(b12.k, 8);
  EXPECT_EQ(b12.sets.at(0), (std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_THROW(good_rs_partition(4, 2), InputError);
  for (int r = 3; r <= 6; ++r)
    for (int s = r - 1; s <= r + 2; ++s) {
      const RSet t = good_rs_partition(r, s);
      EXPECT_TRUE(is_r_set(t));
      EXPECT_EQ(good_rs_block_size(t), s);
      if (r >= 4) {
        EXPECT_EQ(classify(t), RSetType::intersecting);
      }
    }
  EXPECT_FALSE(good_rs_block_size(make_rset(6, 2, kCrapo)));
}

TEST(LastEq, GoodRsPartitionsSatisfyIt) {
  for (int r = 3; r <= 6; ++r)
    for (int s = r - 1; s <= r + 2; ++s) EXPECT_TRUE(check_last_eq(nested_profile(good_rs_partition(r, s))));
}

TEST(LastEq, B12_8Evaluation) {
  const NestedProfile np = nested_profile(good_rs_partition(4, 3));
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) EXPECT_EQ(np.pair(i, j), 6);
  EXPECT_EQ(np.at(member_mask({1, 2, 3})), 3);
  const auto e = evaluate_last_eq(np);
  EXPECT_EQ(e.lhs, 18);
  EXPECT_EQ(e.pair_term, 36);
  EXPECT_EQ(e.higher_term, -18);  // triple and higher overlaps, net
  EXPECT_TRUE(e.holds());
}

TEST(LastEq, ReducesToPairSumForNonIntersecting) {
  for (const auto& p : enumerate_nonintersecting(5, 5, false)) {
    const NestedProfile np = nested_profile(materialize(p));
    EXPECT_TRUE(check_last_eq(np));
    EXPECT_EQ(evaluate_last_eq(np).higher_term, 0);
  }
}

TEST(LastEq, DetectsBrokenProfile) {
  NestedProfile np = nested_profile(good_rs_partition(4, 3));
  np.a[member_mask({2, 3})] += 1;
  EXPECT_FALSE(check_last_eq(np));
}

TEST(CompleteProfile, FillsFirstRow) {
  const NestedProfile full = nested_profile(good_rs_partition(4, 3));
  NestedProfile fixed = full;
  for (int j = 2; j <= 4; ++j) fixed.a.erase(member_mask({1, j}));
  const NestedProfile done = complete_profile(fixed);
  for (int j = 2; j <= 4; ++j) EXPECT_EQ(done.pair(1, j), 6);

  const NestedProfile falk = nested_profile(good_rs_partition(3, 2));
  NestedProfile f3{3, 3, {{member_mask({2, 3}), 2}}};
  const NestedProfile f3done = complete_profile(f3);
  EXPECT_EQ(f3done.pair(1, 2), 2);
  EXPECT_EQ(f3done.pair(1, 3), 2);
  EXPECT_EQ(f3done.a, falk.a);

  NestedProfile too_big{4, 2, {{member_mask({2, 3}), 3}, {member_mask({2, 4}), 1}, {member_mask({3, 4}), 1}}};
  EXPECT_THROW(complete_profile(too_big), InputError);
}

TEST(Monotonicity, ChainViolationsAreWarnings) {
  EXPECT_TRUE(monotonicity_warnings(nested_profile(good_rs_partition(4, 3))).empty());
  NestedProfile np = nested_profile(good_rs_partition(4, 3));
  np.a[member_mask({1, 2, 3})] = 6;
  EXPECT_FALSE(monotonicity_warnings(np).empty());
}

TEST(Pnk, Examples) {
  EXPECT_FALSE(pnk_member(kCrapo, 6, 2));
  EXPECT_TRUE(pnk_member({{1, 2, 3}}, 6, 2));
  EXPECT_TRUE(pnk_member({{1, 2, 3}, {4, 5, 6}}, 6, 2));
  EXPECT_THROW(pnk_member({{1, 2}}, 6, 2), InputError);
}

TEST(Pnk, CrapoFailsOnlyOnTheWholeFamily) {
  for (Mask I = 1; I < 16; ++I) {
    if (popcount(I) < 2) continue;
    std::vector<std::vector<int>> sub;
    for (int i : mask_elements(I)) sub.push_back(kCrapo[i]);
    std::set<int> u;
    for (const auto& s : sub) u.insert(s.begin(), s.end());
    const int bound = 2 + static_cast<int>(sub.size());
    EXPECT_EQ(pnk_member(sub, 6, 2), static_cast<int>(u.size()) > bound);
    EXPECT_EQ(pnk_member(sub, 6, 2), I != 15);
  }
}
