#include "discarr/discriminantal.hpp"
#include "discarr/fixtures.hpp"

#include <gtest/gtest.h>

using namespace discarr;

namespace {

Arrangement random_generic(Sampler& rng, std::size_t n, std::size_t k, std::int64_t box = 100) {
  for (;;) {
    std::vector<Vector> normals;
    bool zero = false;
    for (std::size_t i = 0; i < n; ++i) {
      normals.push_back(rng.integer_vector(k, box));
      zero = zero || is_zero(normals.back());
    }
    if (zero) continue;
    Arrangement a = Arrangement::central(k, normals);
    if (is_generic(a)) return a;
  }
}

const RSet& crapo_set() {
  static const RSet t = make_rset(6, 2, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
  return t;
}

// Rank through configurations instead of normals. Put P_1 = 0 and unknowns
// P_2..P_r; label p shared by members i < j forces alpha_p . (P_j - P_i) = 0.
// Configurations map injectively onto translations in ∩ D_{L_i} (up to the k
// central directions and free coordinates outside the union), so
// rank = n - k - dim ker M - (n - |union|).
std::size_t rank_by_configurations(const Arrangement& a, const RSet& t) {
  const int r = t.r(), k = static_cast<int>(a.k()), n = static_cast<int>(a.n());
  std::vector<Vector> rows;
  for (int p = 1; p <= n; ++p) {
    std::vector<int> ms;
    for (int i = 0; i < r; ++i)
      if (t.mask(i) >> (p - 1) & 1) ms.push_back(i + 1);
    for (std::size_t j = 1; j < ms.size(); ++j) {
      Vector row((r - 1) * k);
      for (int c = 0; c < k; ++c) {
        if (ms[j] != 1) row[(ms[j] - 2) * k + c] += a.at(p).normal[c];
        if (ms[0] != 1) row[(ms[0] - 2) * k + c] -= a.at(p).normal[c];
      }
      rows.push_back(row);
    }
  }
  const std::size_t ker = (r - 1) * k - rank(Matrix::from_rows(rows, (r - 1) * k));
  return n - k - ker - (n - popcount(t.union_mask()));
}

// Definition of r-simplicity taken literally: every proper I with |I| >= 2 and
// every S inside the union of I with |S| > k+1, compared by canonical spans.
bool r_simple_by_definition(const Arrangement& a, const RSet& t) {
  const int r = t.r(), k = static_cast<int>(a.k()), n = static_cast<int>(a.n());
  for (Mask I = 1; I < (Mask{1} << r) - 1; ++I) {
    if (popcount(I) < 2) continue;
    std::vector<Vector> rows;
    Mask u = 0;
    for (int i : mask_elements(I)) {
      rows.push_back(dl_normal(a, t.sets[i]).nu);
      u |= t.mask(i);
    }
    const Subspace span_I = Subspace::span(n, rows);
    for (Mask S = u;; S = (S - 1) & u) {
      if (popcount(S) > k + 1 && stratum_span(a, S) == span_I) return false;
      if (S == 0) break;
    }
  }
  return true;
}

}  // namespace

TEST(DlNormal, HandComputedCofactors) {
  const Arrangement a = Arrangement::central(2, {{1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(dl_normal(a, {1, 2, 3}).nu, (Vector{1, 1, -1}));
}

TEST(DlNormal, BraidArrangementForK1) {
  const Arrangement a = Arrangement::central(1, {{1}, {1}, {1}, {1}});
  const auto nu = dl_normal(a, {2, 4}).nu;
  EXPECT_EQ(Subspace::span(4, {nu}), Subspace::span(4, {{0, 1, 0, -1}}));
  EXPECT_EQ(build_discriminantal(a).size(), 6u);
}

TEST(DlNormal, VanishesExactlyOnConcurrentTranslations) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Sampler rng(seed);
    const std::size_t k = rng.uniform(1, 4);
    const Arrangement a = random_generic(rng, k + 3, k);
    std::vector<int> L;
    for (std::size_t p = 1; p <= k + 1; ++p) L.push_back(static_cast<int>(p) + 1);
    const auto dn = dl_normal(a, L);
    for (std::size_t p = 1; p <= a.n(); ++p)
      EXPECT_EQ(sgn(dn.nu[p - 1]) != 0, std::find(L.begin(), L.end(), static_cast<int>(p)) != L.end());

    // Move L's hyperplanes through a chosen point: nu . t = 0.
    const Vector P = rng.integer_vector(k, 20);
    Translation t{rng.integer_vector(a.n(), 20)};
    for (int p : L) t.t[p - 1] = dot(a.at(p).normal, P);
    EXPECT_EQ(dot(dn.nu, t.t), 0);
    const auto cp = common_point(translate(a, t), L);
    ASSERT_EQ(cp.kind, Incidence::point);
    EXPECT_EQ(cp.point, P);

    // A random translation: concurrency and nu . t = 0 agree.
    const Translation u{rng.integer_vector(a.n(), 3)};
    EXPECT_EQ(dot(dn.nu, u.t) == 0, common_point(translate(a, u), L).kind == Incidence::point);
  }
}

TEST(DlNormal, RejectsNonGeneric) {
  const Arrangement a = Arrangement::central(2, {{1, 0}, {2, 0}, {1, 1}});
  EXPECT_THROW(dl_normal(a, {1, 2, 3}), NonGenericError);
  EXPECT_THROW(dl_normal(a, {1, 2}), InputError);
}

TEST(BuildDiscriminantal, CountsAndOrder) {
  Sampler rng(1);
  const auto b62 = build_discriminantal(random_generic(rng, 6, 2));
  EXPECT_EQ(b62.size(), 20u);
  EXPECT_EQ(b62.front().L, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(b62.back().L, (std::vector<int>{4, 5, 6}));
  EXPECT_THROW(build_discriminantal(random_generic(rng, 6, 2), 10), BudgetExhausted);
}

TEST(StratumRank, TransversalForRandomArrangements) {
  const RSet b10 = materialize(enumerate_nonintersecting(5, 3, true).at(0));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Sampler rng(seed);
    EXPECT_EQ(stratum_rank(random_generic(rng, 6, 2), crapo_set()), 4u);
    EXPECT_EQ(stratum_rank(random_generic(rng, 10, 3), b10), 5u);
  }
  Sampler rng(3);
  EXPECT_EQ(stratum_rank(random_generic(rng, 6, 2), make_rset(6, 2, {{1, 2, 3}})), 1u);
}

TEST(StratumRank, AgreesWithConfigurationCount) {
  const Fixture crapo = crapo_fixture();
  EXPECT_EQ(rank_by_configurations(crapo.arrangement, crapo.rset), 3u);
  EXPECT_EQ(stratum_rank(crapo.arrangement, crapo.rset), 3u);
  const RSet b10 = materialize(enumerate_nonintersecting(5, 3, true).at(0));
  const RSet b12 = good_rs_partition(4, 3);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Sampler rng(seed + 100);
    const Arrangement a6 = random_generic(rng, 6, 2), a10 = random_generic(rng, 10, 3);
    EXPECT_EQ(rank_by_configurations(a6, crapo_set()), stratum_rank(a6, crapo_set()));
    EXPECT_EQ(rank_by_configurations(a10, b10), stratum_rank(a10, b10));
  }
  Sampler rng(7);
  const Arrangement a12 = random_generic(rng, 12, 8, 20);
  EXPECT_EQ(rank_by_configurations(a12, b12), stratum_rank(a12, b12));
}

TEST(RSimple, Examples) {
  Sampler rng(21);
  const RSet b10 = materialize(enumerate_nonintersecting(5, 3, true).at(0));
  const Arrangement a10 = random_generic(rng, 10, 3);
  EXPECT_TRUE(is_r_simple(a10, b10));
  EXPECT_TRUE(r_simple_by_definition(a10, b10));

  // L_1 = {1,2,3} and L_2 = {1,2,5} share two labels, so D_{L_1} ∩ D_{L_2}
  // is D_{{1,2,3,5}}.
  const RSet t = make_rset(5, 2, {{1, 2, 3}, {1, 2, 5}, {3, 4, 5}, {1, 3, 4}, {2, 4, 5}});
  ASSERT_TRUE(is_r_set(t));
  const Arrangement a5 = random_generic(rng, 5, 2);
  EXPECT_FALSE(is_r_simple(a5, t));
  EXPECT_FALSE(r_simple_by_definition(a5, t));
  EXPECT_EQ(stratum_span(a5, 0b10111), Subspace::span(5, {dl_normal(a5, {1, 2, 3}).nu, dl_normal(a5, {1, 2, 5}).nu}));

  const RSet pair = make_rset(4, 2, {{1, 2, 3}, {2, 3, 4}});
  EXPECT_TRUE(is_r_simple(random_generic(rng, 4, 2), pair));
}

TEST(RSimple, ScanAgreesWithDefinition) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Sampler rng(seed + 40);
    const Arrangement a = random_generic(rng, 6, 2);
    EXPECT_EQ(is_r_simple(a, crapo_set()), r_simple_by_definition(a, crapo_set()));
  }
  const Fixture crapo = crapo_fixture();
  EXPECT_TRUE(r_simple_by_definition(crapo.arrangement, crapo.rset));
  const Fixture falk = falk_3s2_fixture();
  EXPECT_EQ(is_r_simple(falk.arrangement, falk.rset), r_simple_by_definition(falk.arrangement, falk.rset));
}

TEST(Verdict, CrapoAndRandom) {
  const Fixture crapo = crapo_fixture();
  const Verdict v = verdict(crapo.arrangement, crapo.rset);
  EXPECT_EQ(v.stratum_rank, 3u);
  EXPECT_EQ(v.multiplicity, 4u);
  EXPECT_TRUE(v.r_simple);
  EXPECT_TRUE(v.non_very_generic);
  EXPECT_FALSE(v.transcript.empty());

  Sampler rng(8);
  const Verdict w = verdict(random_generic(rng, 6, 2), crapo_set());
  EXPECT_EQ(w.stratum_rank, 4u);
  EXPECT_FALSE(w.non_very_generic);
  EXPECT_EQ(w.non_very_generic, w.r_simple && w.stratum_rank < w.multiplicity);
}

TEST(Verdict, OffsetsDoNotMatter) {
  const Fixture crapo = crapo_fixture();
  const Verdict v = verdict(crapo.arrangement, crapo.rset);
  for (int scale : {-3, 2, 7}) {
    std::vector<Hyperplane> hs = crapo.arrangement.hyperplanes();
    for (std::size_t i = 0; i < hs.size(); ++i) hs[i].offset = Rational(scale * static_cast<int>(i + 1));
    const Verdict w = verdict(Arrangement(2, hs), crapo.rset);
    EXPECT_EQ(w.stratum_rank, v.stratum_rank);
    EXPECT_EQ(w.r_simple, v.r_simple);
    EXPECT_EQ(w.non_very_generic, v.non_very_generic);
  }
}

TEST(Pnk, PassingFamiliesAreTransversal) {
  // Pairs of (k+1)-sets sharing at most k-1 labels pass the union bound.
  const RSet t = make_rset(6, 2, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});
  ASSERT_TRUE(pnk_member(t.sets, 6, 2));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Sampler rng(seed + 300);
    EXPECT_EQ(stratum_rank(random_generic(rng, 6, 2), t), 3u);
  }
}

TEST(KTSpace, DimensionIsComplementOfRank) {
  const Fixture crapo = crapo_fixture();
  EXPECT_EQ(kt_translation_space(crapo.arrangement, crapo.rset).dim(), 3u);
  Sampler rng(12);
  const Arrangement a = random_generic(rng, 6, 2);
  EXPECT_EQ(kt_translation_space(a, crapo_set()).dim(), 2u);
  EXPECT_EQ(kt_translation_space(a, RSet{6, 2, {}}).dim(), 6u);
}

TEST(KT, CrapoTranslation) {
  const Fixture crapo = crapo_fixture();
  const KTCheck c = check_kt_translation(crapo.arrangement, crapo.rset, *crapo.translation);
  ASSERT_TRUE(c.ok) << c.reason;
  EXPECT_EQ(c.points, (std::vector<Vector>{{0, 0}, {4, 0}, {3, 4}, {1, 3}}));
  EXPECT_FALSE(check_kt_translation(crapo.arrangement, crapo.rset, {Vector(6)}).ok);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const KTSearch s = find_kt_translation(crapo.arrangement, crapo.rset, seed);
    ASSERT_TRUE(s.translation);
    const Arrangement moved = translate(crapo.arrangement, *s.translation);
    for (const auto& L : crapo.rset.sets) {
      const auto cp = common_point(moved, L);
      ASSERT_EQ(cp.kind, Incidence::point);
      EXPECT_EQ(multiplicity_at(moved, cp.point), 3u);
    }
  }
}

TEST(KT, TransversalCaseWithRoomFindsDistinctPoints) {
  const RSet b10 = materialize(enumerate_nonintersecting(5, 3, true).at(0));
  Sampler rng(77);
  const Arrangement a = random_generic(rng, 10, 3);
  const KTSearch s = find_kt_translation(a, b10, 5);
  ASSERT_TRUE(s.translation) << s.last_reason;
  const KTCheck c = check_kt_translation(a, b10, *s.translation);
  for (std::size_t i = 0; i < c.points.size(); ++i)
    for (std::size_t j = i + 1; j < c.points.size(); ++j) EXPECT_NE(c.points[i], c.points[j]);
}
