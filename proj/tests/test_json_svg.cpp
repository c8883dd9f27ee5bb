#include "discarr/fixtures.hpp"
#include "discarr/json_io.hpp"
#include "discarr/svg.hpp"

#include <gtest/gtest.h>

#include <regex>

using namespace discarr;

namespace {

Vector random_rationals(Sampler& rng, std::size_t len) {
  Vector v(len);
  for (auto& x : v) {
    x = Rational(static_cast<long>(rng.uniform(-1'000'000, 1'000'000)), static_cast<long>(rng.uniform(1, 999'999)));
    x.canonicalize();
  }
  return v;
}

std::string report_text(std::uint64_t seed) {
  const RSet t = materialize(enumerate_nonintersecting(4, 2, true).at(0));
  const FamilySample fs = sample_family(FamilyMode::nonint, t, 1, std::nullopt, seed);
  return dump(to_json(synthesize_arrangement(fs.family, t, seed + 1)));
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(to_json(Rational(-7, 3)), "-7/3");
  EXPECT_EQ(rational_from_json(Json("12/8")), Rational(3, 2));
  EXPECT_EQ(rational_from_json(Json(5)), 5);
  EXPECT_THROW(rational_from_json(Json(1.5)), InputError);
}

TEST(Json, ArrangementRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Sampler rng(seed);
    const std::size_t k = rng.uniform(1, 5), n = rng.uniform(1, 8);
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i) {
      Vector normal = random_rationals(rng, k);
      if (is_zero(normal)) normal[0] = 1;
      hs.push_back({normal, random_rationals(rng, 1)[0]});
    }
    const Arrangement a(k, hs);
    const std::string text = dump(to_json(a));
    EXPECT_EQ(arrangement_from_json(parse_json(text)), a);
    const Translation t{random_rationals(rng, n)};
    EXPECT_EQ(translation_from_json(parse_json(dump(to_json(t)))), t);
  }
}

TEST(Json, ReportRoundTripAndDeterminism) {
  const std::string a = report_text(31), b = report_text(31);
  EXPECT_EQ(a, b);
  const SynthesisReport rep = report_from_json(parse_json(a));
  EXPECT_EQ(dump(to_json(rep)), a);
  EXPECT_NE(report_text(32), a);
}

TEST(Json, FixtureRoundTrip) {
  for (const auto& name : fixture_names()) {
    const Fixture f = fixture(name);
    EXPECT_EQ(arrangement_from_json(parse_json(dump(to_json(f.arrangement)))), f.arrangement);
    EXPECT_EQ(rset_from_json(parse_json(dump(to_json(f.rset)))), f.rset);
    const Verdict v = verdict_from_json(parse_json(dump(to_json(f.expected))));
    EXPECT_EQ(v.stratum_rank, f.expected.stratum_rank);
    EXPECT_EQ(v.transcript, f.expected.transcript);
  }
}

TEST(Json, RejectsBadInput) {
  EXPECT_THROW(parse_json("{\"k\": 2,"), InputError);
  EXPECT_THROW(arrangement_from_json(parse_json("{\"hyperplanes\": []}")), InputError);
  EXPECT_THROW(arrangement_from_json(parse_json("{\"k\": 2, \"hyperplanes\": [{\"normal\": [\"1\"]}]}")), InputError);
  EXPECT_THROW(rset_from_json(parse_json("{\"n\": 3, \"k\": 1, \"sets\": [[1, 2, 3]]}")), InputError);
  EXPECT_THROW(family_from_json(parse_json("{\"r\": 3, \"k\": 1, \"d\": 2, \"sets\": [[[\"1\"], [\"2\"]]]}")),
               InputError);
}

TEST(Svg, CrapoTranslationMarksFourPoints) {
  const Fixture crapo = crapo_fixture();
  const Arrangement moved = translate(crapo.arrangement, *crapo.translation);
  const std::string svg = render_svg(moved);
  EXPECT_EQ(count(svg, "<line"), 6u);
  EXPECT_EQ(count(svg, "<circle"), 4u);
  for (int p = 1; p <= 6; ++p) EXPECT_NE(svg.find(">H" + std::to_string(p) + "<"), std::string::npos);
  EXPECT_EQ(svg, render_svg(moved));
  const auto pts = multiple_points(moved, 3);
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[0].labels, (std::vector<int>{1, 2, 3}));
}

TEST(Svg, CentralArrangementSharesOnePoint) {
  const Fixture crapo = crapo_fixture();
  const auto pts = multiple_points(crapo.arrangement, 2);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].point, (Vector{0, 0}));
  EXPECT_EQ(pts[0].labels.size(), 6u);
  EXPECT_EQ(count(render_svg(crapo.arrangement), "<circle"), 1u);
}

TEST(Svg, OnlyPlanarArrangements) {
  EXPECT_THROW(render_svg(Arrangement::central(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), InputError);
}
