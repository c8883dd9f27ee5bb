#pragma once

// Named example instances. The Crapo configuration is written out by hand;
// the others are produced by the construction pipeline from fixed seeds.

#include "discarr/nvg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace discarr {

struct Fixture {
  std::string name;
  Arrangement arrangement;
  RSet rset;
  std::optional<Translation> translation;  // a K_T-translation when one is known
  Verdict expected;
};

/// Six lines through the origin of Q^2. Translating by t moves the four
/// triples {1,2,3}, {1,4,5}, {2,4,6}, {3,5,6} onto the vertices (0,0), (4,0),
/// (3,4), (1,3) of a quadrilateral; every line is a side or a diagonal.
inline Fixture crapo_fixture() {
  const std::vector<Vector> normals = {{0, 1}, {4, -3}, {3, -1}, {4, 1}, {1, 1}, {1, -2}};
  Arrangement a = Arrangement::central(2, normals);
  RSet t = make_rset(6, 2, {{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}});
  Fixture f{"crapo", a, t, Translation{{0, 0, 0, 16, 4, -5}}, verdict(a, t)};
  return f;
}

inline constexpr std::uint64_t kFixtureSeed = 2024;

inline Fixture constructed_fixture(const std::string& name, FamilyMode mode, const RSet& t, int d,
                                   std::optional<std::vector<int>> dims) {
  const FamilySample fs = sample_family(mode, t, d, std::move(dims), kFixtureSeed);
  SynthesisReport rep = synthesize_arrangement(fs.family, t, kFixtureSeed + 1);
  Fixture f{name, rep.arrangement, t, std::nullopt, rep.verdict};
  const KTSearch kt = find_kt_translation(rep.arrangement, t, kFixtureSeed + 2);
  f.translation = kt.translation;
  return f;
}

/// All-ones non-intersecting 5-set of 10 planes in Q^3, three independent
/// vector sets.
inline Fixture b10_3_fixture() {
  const auto profiles = enumerate_nonintersecting(5, 3, true);
  return constructed_fixture("b10_3", FamilyMode::nonint, materialize(profiles.at(0)), 3, std::nullopt);
}

/// Good rs-partition r=4, s=3: 12 hyperplanes in Q^8, two vector sets with
/// d_{1,i} = 2.
inline Fixture b12_8_fixture() {
  return constructed_fixture("b12_8", FamilyMode::goodrs, good_rs_partition(4, 3), 2, std::vector<int>{2, 2, 2});
}

/// Good rs-partition r=3, s=2: 6 planes in Q^3, one vector set.
inline Fixture falk_3s2_fixture() {
  return constructed_fixture("falk_3s2", FamilyMode::goodrs, good_rs_partition(3, 2), 1, std::nullopt);
}

inline std::vector<std::string> fixture_names() { return {"crapo", "b10_3", "b12_8", "falk_3s2"}; }

inline Fixture fixture(const std::string& name) {
  if (name == "crapo") return crapo_fixture();
  if (name == "b10_3") return b10_3_fixture();
  if (name == "b12_8") return b12_8_fixture();
  if (name == "falk_3s2") return falk_3s2_fixture();
  throw InputError("unknown example '" + name + "' (expected crapo, b10_3, b12_8 or falk_3s2)");
}

}  // namespace discarr
