// Build a non-very generic arrangement of 6 lines from a sampled vector set
// and check it against the discriminantal verdict.

#include "discarr/discarr.hpp"

#include <iostream>

int main() {
  using namespace discarr;

  const RSet t = materialize(enumerate_nonintersecting(4, 2, true).at(0));
  const FamilySample fs = sample_family(FamilyMode::nonint, t, 1, std::nullopt, 11);
  const SynthesisReport rep = synthesize_arrangement(fs.family, t, 12);

  for (const auto& h : rep.arrangement.hyperplanes()) std::cout << "normal " << vector_string(h.normal) << "\n";
  for (const auto& line : rep.verdict.transcript) std::cout << line << "\n";

  const KTSearch kt = find_kt_translation(rep.arrangement, t, 13);
  if (!kt.translation) return 1;
  std::cout << "K_T-translation " << vector_string(kt.translation->t) << "\n";
  return rep.verdict.non_very_generic ? 0 : 1;
}
