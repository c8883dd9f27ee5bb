#pragma once

// The discriminantal arrangement B(n, k, A) lives in translation space Q^n.
// For a (k+1)-subset L of labels, the translated hyperplanes indexed by L
// share a point iff t_L lies in the column space of the (k+1) x k normal
// matrix N_L, i.e. iff nu_L . t = 0 where nu_L spans the left kernel of N_L.
// nu_L is built from the signed maximal minors of N_L.
//
// Translation space is measured from the central arrangement A^0 with the
// same normals: offsets of the Arrangement passed in are ignored here.

#include "discarr/arrangement.hpp"
#include "discarr/random.hpp"
#include "discarr/rset.hpp"
#include "discarr/subspace.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace discarr {

struct DiscriminantalNormal {
  std::vector<int> L;  // sorted 1-based labels, |L| = k+1
  Vector nu;           // length n, supported exactly on L
};

inline std::string label_set_string(const std::vector<int>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
  return s + "}";
}

inline std::string vector_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

/// nu[i_j] = (-1)^j det(N_L with row j deleted), j = 1..k+1. Throws
/// NonGenericError if some minor vanishes, which cannot happen for a generic
/// arrangement.
inline DiscriminantalNormal dl_normal(const Arrangement& a, std::vector<int> L) {
  const std::size_t k = a.k();
  std::sort(L.begin(), L.end());
  if (L.size() != k + 1) throw InputError("dl_normal: L must have k+1 labels");
  if (std::adjacent_find(L.begin(), L.end()) != L.end()) throw InputError("dl_normal: repeated label");
  if (L.front() < 1 || static_cast<std::size_t>(L.back()) > a.n()) throw InputError("dl_normal: label out of range");

  const Matrix N = a.normal_matrix(L);
  Vector nu(a.n());
  for (std::size_t j = 0; j <= k; ++j) {
    Matrix minor(k, k);
    for (std::size_t i = 0, row = 0; i <= k; ++i) {
      if (i == j) continue;
      for (std::size_t c = 0; c < k; ++c) minor(row, c) = N(i, c);
      ++row;
    }
    Rational d = det(minor);
    if (sgn(d) == 0)
      throw NonGenericError("dl_normal: normals " + label_set_string(L) + " contain a dependent k-subset");
    // j is 0-based here, so (-1)^(j+1).
    nu[L[j] - 1] = (j % 2 == 0) ? Rational(-d) : d;
  }
  return {std::move(L), std::move(nu)};
}

/// One normal per (k+1)-subset, lexicographic in L.
inline std::vector<DiscriminantalNormal> build_discriminantal(const Arrangement& a,
                                                              std::uint64_t budget = 1'000'000) {
  const int n = static_cast<int>(a.n());
  const int k = static_cast<int>(a.k());
  if (binomial(n, k + 1) > budget)
    throw BudgetExhausted("build_discriminantal: C(n,k+1) = " + std::to_string(binomial(n, k + 1)) +
                          " exceeds the budget of " + std::to_string(budget));
  std::vector<DiscriminantalNormal> out;
  for_each_combination(n, k + 1, [&](const std::vector<int>& idx) {
    std::vector<int> L;
    for (int i : idx) L.push_back(i + 1);
    out.push_back(dl_normal(a, std::move(L)));
  });
  return out;
}

inline void require_compatible(const Arrangement& a, const RSet& t) {
  if (static_cast<std::size_t>(t.k) != a.k()) throw InputError("r-set dimension k differs from the arrangement's");
  if (static_cast<std::size_t>(t.n) > a.n()) throw InputError("r-set labels exceed the arrangement's hyperplanes");
}

/// r x n matrix whose rows are nu_{L_1}, ..., nu_{L_r}.
inline Matrix stratum_matrix(const Arrangement& a, const RSet& t) {
  require_compatible(a, t);
  std::vector<Vector> rows;
  for (const auto& L : t.sets) rows.push_back(dl_normal(a, L).nu);
  return Matrix::from_rows(rows, a.n());
}

/// Codimension of ∩ D_{L_i} in translation space.
inline std::size_t stratum_rank(const Arrangement& a, const RSet& t) { return rank(stratum_matrix(a, t)); }

/// Translations t for which every P_i^t = ∩_{p∈L_i} H_p^{t_p} exists.
/// Dimension n - stratum_rank.
inline Subspace kt_translation_space(const Arrangement& a, const RSet& t) {
  if (t.sets.empty()) return Subspace::full(a.n());
  return kernel(stratum_matrix(a, t));
}

/// Span of {nu_L : L ⊆ S, |L| = k+1}, the normal space of D_S.
inline Subspace stratum_span(const Arrangement& a, Mask S) {
  std::vector<Vector> rows;
  const auto elems = mask_elements(S);
  for_each_combination(static_cast<int>(elems.size()), static_cast<int>(a.k()) + 1, [&](const std::vector<int>& idx) {
    std::vector<int> L;
    for (int i : idx) L.push_back(elems[i] + 1);
    rows.push_back(dl_normal(a, L).nu);
  });
  return Subspace::span(a.n(), rows);
}

struct SimplicityScan {
  bool r_simple = true;
  std::size_t subfamilies = 0;        // proper I with |I| >= 2
  std::uint64_t candidates = 0;       // (I, S) pairs examined
  std::size_t span_comparisons = 0;   // pairs needing an explicit span comparison
  bool exhaustive = false;            // S ranged over all of [n] rather than the union
  std::vector<std::string> notes;
};

/// Decides whether ∩ D_{L_i} is r-simple: for no proper I ⊆ [r] with |I| >= 2
/// and no S with |S| > k+1 does span{nu_{L_i} : i ∈ I} equal the normal
/// space of D_S.
///
/// Every nu_L has support exactly L, so the normal space of D_S has support S
/// and span{nu_{L_i} : i∈I} has support ∪_{i∈I} L_i. Candidates S whose support
/// differs are therefore settled by comparing supports; the remaining
/// candidate is compared as canonical subspaces. For n <= 20 every S ⊆ [n] is
/// visited; beyond that the candidates are counted rather than visited.
inline SimplicityScan scan_r_simplicity(const Arrangement& a, const std::vector<std::vector<int>>& members) {
  const int n = static_cast<int>(a.n());
  const int k = static_cast<int>(a.k());
  require_small_ground_set(n);
  const int r = static_cast<int>(members.size());
  if (r > 20) throw InputError("is_r_simple: too many members");

  std::vector<Vector> nus;
  for (const auto& L : members) nus.push_back(dl_normal(a, L).nu);

  SimplicityScan scan;
  scan.exhaustive = n <= 20;
  std::map<Mask, Subspace> span_cache;
  std::optional<std::pair<long, std::string>> closest;

  const Mask full_members = (Mask{1} << r) - 1;
  for_each_submask(full_members, [&](Mask I) {
    if (popcount(I) < 2 || I == full_members) return;
    ++scan.subfamilies;
    std::vector<Vector> rows;
    for (int i : mask_elements(I)) rows.push_back(nus[i]);
    const Subspace span_I = Subspace::span(n, rows);
    Mask supp = 0;
    const auto sv = span_I.support();
    for (int p = 0; p < n; ++p)
      if (sv[p]) supp |= Mask{1} << p;

    auto compare = [&](Mask S) {
      ++scan.span_comparisons;
      auto it = span_cache.find(S);
      if (it == span_cache.end()) it = span_cache.emplace(S, stratum_span(a, S)).first;
      const Subspace& span_S = it->second;
      std::vector<int> Ilabels, Slabels;
      for (int i : mask_elements(I)) Ilabels.push_back(i + 1);
      for (int p : mask_elements(S)) Slabels.push_back(p + 1);
      const long gap = std::labs(static_cast<long>(span_S.dim()) - static_cast<long>(span_I.dim()));
      std::ostringstream note;
      note << "I=" << label_set_string(Ilabels) << " S=" << label_set_string(Slabels)
           << ": dim span(nu_L_i) = " << span_I.dim() << ", dim span(nu_L, L⊆S) = " << span_S.dim();
      if (span_S == span_I) {
        scan.r_simple = false;
        note << " -> EQUAL";
        scan.notes.push_back(note.str());
      } else if (!closest || gap < closest->first) {
        closest = {gap, note.str() + " -> distinct"};
      }
    };

    if (scan.exhaustive) {
      for (Mask S = 0; S < (Mask{1} << n); ++S) {
        if (popcount(S) <= k + 1) continue;
        ++scan.candidates;
        if (S == supp) compare(S);
      }
    } else {
      for (int sz = k + 2; sz <= n; ++sz) scan.candidates += binomial(n, sz);
      if (popcount(supp) > k + 1) compare(supp);
    }
  });

  std::ostringstream summary;
  summary << "r-simplicity scan: " << scan.subfamilies << " proper subfamilies, " << scan.candidates
          << " candidate sets S (" << (scan.exhaustive ? "all S ⊆ [n]" : "counted") << ", |S| > k+1), "
          << scan.span_comparisons << " explicit span comparisons; other S differ by support";
  scan.notes.insert(scan.notes.begin(), summary.str());
  if (closest) scan.notes.push_back("closest to equality: " + closest->second);
  return scan;
}

inline bool is_r_simple(const Arrangement& a, const RSet& t) {
  require_compatible(a, t);
  return scan_r_simplicity(a, t.sets).r_simple;
}

struct Verdict {
  std::size_t stratum_rank = 0;
  std::size_t multiplicity = 0;
  bool r_simple = false;
  bool non_very_generic = false;
  std::vector<std::string> transcript;
};

inline Verdict verdict(const Arrangement& a, const RSet& t) {
  require_compatible(a, t);
  Verdict v;
  v.multiplicity = t.sets.size();
  std::vector<Vector> rows;
  for (const auto& L : t.sets) {
    auto dn = dl_normal(a, L);
    v.transcript.push_back("nu_" + label_set_string(dn.L) + " = " + vector_string(dn.nu));
    rows.push_back(std::move(dn.nu));
  }
  v.stratum_rank = rank(Matrix::from_rows(rows, a.n()));
  v.transcript.push_back("stratum rank = " + std::to_string(v.stratum_rank) + " (" + std::to_string(rows.size()) +
                         " stacked normals in Q^" + std::to_string(a.n()) + ")");
  SimplicityScan scan = scan_r_simplicity(a, t.sets);
  v.r_simple = scan.r_simple;
  for (auto& s : scan.notes) v.transcript.push_back(std::move(s));
  v.non_very_generic = v.r_simple && v.stratum_rank < v.multiplicity;
  v.transcript.push_back(std::string("verdict: ") + (v.non_very_generic ? "non-very generic" : "no certificate") +
                         " (r_simple=" + (v.r_simple ? "yes" : "no") + ", rank " + std::to_string(v.stratum_rank) +
                         (v.stratum_rank < v.multiplicity ? " < " : " >= ") + "multiplicity " +
                         std::to_string(v.multiplicity) + ")");
  return v;
}

struct KTCheck {
  bool ok = false;
  std::vector<Vector> points;  // P_i^t, filled as far as they exist
  std::string reason;
};

/// Is A^t K_T-translated: every P_i^t is a point lying on exactly k+1
/// hyperplanes, and P_i^t != P_j^t whenever |L_i ∩ L_j| < k.
inline KTCheck check_kt_translation(const Arrangement& a, const RSet& t, const Translation& tr) {
  require_compatible(a, t);
  std::vector<Vector> normals;
  for (const auto& h : a.hyperplanes()) normals.push_back(h.normal);
  const Arrangement moved = translate(Arrangement::central(a.k(), normals), tr);
  KTCheck out;
  for (std::size_t i = 0; i < t.sets.size(); ++i) {
    const auto cp = common_point(moved, t.sets[i]);
    if (cp.kind != Incidence::point) {
      out.reason = "P_" + std::to_string(i + 1) + " does not exist";
      return out;
    }
    const auto mult = multiplicity_at(moved, cp.point);
    if (mult != a.k() + 1) {
      out.reason = "P_" + std::to_string(i + 1) + " lies on " + std::to_string(mult) + " hyperplanes";
      out.points.push_back(cp.point);
      return out;
    }
    out.points.push_back(cp.point);
  }
  for (std::size_t i = 0; i < t.sets.size(); ++i)
    for (std::size_t j = i + 1; j < t.sets.size(); ++j)
      if (popcount(t.mask(i) & t.mask(j)) < t.k && out.points[i] == out.points[j]) {
        out.reason = "P_" + std::to_string(i + 1) + " = P_" + std::to_string(j + 1);
        return out;
      }
  out.ok = true;
  return out;
}

struct KTSearch {
  std::optional<Translation> translation;
  std::size_t attempts = 0;
  std::string last_reason;
};

/// Samples integer points of kt_translation_space until one is a
/// K_T-translation, giving up after `budget` samples.
inline KTSearch find_kt_translation(const Arrangement& a, const RSet& t, std::uint64_t seed,
                                    std::size_t budget = 64, std::int64_t box = 1000) {
  const Subspace space = kt_translation_space(a, t);
  const auto basis = space.basis_vectors();
  Sampler rng(seed);
  KTSearch out;
  for (out.attempts = 1; out.attempts <= budget; ++out.attempts) {
    Vector x(a.n());
    for (const auto& b : basis) x = x + Rational(static_cast<long>(rng.uniform(-box, box))) * b;
    Translation tr{primitive(x)};
    const KTCheck check = check_kt_translation(a, t, tr);
    if (check.ok) {
      out.translation = std::move(tr);
      return out;
    }
    out.last_reason = check.reason;
  }
  out.attempts = budget;
  return out;
}

}  // namespace discarr
