#pragma once

// r-sets: families {L_1, ..., L_r} of (k+1)-subsets of [n] with pairwise
// nonempty intersections in which every label of the union occurs in at least
// two members. This header covers the predicate, the type classification,
// enumeration of non-intersecting pair profiles, good rs-partitions and the
// inclusion-exclusion identities on nested intersection sizes.

#include "discarr/errors.hpp"
#include "discarr/subsets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace discarr {

/// Labels are 1-based. `sets[i]` is L_{i+1}, kept sorted.
struct RSet {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> sets;

  int r() const { return static_cast<int>(sets.size()); }

  /// Bitmask of L_{i+1}, bit p-1 for label p.
  Mask mask(int i) const {
    Mask m = 0;
    for (int p : sets[i]) m |= Mask{1} << (p - 1);
    return m;
  }

  Mask union_mask() const {
    Mask m = 0;
    for (int i = 0; i < r(); ++i) m |= mask(i);
    return m;
  }

  friend bool operator==(const RSet&, const RSet&) = default;
};

/// Sorts each member and checks sizes and label ranges.
inline RSet make_rset(int n, int k, std::vector<std::vector<int>> sets) {
  require_small_ground_set(n);
  if (k < 1) throw InputError("r-set: k must be positive");
  if (sets.empty()) throw InputError("r-set: no members");
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != k + 1) throw InputError("r-set: every member must have k+1 labels");
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("r-set: repeated label in a member");
    if (s.front() < 1 || s.back() > n) throw InputError("r-set: label out of range 1..n");
  }
  return RSet{n, k, std::move(sets)};
}

/// Pairwise intersections nonempty and every label of the union occurs in at
/// least two members (equivalently, dropping any one member keeps the union).
inline bool is_r_set(const RSet& t) {
  if (t.sets.empty()) throw InputError("is_r_set: no members");
  for (const auto& s : t.sets)
    if (static_cast<int>(s.size()) != t.k + 1) throw InputError("is_r_set: member size differs from k+1");
  const int r = t.r();
  std::vector<Mask> m(r);
  for (int i = 0; i < r; ++i) m[i] = t.mask(i);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if ((m[i] & m[j]) == 0) return false;
  Mask once = 0, twice = 0;
  for (Mask x : m) {
    twice |= once & x;
    once |= x;
  }
  return once == twice;
}

enum class RSetType { non_intersecting, intersecting, trivial_intersecting_3 };

inline std::string to_string(RSetType t) {
  switch (t) {
    case RSetType::non_intersecting: return "non_intersecting";
    case RSetType::intersecting: return "intersecting";
    case RSetType::trivial_intersecting_3: return "trivial_intersecting_3";
  }
  return "?";
}

inline RSetType classify(const RSet& t) {
  const int r = t.r();
  if (r < 3) throw InputError("classify: needs r >= 3");
  if (!is_r_set(t)) throw InputError("classify: not an r-set");
  bool any_triple = false;
  for (int i = 0; i < r && !any_triple; ++i)
    for (int j = i + 1; j < r && !any_triple; ++j)
      for (int l = j + 1; l < r && !any_triple; ++l)
        if ((t.mask(i) & t.mask(j) & t.mask(l)) != 0) any_triple = true;
  if (r == 3) return any_triple ? RSetType::intersecting : RSetType::trivial_intersecting_3;
  return any_triple ? RSetType::intersecting : RSetType::non_intersecting;
}

/// Pairwise intersection sizes a_{i,j} = |L_i ∩ L_j| (1-based i < j).
class PairProfile {
 public:
  PairProfile(int r, int k) : r_(r), k_(k), a_(static_cast<std::size_t>(r) * r, 0) {
    if (r < 2) throw InputError("PairProfile: r must be at least 2");
  }

  int r() const { return r_; }
  int k() const { return k_; }
  int at(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, int v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  /// (a_{1,2}, a_{1,3}, ..., a_{r-1,r}) in lexicographic pair order.
  std::vector<int> tuple() const {
    std::vector<int> out;
    for (int i = 1; i <= r_; ++i)
      for (int j = i + 1; j <= r_; ++j) out.push_back(at(i, j));
    return out;
  }

  int total() const {
    const auto t = tuple();
    return std::accumulate(t.begin(), t.end(), 0);
  }

  /// All entries >= 1 and every row sums to k+1: the shape of a
  /// non-intersecting r-set.
  bool is_nonintersecting_consistent() const {
    for (int i = 1; i <= r_; ++i) {
      int row = 0;
      for (int j = 1; j <= r_; ++j) {
        if (j == i) continue;
        if (at(i, j) < 1) return false;
        row += at(i, j);
      }
      if (row != k_ + 1) return false;
    }
    return true;
  }

  /// Profile after relabeling member i as perm[i-1]+1.
  PairProfile relabeled(const std::vector<int>& perm) const {
    PairProfile out(r_, k_);
    for (int i = 1; i <= r_; ++i)
      for (int j = i + 1; j <= r_; ++j) out.set(perm[i - 1] + 1, perm[j - 1] + 1, at(i, j));
    return out;
  }

  friend bool operator==(const PairProfile&, const PairProfile&) = default;

 private:
  std::size_t idx(int i, int j) const {
    if (i < 1 || j < 1 || i > r_ || j > r_ || i == j) throw InputError("PairProfile: bad index");
    return static_cast<std::size_t>(i - 1) * r_ + (j - 1);
  }
  int r_, k_;
  std::vector<int> a_;
};

inline PairProfile pair_profile(const RSet& t) {
  if (!is_r_set(t)) throw InputError("pair_profile: not an r-set");
  PairProfile p(t.r(), t.k);
  for (int i = 0; i < t.r(); ++i)
    for (int j = i + 1; j < t.r(); ++j) p.set(i + 1, j + 1, popcount(t.mask(i) & t.mask(j)));
  return p;
}

/// Lexicographically least tuple over all relabelings of the r members.
inline PairProfile canonical_form(const PairProfile& p) {
  std::vector<int> perm(p.r());
  std::iota(perm.begin(), perm.end(), 0);
  PairProfile best = p;
  auto best_tuple = p.tuple();
  do {
    PairProfile q = p.relabeled(perm);
    auto tq = q.tuple();
    if (tq < best_tuple) {
      best_tuple = std::move(tq);
      best = std::move(q);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// All non-intersecting pair profiles for given r >= 4 and k.
///
/// The free parameters are a_{l,t}, 2 <= l < t <= r: positive integers
/// summing to (r-2)(k+1)/2. Each a_{1,j} = k+1 - sum_{l != 1,j} a_{l,j} must be
/// at least 1. With `dedupe`, only the lexicographically least member of each
/// orbit under relabeling of the r members is kept. Output order is the
/// lexicographic order of the free tuple.
inline std::vector<PairProfile> enumerate_nonintersecting(int r, int k, bool dedupe) {
  if (r < 4) throw InputError("enumerate_nonintersecting: needs r >= 4");
  if (r > 8 && dedupe) throw InputError("enumerate_nonintersecting: dedupe supports r <= 8");
  std::vector<PairProfile> out;
  if (k < r - 2 || (r * (k + 1)) % 2 != 0) return out;
  const int target = (r - 2) * (k + 1) / 2;

  std::vector<std::pair<int, int>> free_pairs;
  for (int l = 2; l <= r; ++l)
    for (int t = l + 1; t <= r; ++t) free_pairs.emplace_back(l, t);
  const int parts = static_cast<int>(free_pairs.size());
  if (target < parts) return out;

  std::vector<int> comp(parts, 1);
  // col[j] = sum of assigned a_{l,j} over l != 1, j; pruned as we go.
  std::vector<int> col(r + 1, 0);

  auto emit = [&]() {
    PairProfile p(r, k);
    for (int q = 0; q < parts; ++q) p.set(free_pairs[q].first, free_pairs[q].second, comp[q]);
    for (int j = 2; j <= r; ++j) {
      const int a1j = k + 1 - col[j];
      if (a1j < 1) return;
      p.set(1, j, a1j);
    }
    if (dedupe && !(canonical_form(p) == p)) return;
    out.push_back(std::move(p));
  };

  auto rec = [&](auto&& self, int q, int remaining) -> void {
    if (q == parts - 1) {
      comp[q] = remaining;
      auto [l, t] = free_pairs[q];
      col[l] += remaining;
      col[t] += remaining;
      if (col[l] <= k && col[t] <= k) emit();
      col[l] -= remaining;
      col[t] -= remaining;
      return;
    }
    const int left = parts - q - 1;
    auto [l, t] = free_pairs[q];
    for (int v = 1; v <= remaining - left; ++v) {
      if (col[l] + v > k || col[t] + v > k) break;
      comp[q] = v;
      col[l] += v;
      col[t] += v;
      self(self, q + 1, remaining - v);
      col[l] -= v;
      col[t] -= v;
    }
  };
  rec(rec, 0, target);
  return out;
}

/// Realizes a non-intersecting profile: blocks A_{i,j} of a_{i,j} consecutive
/// labels are assigned in lexicographic (i,j) order and L_i is the union of
/// its blocks. n = r(k+1)/2.
inline RSet materialize(const PairProfile& p) {
  if (!p.is_nonintersecting_consistent())
    throw InputError("materialize: profile is not a consistent non-intersecting profile");
  const int r = p.r();
  std::vector<std::vector<int>> sets(r);
  int next = 1;
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j)
      for (int c = 0; c < p.at(i, j); ++c) {
        sets[i - 1].push_back(next);
        sets[j - 1].push_back(next);
        ++next;
      }
  return make_rset(next - 1, p.k(), std::move(sets));
}

/// Good rs-partition: K_i = {(r-i)s+1, ..., (r-i+1)s}, L_i = [rs] \ K_i,
/// k = (r-1)s - 1.
inline RSet good_rs_partition(int r, int s) {
  if (r < 3) throw InputError("good_rs_partition: needs r >= 3");
  if (s < r - 1) throw InputError("good_rs_partition: needs s >= r-1");
  const int n = r * s;
  std::vector<std::vector<int>> sets(r);
  for (int i = 1; i <= r; ++i) {
    const int lo = (r - i) * s + 1, hi = (r - i + 1) * s;
    for (int p = 1; p <= n; ++p)
      if (p < lo || p > hi) sets[i - 1].push_back(p);
  }
  return make_rset(n, (r - 1) * s - 1, std::move(sets));
}

/// If `t` is a good rs-partition (up to the naming of blocks), returns s.
inline std::optional<int> good_rs_block_size(const RSet& t) {
  const int r = t.r();
  if (r < 3) return std::nullopt;
  const Mask all = t.union_mask();
  const int n = popcount(all);
  if (n % r != 0) return std::nullopt;
  const int s = n / r;
  if (s < r - 1 || t.k != (r - 1) * s - 1) return std::nullopt;
  Mask seen = 0;
  for (int i = 0; i < r; ++i) {
    const Mask block = all & ~t.mask(i);
    if (popcount(block) != s || (block & seen) != 0) return std::nullopt;
    seen |= block;
  }
  if (seen != all) return std::nullopt;
  return s;
}

/// Intersection sizes a_I = |∩_{i∈I} L_i| for 2 <= |I| <= r-1, keyed by the
/// bitmask of I (bit i-1 for member i). a_{[r]} is taken to be 0.
struct NestedProfile {
  int r = 0;
  int k = 0;
  std::map<Mask, int> a;

  int at(Mask I) const {
    auto it = a.find(I);
    return it == a.end() ? 0 : it->second;
  }
  int pair(int i, int j) const { return at((Mask{1} << (i - 1)) | (Mask{1} << (j - 1))); }
};

inline Mask member_mask(std::initializer_list<int> members) {
  Mask m = 0;
  for (int i : members) m |= Mask{1} << (i - 1);
  return m;
}

inline NestedProfile nested_profile(const RSet& t) {
  const int r = t.r();
  NestedProfile np{r, t.k, {}};
  const Mask full = (Mask{1} << r) - 1;
  for_each_submask(full, [&](Mask I) {
    const int sz = popcount(I);
    if (sz < 2 || sz > r - 1) return;
    Mask inter = ~Mask{0};
    for (int i : mask_elements(I)) inter &= t.mask(i);
    np.a[I] = popcount(inter);
  });
  return np;
}

namespace detail {
// sum over l = 3..r-1 of (-1)^l * sum_{I ∋ member, |I| = l} a_I
inline long long alternating_higher(const NestedProfile& np, int member) {
  long long acc = 0;
  const Mask bit = Mask{1} << (member - 1);
  for (const auto& [I, v] : np.a) {
    const int l = popcount(I);
    if (l < 3 || l > np.r - 1 || (I & bit) == 0) continue;
    acc += (l % 2 == 0 ? 1 : -1) * static_cast<long long>(v);
  }
  return acc;
}
}  // namespace detail

/// Evaluates the relation obtained by summing the per-member
/// inclusion-exclusion identities:
///   (r-2)(k+1) = 2 sum_{2<=l<t} a_{l,t}
///              + sum_{l=3}^{r-1} (-1)^l (sum_{j>=2} sum_{I∈I_j^l} a_I - sum_{I∈I_1^l} a_I).
struct LastEqEvaluation {
  long long lhs = 0;
  long long pair_term = 0;
  long long higher_term = 0;
  bool holds() const { return lhs == pair_term + higher_term; }
};

inline LastEqEvaluation evaluate_last_eq(const NestedProfile& np) {
  if (np.r < 3) throw InputError("check_last_eq: needs r >= 3");
  LastEqEvaluation e;
  e.lhs = static_cast<long long>(np.r - 2) * (np.k + 1);
  for (int l = 2; l <= np.r; ++l)
    for (int t = l + 1; t <= np.r; ++t) e.pair_term += 2LL * np.pair(l, t);
  for (int j = 2; j <= np.r; ++j) e.higher_term += detail::alternating_higher(np, j);
  e.higher_term -= detail::alternating_higher(np, 1);
  return e;
}

inline bool check_last_eq(const NestedProfile& np) { return evaluate_last_eq(np).holds(); }

/// Chain monotonicity a_I > a_J for I ⊊ J, both with 2 <= size <= r-1.
/// Returns one message per violating pair; these are warnings, not errors.
inline std::vector<std::string> monotonicity_warnings(const NestedProfile& np) {
  std::vector<std::string> out;
  for (const auto& [I, vi] : np.a)
    for (const auto& [J, vj] : np.a)
      if (I != J && (I & J) == I && vi <= vj)
        out.push_back("a_I <= a_J for I ⊊ J (I mask " + std::to_string(I) + ", J mask " + std::to_string(J) +
                      ": " + std::to_string(vi) + " <= " + std::to_string(vj) + ")");
  return out;
}

/// Fills a_{1,j}, j = 2..r, from the inclusion-exclusion identity for L_j:
///   a_{1,j} = k+1 - sum_{l∉{1,j}} a_{l,j} - sum_{l=3}^{r-1} (-1)^l sum_{I∈I_j^l} a_I.
/// `fixed` must carry a_{l,t} for 2 <= l < t and any a_I with |I| >= 3.
inline NestedProfile complete_profile(const NestedProfile& fixed) {
  NestedProfile out = fixed;
  const int r = fixed.r;
  for (int j = 2; j <= r; ++j) out.a.erase(member_mask({1, j}));
  for (int j = 2; j <= r; ++j) {
    long long v = fixed.k + 1;
    for (int l = 2; l <= r; ++l)
      if (l != j) v -= fixed.pair(l, j);
    v -= detail::alternating_higher(fixed, j);
    if (v < 1)
      throw InputError("complete_profile: a_{1," + std::to_string(j) + "} = " + std::to_string(v) +
                       " is not realizable");
    out.a[member_mask({1, j})] = static_cast<int>(v);
  }
  if (!check_last_eq(out)) throw InputError("complete_profile: completed profile violates the summed identity");
  return out;
}

/// |S_1 ∪ ... | > k + sum (|S_i| - k) for every subfamily of at least two
/// members. Labels are 1-based.
inline bool pnk_member(const std::vector<std::vector<int>>& sets, int n, int k) {
  require_small_ground_set(n);
  const int r = static_cast<int>(sets.size());
  if (r > 30) throw InputError("pnk_member: too many sets");
  std::vector<Mask> m(r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(sets[i].size()) < k + 1) throw InputError("pnk_member: every set needs at least k+1 labels");
    for (int p : sets[i]) {
      if (p < 1 || p > n) throw InputError("pnk_member: label out of range");
      m[i] |= Mask{1} << (p - 1);
    }
    if (popcount(m[i]) != static_cast<int>(sets[i].size())) throw InputError("pnk_member: repeated label");
  }
  const Mask full = (Mask{1} << r) - 1;
  bool ok = true;
  for_each_submask(full, [&](Mask I) {
    if (!ok || popcount(I) < 2) return;
    Mask u = 0;
    long long bound = k;
    for (int i : mask_elements(I)) {
      u |= m[i];
      bound += popcount(m[i]) - k;
    }
    if (popcount(u) <= bound) ok = false;
  });
  return ok;
}

}  // namespace discarr
