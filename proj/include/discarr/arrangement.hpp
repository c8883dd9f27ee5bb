#pragma once

// Affine hyperplane arrangements in Q^k and their parallel translations.
//
// Hyperplane p is {x : normal_p . x = offset_p}. A translation t in Q^n moves
// hyperplane p to {x : normal_p . x = offset_p + t_p}. Compared with the
// "H + alpha t" convention this rescales each coordinate of translation space
// by |normal_p|^2, a diagonal change of coordinates that preserves every rank
// and incidence computed here.
//
// Labels are 1-based in all public interfaces (hyperplane p is index p-1).

#include "discarr/errors.hpp"
#include "discarr/matrix.hpp"
#include "discarr/subsets.hpp"

#include <optional>
#include <string>
#include <vector>

namespace discarr {

struct Hyperplane {
  Vector normal;
  Rational offset = 0;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class Arrangement {
 public:
  Arrangement(std::size_t k, std::vector<Hyperplane> hyperplanes) : k_(k), planes_(std::move(hyperplanes)) {
    if (planes_.empty()) throw InputError("arrangement needs at least one hyperplane");
    for (std::size_t i = 0; i < planes_.size(); ++i) {
      if (planes_[i].normal.size() != k_)
        throw InputError("hyperplane " + std::to_string(i + 1) + ": normal has wrong length");
      if (is_zero(planes_[i].normal)) throw InputError("hyperplane " + std::to_string(i + 1) + ": zero normal");
    }
  }

  /// Central arrangement (all offsets zero) with the given normals.
  static Arrangement central(std::size_t k, const std::vector<Vector>& normals) {
    std::vector<Hyperplane> hs;
    hs.reserve(normals.size());
    for (const auto& n : normals) hs.push_back({n, 0});
    return Arrangement(k, std::move(hs));
  }

  std::size_t k() const { return k_; }
  std::size_t n() const { return planes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return planes_; }
  /// 1-based access.
  const Hyperplane& at(std::size_t label) const { return planes_.at(label - 1); }

  /// n x k matrix of normals.
  Matrix normal_matrix() const {
    Matrix m(n(), k_);
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t j = 0; j < k_; ++j) m(i, j) = planes_[i].normal[j];
    return m;
  }

  /// Normals of the given 1-based labels, stacked as rows.
  Matrix normal_matrix(const std::vector<int>& labels) const {
    Matrix m(labels.size(), k_);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < k_; ++j) m(i, j) = at(labels[i]).normal[j];
    return m;
  }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t k_;
  std::vector<Hyperplane> planes_;
};

/// A point of translation space S ≅ Q^n.
struct Translation {
  Vector t;
  friend bool operator==(const Translation&, const Translation&) = default;
};

/// Every k-subset of normals is linearly independent (exhaustive).
inline bool is_generic(const Arrangement& a) {
  const int n = static_cast<int>(a.n());
  const int k = static_cast<int>(a.k());
  if (n < k) throw InputError("is_generic: fewer hyperplanes than the dimension");
  bool ok = true;
  const Matrix normals = a.normal_matrix();
  for_each_combination(n, k, [&](const std::vector<int>& idx) {
    if (!ok) return;
    Matrix sub(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = normals(idx[i], j);
    if (sgn(det(sub)) == 0) ok = false;
  });
  return ok;
}

inline Arrangement translate(const Arrangement& a, const Translation& t) {
  if (t.t.size() != a.n()) throw InputError("translate: translation length differs from hyperplane count");
  std::vector<Hyperplane> hs = a.hyperplanes();
  for (std::size_t i = 0; i < hs.size(); ++i) hs[i].offset += t.t[i];
  return Arrangement(a.k(), std::move(hs));
}

enum class Incidence { point, empty, positive_dimensional };

struct CommonPoint {
  Incidence kind;
  Vector point;  // set only when kind == Incidence::point
};

/// Intersection of the hyperplanes with the given 1-based labels.
inline CommonPoint common_point(const Arrangement& a, const std::vector<int>& labels) {
  if (labels.empty()) throw InputError("common_point: empty label set");
  const std::size_t k = a.k();
  Matrix aug(labels.size(), k + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || static_cast<std::size_t>(labels[i]) > a.n())
      throw InputError("common_point: label out of range");
    const auto& h = a.at(labels[i]);
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = h.normal[j];
    aug(i, k) = h.offset;
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == k) return {Incidence::empty, {}};
  if (e.pivots.size() < k) return {Incidence::positive_dimensional, {}};
  Vector p(k);
  for (std::size_t i = 0; i < k; ++i) p[e.pivots[i]] = e.rref(i, k);
  return {Incidence::point, std::move(p)};
}

/// Number of hyperplanes through p.
inline std::size_t multiplicity_at(const Arrangement& a, const Vector& p) {
  if (p.size() != a.k()) throw InputError("multiplicity_at: point has wrong dimension");
  std::size_t count = 0;
  for (const auto& h : a.hyperplanes())
    if (dot(h.normal, p) == h.offset) ++count;
  return count;
}

/// Any m <= k hyperplanes meet in dimension k - m, any m > k have empty
/// intersection. Checking m = min(n, k) and m = k + 1 suffices.
inline bool is_general_position(const Arrangement& a) {
  const int n = static_cast<int>(a.n());
  const int k = static_cast<int>(a.k());
  const Matrix normals = a.normal_matrix();
  const int m = std::min(n, k);
  bool ok = true;
  for_each_combination(n, m, [&](const std::vector<int>& idx) {
    if (!ok) return;
    Matrix sub(m, k);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j) sub(i, j) = normals(idx[i], j);
    if (static_cast<int>(rank(sub)) != m) ok = false;
  });
  if (!ok || n <= k) return ok;
  for_each_combination(n, k + 1, [&](const std::vector<int>& idx) {
    if (!ok) return;
    std::vector<int> labels;
    for (int i : idx) labels.push_back(i + 1);
    if (common_point(a, labels).kind != Incidence::empty) ok = false;
  });
  return ok;
}

}  // namespace discarr
