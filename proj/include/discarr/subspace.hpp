#pragma once

#include "discarr/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace discarr {

/// A linear subspace of Q^n stored by its reduced row echelon basis.
///
/// The RREF basis (pivots normalized to 1, zero rows dropped) is unique for a
/// given subspace, so two Subspace values compare equal exactly when they are
/// the same subspace, regardless of the spanning set they were built from.
/// The zero subspace is a valid value with an empty basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    s.basis_ = row_reduce(Matrix::from_rows(vectors, ambient_dim)).rref;
    return s;
  }

  static Subspace row_space(const Matrix& m) {
    Subspace s(m.cols());
    s.basis_ = row_reduce(m).rref;
    return s;
  }

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim) { return row_space(Matrix::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

  /// Coordinates where some vector of the subspace is nonzero.
  std::vector<bool> support() const {
    std::vector<bool> s(ambient_, false);
    for (std::size_t i = 0; i < basis_.rows(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j)
        if (sgn(basis_(i, j)) != 0) s[j] = true;
    return s;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
};

/// {x : m x = 0}; dimension cols(m) - rank(m).
inline Subspace kernel(const Matrix& m) { return Subspace::span(m.cols(), nullspace_basis(m)); }

inline Subspace orthocomplement(const Subspace& u) {
  return Subspace::span(u.ambient_dim(), nullspace_basis(u.basis()));
}

inline Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw std::invalid_argument("subspace sum: ambient dimension mismatch");
  auto rows = u.basis_vectors();
  for (auto& v : w.basis_vectors()) rows.push_back(std::move(v));
  return Subspace::span(u.ambient_dim(), rows);
}

/// u ∩ w, as the kernel of the stacked orthocomplement bases.
inline Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("subspace intersection: ambient dimension mismatch");
  auto rows = orthocomplement(u).basis_vectors();
  for (auto& v : orthocomplement(w).basis_vectors()) rows.push_back(std::move(v));
  return kernel(Matrix::from_rows(rows, u.ambient_dim()));
}

inline bool contains(const Subspace& u, const Vector& v) {
  if (v.size() != u.ambient_dim()) throw std::invalid_argument("contains: length mismatch");
  // Reduce v against the RREF basis; v is in u iff the remainder vanishes.
  Vector rem = v;
  const Matrix& b = u.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::size_t pivot = 0;
    while (sgn(b(i, pivot)) == 0) ++pivot;
    if (sgn(rem[pivot]) == 0) continue;
    const Rational f = rem[pivot];
    for (std::size_t j = pivot; j < rem.size(); ++j) rem[j] -= f * b(i, j);
  }
  return is_zero(rem);
}

/// Sum of an arbitrary collection; the zero subspace for an empty list.
inline Subspace sum_all(std::size_t ambient_dim, const std::vector<Subspace>& parts) {
  std::vector<Vector> rows;
  for (const auto& p : parts) {
    if (p.ambient_dim() != ambient_dim) throw std::invalid_argument("subspace sum: ambient dimension mismatch");
    for (auto& v : p.basis_vectors()) rows.push_back(std::move(v));
  }
  return Subspace::span(ambient_dim, rows);
}

}  // namespace discarr
