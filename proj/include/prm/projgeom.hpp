#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "prm/gf.hpp"
#include "prm/linalg.hpp"

namespace prm {

class HomPoly;

/// A point of P^m(F_q) stored by its canonical representative: the
/// leftmost nonzero coordinate is 1. Obtain one via ProjSpace.
class ProjPoint {
 public:
  const Vec& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  Elem operator[](std::size_t i) const noexcept { return coords_[i]; }

  // Plain lexicographic order on coordinates, for use as a container key.
  // The enumeration order of a space is ProjSpace::index_of.
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  friend class ProjSpace;
  explicit ProjPoint(Vec coords) : coords_(std::move(coords)) {}
  Vec coords_;
};

/// A projective subspace of dimension `dim`, represented by its reduced
/// row echelon basis ((dim+1) rows, no zero rows). Equal flats have
/// identical bases, so comparison is structural.
class Flat {
 public:
  int dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
  const Matrix& basis() const noexcept { return basis_; }

  friend auto operator<=>(const Flat&, const Flat&) = default;

 private:
  friend class ProjSpace;
  explicit Flat(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

/// Number of points of P^k(F_q), i.e. (q^(k+1)-1)/(q-1). k may be -1 (empty).
std::uint64_t projective_point_count(std::uint64_t q, int k);

/// Number of (j+1)-flats through a fixed j-flat of P^m(F_q):
/// (q^(m-j)-1)/(q-1).
std::uint64_t extension_count(std::uint64_t q, int m, int j);

/// P^m over a fixed field, with the canonical point order: points are
/// grouped by the position of their leading 1 (position 0 first); inside
/// a group the trailing coordinates count upward, rightmost fastest.
class ProjSpace {
 public:
  ProjSpace(Field field, int m);

  const Field& field() const noexcept { return field_; }
  int dim() const noexcept { return m_; }
  std::size_t arity() const noexcept { return static_cast<std::size_t>(m_) + 1; }
  std::uint64_t num_points() const noexcept { return num_points_; }

  std::vector<ProjPoint> points() const;
  ProjPoint point_at(std::uint64_t index) const;
  std::uint64_t index_of(const ProjPoint& p) const;

  /// Scales v by the inverse of its leftmost nonzero coordinate.
  /// Throws ZeroVector / DimensionMismatch.
  ProjPoint canonicalize(Vec v) const;

  /// Flat spanned by the generator rows; dim = rank - 1. Throws ZeroSpan.
  Flat span(const Matrix& generators) const;
  Flat point_flat(const ProjPoint& p) const;

  bool contains(const Flat& f, const ProjPoint& p) const;

  /// All points of f in canonical point order.
  std::vector<ProjPoint> flat_points(const Flat& f) const;

  /// Every flat of dimension dim(f)+1 containing f, once each, sorted by
  /// basis matrix. Throws AlreadyHyperplane when f is a hyperplane.
  std::vector<Flat> extensions(const Flat& f) const;

  /// The linear form vanishing exactly on the hyperplane f, scaled so its
  /// leftmost nonzero coefficient is 1. Throws NotHyperplane.
  HomPoly hyperplane_form(const Flat& f) const;

 private:
  void check_arity(std::size_t n) const;
  std::vector<std::uint64_t> flat_point_indices(const Flat& f) const;

  Field field_;
  int m_;
  std::uint64_t num_points_;
  std::vector<std::uint64_t> block_offsets_;  // size m+2
};

}  // namespace prm
