#include "prm/projgeom.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "prm/error.hpp"
#include "prm/homopoly.hpp"

namespace prm {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::numeric_limits<std::uint64_t>::max() >> 2) / base) {
      throw Error(Errc::InvalidArgument, "projective space too large");
    }
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t projective_point_count(std::uint64_t q, int k) {
  if (k < 0) return 0;
  return (checked_pow(q, k + 1) - 1) / (q - 1);
}

std::uint64_t extension_count(std::uint64_t q, int m, int j) {
  return (checked_pow(q, m - j) - 1) / (q - 1);
}

ProjSpace::ProjSpace(Field field, int m) : field_(std::move(field)), m_(m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "dimension m must be >= 1");
  num_points_ = projective_point_count(field_.q(), m);
  block_offsets_.resize(static_cast<std::size_t>(m) + 2);
  block_offsets_[0] = 0;
  for (int lead = 0; lead <= m; ++lead) {
    block_offsets_[lead + 1] =
        block_offsets_[lead] + checked_pow(field_.q(), m - lead);
  }
}

void ProjSpace::check_arity(std::size_t n) const {
  if (n != arity()) {
    throw Error(Errc::DimensionMismatch,
                "expected " + std::to_string(arity()) + " coordinates, got " +
                    std::to_string(n));
  }
}

std::vector<ProjPoint> ProjSpace::points() const {
  std::vector<ProjPoint> out;
  out.reserve(num_points_);
  for (std::uint64_t i = 0; i < num_points_; ++i) out.push_back(point_at(i));
  return out;
}

ProjPoint ProjSpace::point_at(std::uint64_t index) const {
  if (index >= num_points_) {
    throw Error(Errc::InvalidArgument, "point index out of range");
  }
  std::size_t lead = 0;
  while (block_offsets_[lead + 1] <= index) ++lead;
  std::uint64_t rest = index - block_offsets_[lead];
  Vec coords(arity(), 0);
  coords[lead] = 1;
  const std::uint64_t q = field_.q();
  for (std::size_t i = arity(); i-- > lead + 1;) {
    coords[i] = static_cast<Elem>(rest % q);
    rest /= q;
  }
  return ProjPoint(std::move(coords));
}

std::uint64_t ProjSpace::index_of(const ProjPoint& p) const {
  check_arity(p.size());
  const std::size_t lead = leading_index(p.coords());
  std::uint64_t rest = 0;
  for (std::size_t i = lead + 1; i < arity(); ++i) {
    rest = rest * field_.q() + p[i];
  }
  return block_offsets_[lead] + rest;
}

ProjPoint ProjSpace::canonicalize(Vec v) const {
  check_arity(v.size());
  for (Elem x : v) {
    if (!field_.contains(x)) {
      throw Error(Errc::InvalidArgument,
                  "coordinate " + std::to_string(x) + " is not a field element");
    }
  }
  const std::size_t lead = leading_index(v);
  if (lead == v.size()) throw Error(Errc::ZeroVector, "zero vector");
  const Elem scale = field_.inv(v[lead]);
  for (Elem& x : v) x = field_.mul(x, scale);
  return ProjPoint(std::move(v));
}

Flat ProjSpace::span(const Matrix& generators) const {
  for (const Vec& g : generators) check_arity(g.size());
  Matrix basis = rref(field_, generators);
  if (basis.empty()) throw Error(Errc::ZeroSpan, "all generators are zero");
  return Flat(std::move(basis));
}

Flat ProjSpace::point_flat(const ProjPoint& p) const {
  check_arity(p.size());
  return Flat(Matrix{p.coords()});
}

bool ProjSpace::contains(const Flat& f, const ProjPoint& p) const {
  check_arity(p.size());
  check_arity(f.basis().front().size());
  Vec v = p.coords();
  reduce_against(field_, f.basis(), v);
  return is_zero(v);
}

std::vector<std::uint64_t> ProjSpace::flat_point_indices(const Flat& f) const {
  check_arity(f.basis().front().size());
  // A combination of RREF rows is canonical iff its first nonzero
  // coefficient is 1: that coefficient lands on the row's pivot.
  const Matrix& basis = f.basis();
  const std::size_t rows = basis.size();
  const std::uint32_t q = field_.q();
  std::vector<std::uint64_t> out;
  out.reserve(projective_point_count(q, f.dim()));
  for (std::size_t first = 0; first < rows; ++first) {
    std::vector<std::uint32_t> coeff(rows, 0);
    coeff[first] = 1;
    while (true) {
      Vec v(arity(), 0);
      for (std::size_t r = first; r < rows; ++r) {
        if (coeff[r] == 0) continue;
        const auto a = static_cast<Elem>(coeff[r]);
        for (std::size_t c = 0; c < v.size(); ++c) {
          v[c] = field_.add(v[c], field_.mul(a, basis[r][c]));
        }
      }
      out.push_back(index_of(ProjPoint(std::move(v))));
      // Odometer over the coefficients after `first`, rightmost fastest.
      bool wrapped = true;
      for (std::size_t pos = rows; pos > first + 1;) {
        --pos;
        if (++coeff[pos] < q) {
          wrapped = false;
          break;
        }
        coeff[pos] = 0;
      }
      if (wrapped) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ProjPoint> ProjSpace::flat_points(const Flat& f) const {
  std::vector<ProjPoint> out;
  for (auto idx : flat_point_indices(f)) out.push_back(point_at(idx));
  return out;
}

std::vector<Flat> ProjSpace::extensions(const Flat& f) const {
  check_arity(f.basis().front().size());
  if (f.dim() >= m_ - 1) {
    throw Error(Errc::AlreadyHyperplane,
                "flat of dimension " + std::to_string(f.dim()) +
                    " has no extensions in P^" + std::to_string(m_));
  }
  std::vector<bool> covered(num_points_, false);
  for (auto idx : flat_point_indices(f)) covered[idx] = true;
  std::vector<Flat> out;
  for (std::uint64_t i = 0; i < num_points_; ++i) {
    if (covered[i]) continue;
    Matrix gens = f.basis();
    gens.push_back(point_at(i).coords());
    Flat g = span(gens);
    for (auto idx : flat_point_indices(g)) covered[idx] = true;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HomPoly ProjSpace::hyperplane_form(const Flat& f) const {
  check_arity(f.basis().front().size());
  if (f.dim() != m_ - 1) {
    throw Error(Errc::NotHyperplane,
                "flat of dimension " + std::to_string(f.dim()) +
                    " is not a hyperplane of P^" + std::to_string(m_));
  }
  // Null space of an m x (m+1) RREF matrix: one free column.
  const Matrix& basis = f.basis();
  std::vector<bool> pivot(arity(), false);
  for (const Vec& row : basis) pivot[leading_index(row)] = true;
  const auto free_col = static_cast<std::size_t>(
      std::find(pivot.begin(), pivot.end(), false) - pivot.begin());
  Vec coeffs(arity(), 0);
  coeffs[free_col] = 1;
  for (const Vec& row : basis) {
    coeffs[leading_index(row)] = field_.neg(row[free_col]);
  }
  const Elem scale = field_.inv(coeffs[leading_index(coeffs)]);
  for (Elem& c : coeffs) c = field_.mul(c, scale);
  return HomPoly::linear(field_, coeffs);
}

}  // namespace prm
