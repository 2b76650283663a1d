#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "prm/gf.hpp"
#include "prm/projgeom.hpp"

namespace prm {

using Exponents = std::vector<std::uint32_t>;

/// Sparse homogeneous polynomial over GF(q).
///
/// Terms are keyed by exponent vector in lexicographically descending
/// order, so x0^2 comes before x0*x1 before x1^2. Every stored exponent
/// vector sums to degree() and no stored coefficient is zero; the zero
/// polynomial of a given degree has no terms.
class HomPoly {
 public:
  using Terms = std::map<Exponents, Elem, std::greater<Exponents>>;

  HomPoly(Field field, std::size_t nvars, std::uint32_t degree);

  /// sum_i coeffs[i] * x_i
  static HomPoly linear(Field field, const Vec& coeffs);
  static HomPoly monomial(Field field, Exponents exps, Elem coeff = 1);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds coeff * x^exps to the polynomial; cancelling terms are removed.
  /// Throws ArityMismatch or DegreeMismatch.
  void add_term(const Exponents& exps, Elem coeff);
  Elem coefficient(const Exponents& exps) const;

  /// Value at an arbitrary coordinate vector (0^0 = 1). Whether the result
  /// is zero does not depend on the representative chosen.
  Elem evaluate(std::span<const Elem> x) const;
  Elem evaluate(const ProjPoint& p) const { return evaluate(p.coords()); }

  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ &&
           a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  std::size_t nvars_;
  std::uint32_t degree_;
  Terms terms_;
};

/// Points of the space where F vanishes, in canonical point order. The
/// zero polynomial vanishes everywhere.
std::vector<ProjPoint> zero_set(const HomPoly& f, const ProjSpace& space);

/// Complement of zero_set, in canonical point order.
std::vector<ProjPoint> nonvanishing_set(const HomPoly& f,
                                        const ProjSpace& space);

}  // namespace prm
