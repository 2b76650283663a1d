#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prm/homopoly.hpp"
#include "prm/projgeom.hpp"

namespace prm {

/// t distinct points of P^m(F_q) with 1 <= t <= q+1.
class SeparationInstance {
 public:
  /// Throws TooManyPoints, TooFewPoints (empty) or DuplicatePoints.
  SeparationInstance(ProjSpace space, std::vector<ProjPoint> points);

  const ProjSpace& space() const noexcept { return space_; }
  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  ProjSpace space_;
  std::vector<ProjPoint> points_;
};

/// chain[j] has dimension j; chain[0] is the target point and chain.back()
/// is the hyperplane. Each member contains the target and no other point.
struct SeparatingHyperplane {
  std::size_t target = 0;
  std::vector<Flat> chain;

  const Flat& hyperplane() const { return chain.back(); }
};

/// Grows a flag of flats from the target point up to a hyperplane, taking
/// at every step the first extension (in basis order) that avoids all other
/// instance points. `target` is zero-based.
SeparatingHyperplane separating_hyperplane(const SeparationInstance& inst,
                                           std::size_t target);

struct Separator {
  SeparatingHyperplane hyperplane;
  HomPoly form;  // vanishes on the target, nonzero at every other point
};

/// One separator per instance point, in instance order.
std::vector<Separator> separating_family(const SeparationInstance& inst);

/// H = F * G_1 * ... * G_(t-1), where the instance is exactly the
/// non-vanishing set of F and its last point is the one H keeps. Requires
/// 2 <= t <= q+1. Throws NonvanishingSetMismatch, TooManyPoints,
/// TooFewPoints.
HomPoly gap_product(const HomPoly& f, const SeparationInstance& inst);

enum class GapOutcome {
  VanishesEverywhere,   // t = 0: |Z(F)| = n
  BoundHolds,           // t >= q - s: |Z(F)| <= n - (q - s)
  Contradiction,        // 0 < t < q - s: H built, single non-vanishing point
};

const char* outcome_name(GapOutcome outcome) noexcept;

/// Contradiction data for a polynomial F of degree
/// nu = (m-1)(q-1) + s + 1, 0 <= s < q-1.
struct ContradictionReport {
  std::uint32_t q = 0;
  int m = 0;
  std::uint32_t nu = 0;
  std::uint32_t s = 0;
  std::uint64_t n = 0;
  std::uint64_t t = 0;          // |non-vanishing set of F|
  std::uint64_t threshold = 0;  // q - s
  GapOutcome outcome = GapOutcome::BoundHolds;
  // Populated for GapOutcome::Contradiction only.
  std::optional<HomPoly> product;
  std::uint32_t product_degree = 0;
  std::uint32_t degree_bound = 0;  // m(q-1)
  bool degree_within_bound = false;
  std::uint64_t product_zero_count = 0;
  std::optional<ProjPoint> survivor;
};

/// Throws WrongRegime when nu is not of the form (m-1)(q-1) + s + 1 or
/// deg F != nu.
ContradictionReport contradiction_report(const ProjSpace& space,
                                         std::uint32_t nu, const HomPoly& f);

}  // namespace prm
