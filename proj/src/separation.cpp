#include "prm/separation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "prm/error.hpp"

namespace prm {

SeparationInstance::SeparationInstance(ProjSpace space,
                                       std::vector<ProjPoint> points)
    : space_(std::move(space)), points_(std::move(points)) {
  const std::uint32_t q = space_.field().q();
  if (points_.empty()) {
    throw Error(Errc::TooFewPoints, "separation instance has no points");
  }
  if (points_.size() > std::size_t{q} + 1) {
    throw Error(Errc::TooManyPoints,
                "t=" + std::to_string(points_.size()) + " exceeds q+1=" +
                    std::to_string(q + 1));
  }
  std::set<ProjPoint> seen;
  for (const auto& p : points_) {
    if (p.size() != space_.arity()) {
      throw Error(Errc::DimensionMismatch, "point arity does not match P^m");
    }
    if (!seen.insert(p).second) {
      throw Error(Errc::DuplicatePoints, "instance points are not distinct");
    }
  }
}

SeparatingHyperplane separating_hyperplane(const SeparationInstance& inst,
                                           std::size_t target) {
  if (target >= inst.size()) {
    throw Error(Errc::InvalidArgument,
                "target index " + std::to_string(target) +
                    " out of range for t=" + std::to_string(inst.size()));
  }
  const ProjSpace& space = inst.space();
  const auto& pts = inst.points();
  auto avoids_others = [&](const Flat& f) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != target && space.contains(f, pts[j])) return false;
    }
    return true;
  };

  SeparatingHyperplane out;
  out.target = target;
  out.chain.push_back(space.point_flat(pts[target]));
  while (out.chain.back().dim() < space.dim() - 1) {
    const auto candidates = space.extensions(out.chain.back());
    const auto it =
        std::find_if(candidates.begin(), candidates.end(), avoids_others);
    if (it == candidates.end()) {
      // Unreachable for t <= q+1: at most t-1 <= q of the >= q+1
      // candidates can be blocked.
      throw Error(Errc::TooManyPoints,
                  "no extension of the dimension-" +
                      std::to_string(out.chain.back().dim()) +
                      " flat avoids the other points");
    }
    out.chain.push_back(*it);
  }
  return out;
}

std::vector<Separator> separating_family(const SeparationInstance& inst) {
  std::vector<Separator> out;
  out.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    auto h = separating_hyperplane(inst, i);
    HomPoly form = inst.space().hyperplane_form(h.hyperplane());
    out.push_back(Separator{std::move(h), std::move(form)});
  }
  return out;
}

HomPoly gap_product(const HomPoly& f, const SeparationInstance& inst) {
  const ProjSpace& space = inst.space();
  if (inst.size() < 2) {
    throw Error(Errc::TooFewPoints, "gap product needs t >= 2 points");
  }
  if (f.nvars() != space.arity()) {
    throw Error(Errc::ArityMismatch, "polynomial arity does not match P^m");
  }
  const auto nonvanishing = nonvanishing_set(f, space);
  const std::set<ProjPoint> expected(inst.points().begin(),
                                     inst.points().end());
  const std::set<ProjPoint> actual(nonvanishing.begin(), nonvanishing.end());
  if (expected != actual) {
    throw Error(Errc::NonvanishingSetMismatch,
                "instance has " + std::to_string(expected.size()) +
                    " points but F is non-vanishing at " +
                    std::to_string(actual.size()) +
                    " points, or the sets differ");
  }

  HomPoly h = f;
  for (std::size_t i = 0; i + 1 < inst.size(); ++i) {
    const auto sep = separating_hyperplane(inst, i);
    h = h * space.hyperplane_form(sep.hyperplane());
  }
  return h;
}

const char* outcome_name(GapOutcome outcome) noexcept {
  switch (outcome) {
    case GapOutcome::VanishesEverywhere: return "vanishes-everywhere";
    case GapOutcome::BoundHolds: return "bound-holds";
    case GapOutcome::Contradiction: return "contradiction";
  }
  return "unknown";
}

ContradictionReport contradiction_report(const ProjSpace& space,
                                         std::uint32_t nu, const HomPoly& f) {
  const std::uint32_t q = space.field().q();
  const auto m = static_cast<std::uint32_t>(space.dim());
  const std::uint32_t base = (m - 1) * (q - 1) + 1;
  if (nu < base || nu - base >= q - 1) {
    throw Error(Errc::WrongRegime,
                "nu=" + std::to_string(nu) + " is not (m-1)(q-1)+s+1 with " +
                    "0 <= s < q-1");
  }
  if (f.degree() != nu) {
    throw Error(Errc::WrongRegime, "deg F=" + std::to_string(f.degree()) +
                                       " differs from nu=" + std::to_string(nu));
  }

  ContradictionReport rep;
  rep.q = q;
  rep.m = space.dim();
  rep.nu = nu;
  rep.s = nu - base;
  rep.n = space.num_points();
  rep.threshold = q - rep.s;
  rep.degree_bound = m * (q - 1);

  const auto nonvanishing = nonvanishing_set(f, space);
  rep.t = nonvanishing.size();
  if (rep.t == 0) {
    rep.outcome = GapOutcome::VanishesEverywhere;
    return rep;
  }
  if (rep.t >= rep.threshold) {
    rep.outcome = GapOutcome::BoundHolds;
    return rep;
  }

  rep.outcome = GapOutcome::Contradiction;
  HomPoly h = f;
  if (rep.t >= 2) {
    h = gap_product(f, SeparationInstance(space, nonvanishing));
  }
  rep.product_degree = h.degree();
  rep.degree_within_bound = rep.product_degree <= rep.degree_bound;
  const auto survivors = nonvanishing_set(h, space);
  rep.product_zero_count = rep.n - survivors.size();
  if (survivors.size() == 1) rep.survivor = survivors.front();
  rep.product = std::move(h);
  return rep;
}

}  // namespace prm
