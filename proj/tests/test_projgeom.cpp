#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "prm/error.hpp"
#include "prm/homopoly.hpp"
#include "prm/projgeom.hpp"
#include "prm/random.hpp"

using namespace prm;

namespace {

std::vector<Vec> coords_of(const std::vector<ProjPoint>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) out.push_back(p.coords());
  return out;
}

}  // namespace

TEST_CASE("enumerate_points order and counts") {
  const ProjSpace line(Field::of_order(2), 1);
  CHECK(coords_of(line.points()) == std::vector<Vec>{{1, 0}, {1, 1}, {0, 1}});

  CHECK(ProjSpace(Field::of_order(2), 2).points().size() == 7);
  CHECK(ProjSpace(Field::of_order(3), 2).points().size() == 13);

  const ProjSpace plane(Field::of_order(3), 2);
  const auto pts = plane.points();
  CHECK(pts[0].coords() == Vec{1, 0, 0});
  CHECK(pts[1].coords() == Vec{1, 0, 1});
  CHECK(pts[3].coords() == Vec{1, 1, 0});
  CHECK(pts[9].coords() == Vec{0, 1, 0});
  CHECK(pts[12].coords() == Vec{0, 0, 1});
}

TEST_CASE("points are canonical, distinct, and indexable") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(q);
      CAPTURE(m);
      const ProjSpace space(Field::of_order(q), m);
      const auto pts = space.points();
      REQUIRE(pts.size() == projective_point_count(q, m));
      CHECK(std::set<ProjPoint>(pts.begin(), pts.end()).size() == pts.size());
      for (std::uint64_t i = 0; i < pts.size(); ++i) {
        CHECK(space.index_of(pts[i]) == i);
        CHECK(pts[i][leading_index(pts[i].coords())] == 1);
      }
    }
  }
}

TEST_CASE("canonicalize") {
  const ProjSpace p2f3(Field::of_order(3), 2);
  CHECK(p2f3.canonicalize({0, 2, 1}).coords() == Vec{0, 1, 2});
  const ProjSpace p2f2(Field::of_order(2), 2);
  CHECK(p2f2.canonicalize({1, 1, 1}).coords() == Vec{1, 1, 1});

  try {
    p2f3.canonicalize({0, 0, 0});
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroVector);
  }
  try {
    p2f3.canonicalize({1, 0});
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("canonicalize is constant on scalar classes") {
  SplitMix64 rng(7);
  for (std::uint32_t q : {3u, 4u, 5u, 9u}) {
    const ProjSpace space(Field::of_order(q), 3);
    const Field& f = space.field();
    for (int trial = 0; trial < 50; ++trial) {
      Vec v(4);
      do {
        for (auto& x : v) x = static_cast<Elem>(rng.below(q));
      } while (is_zero(v));
      const ProjPoint base = space.canonicalize(v);
      for (Elem lambda = 1; lambda < q; ++lambda) {
        Vec w = v;
        for (auto& x : w) x = f.mul(x, lambda);
        CHECK(space.canonicalize(w) == base);
      }
    }
  }
}

TEST_CASE("span") {
  const ProjSpace space(Field::of_order(2), 2);
  const Flat pt = space.span({{1, 0, 0}});
  CHECK(pt.dim() == 0);
  const Flat line = space.span({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK(line.dim() == 1);
  CHECK(line.basis() == Matrix{{1, 0, 0}, {0, 1, 0}});
  try {
    space.span({{0, 0, 0}});
    FAIL("expected ZeroSpan");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroSpan);
  }
}

TEST_CASE("span basis is invariant under row operations") {
  SplitMix64 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const ProjSpace space(Field::of_order(q), 3);
    const Field& f = space.field();
    for (int j = 0; j <= 3; ++j) {
      for (int trial = 0; trial < 20; ++trial) {
        const Flat flat = random_flat(space, j, rng);
        Matrix gens = flat.basis();
        // Random invertible row operations: swaps, scalings, additions.
        for (int op = 0; op < 10; ++op) {
          const auto a = rng.below(gens.size());
          const auto b = rng.below(gens.size());
          const auto kind = rng.below(3);
          if (kind == 0) {
            std::swap(gens[a], gens[b]);
          } else if (kind == 1) {
            const auto s = static_cast<Elem>(1 + rng.below(q - 1));
            for (auto& x : gens[a]) x = f.mul(x, s);
          } else if (a != b) {
            const auto s = static_cast<Elem>(rng.below(q));
            for (std::size_t c = 0; c < gens[a].size(); ++c)
              gens[a][c] = f.add(gens[a][c], f.mul(s, gens[b][c]));
          }
        }
        CHECK(space.span(gens) == flat);
        CHECK(space.span(gens).dim() == j);
      }
    }
  }
}

TEST_CASE("contains") {
  const ProjSpace space(Field::of_order(2), 2);
  const Flat line = space.span({{1, 0, 0}, {0, 1, 0}});
  CHECK(space.contains(line, space.canonicalize({1, 1, 0})));
  CHECK_FALSE(space.contains(line, space.canonicalize({0, 0, 1})));

  const ProjSpace other(Field::of_order(2), 3);
  CHECK_THROWS_AS(space.contains(line, other.canonicalize({0, 0, 0, 1})), Error);
}

TEST_CASE("flat_points agrees with a membership oracle") {
  SplitMix64 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const ProjSpace space(Field::of_order(q), 3);
    for (int j = 0; j <= 2; ++j) {
      for (int trial = 0; trial < 5; ++trial) {
        const Flat f = random_flat(space, j, rng);
        const auto pts = space.flat_points(f);
        CHECK(pts.size() == projective_point_count(q, j));
        const std::set<ProjPoint> in(pts.begin(), pts.end());
        for (const auto& p : space.points()) {
          const bool truth = oracle::contains_by_enumeration(space, f, p);
          CHECK(space.contains(f, p) == truth);
          CHECK((in.count(p) == 1) == truth);
        }
        for (std::size_t i = 1; i < pts.size(); ++i) {
          CHECK(space.index_of(pts[i - 1]) < space.index_of(pts[i]));
        }
      }
    }
  }
}

TEST_CASE("flat_points sizes") {
  const ProjSpace p2f2(Field::of_order(2), 2);
  CHECK(p2f2.flat_points(p2f2.span({{1, 0, 0}, {0, 1, 0}})).size() == 3);
  const ProjSpace p3f3(Field::of_order(3), 3);
  CHECK(p3f3.flat_points(p3f3.span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}}))
            .size() == 13);
  const ProjPoint p = p3f3.canonicalize({0, 2, 1, 0});
  const auto single = p3f3.flat_points(p3f3.point_flat(p));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == p);
}

TEST_CASE("extensions: counts from small examples") {
  const ProjSpace p2f2(Field::of_order(2), 2);
  CHECK(p2f2.extensions(p2f2.span({{1, 0, 0}})).size() == 3);
  const ProjSpace p2f3(Field::of_order(3), 2);
  CHECK(p2f3.extensions(p2f3.span({{1, 0, 0}})).size() == 4);
  const ProjSpace p3f2(Field::of_order(2), 3);
  CHECK(p3f2.extensions(p3f2.span({{1, 0, 0, 0}, {0, 1, 0, 0}})).size() == 3);

  // Lines through (1,0,0) in P^2(F_3), sorted by basis.
  const auto lines = p2f3.extensions(p2f3.span({{1, 0, 0}}));
  CHECK(lines[0].basis() == Matrix{{1, 0, 0}, {0, 0, 1}});
  CHECK(lines[1].basis() == Matrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(lines[2].basis() == Matrix{{1, 0, 0}, {0, 1, 1}});
  CHECK(lines[3].basis() == Matrix{{1, 0, 0}, {0, 1, 2}});

  try {
    p2f3.extensions(lines[0]);
    FAIL("expected AlreadyHyperplane");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AlreadyHyperplane);
  }
}

TEST_CASE("extensions match brute-force enumeration of all flats") {
  for (std::uint32_t q : {2u, 3u}) {
    for (int m : {2, 3}) {
      const ProjSpace space(Field::of_order(q), m);
      for (int j = 0; j <= m - 2; ++j) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(j);
        const auto bigger = oracle::all_flats(space, j + 1);
        for (const Flat& f : oracle::all_flats(space, j)) {
          std::vector<Flat> expected;
          for (const Flat& g : bigger) {
            const auto fp = space.flat_points(f);
            const bool contains_f = std::all_of(fp.begin(), fp.end(), [&](const ProjPoint& p) {
              return oracle::contains_by_enumeration(space, g, p);
            });
            if (contains_f) expected.push_back(g);
          }
          const auto ext = space.extensions(f);
          CHECK(ext == expected);  // std::set order == basis order
          CHECK(ext.size() == extension_count(q, m, j));
        }
      }
    }
  }
}

TEST_CASE("extensions partition the complement") {
  SplitMix64 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const ProjSpace space(Field::of_order(q), 3);
    for (int j = 0; j <= 1; ++j) {
      const Flat f = random_flat(space, j, rng);
      std::vector<int> hits(space.num_points(), 0);
      for (const auto& g : space.extensions(f))
        for (const auto& p : space.flat_points(g)) ++hits[space.index_of(p)];
      for (const auto& p : space.points()) {
        CHECK(hits[space.index_of(p)] ==
              (space.contains(f, p) ? static_cast<int>(extension_count(q, 3, j)) : 1));
      }
    }
  }
}

TEST_CASE("m = 1: hyperplanes are points") {
  const ProjSpace line(Field::of_order(3), 1);
  const Flat pt = line.point_flat(line.canonicalize({0, 1}));
  CHECK(pt.dim() == 0);
  CHECK_THROWS_AS(line.extensions(pt), Error);
  const HomPoly g = line.hyperplane_form(pt);
  CHECK(g.coefficient({1, 0}) == 1);
  CHECK(g.terms().size() == 1);
}

TEST_CASE("hyperplane_form") {
  const ProjSpace p2f2(Field::of_order(2), 2);
  const HomPoly x2 = p2f2.hyperplane_form(p2f2.span({{1, 0, 0}, {0, 1, 0}}));
  CHECK(x2 == HomPoly::linear(p2f2.field(), {0, 0, 1}));

  const Flat h = p2f2.span({{1, 0, 1}, {0, 1, 1}});
  const HomPoly g = p2f2.hyperplane_form(h);
  CHECK(g == HomPoly::linear(p2f2.field(), {1, 1, 1}));
  CHECK(zero_set(g, p2f2) == p2f2.flat_points(h));

  try {
    p2f2.hyperplane_form(p2f2.span({{1, 0, 0}}));
    FAIL("expected NotHyperplane");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotHyperplane);
  }
}

TEST_CASE("hyperplane_form zero set equals the flat") {
  SplitMix64 rng(9);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    for (int m = 1; m <= 3; ++m) {
      const ProjSpace space(Field::of_order(q), m);
      for (int trial = 0; trial < 10; ++trial) {
        const Flat h = random_flat(space, m - 1, rng);
        const HomPoly g = space.hyperplane_form(h);
        CHECK(zero_set(g, space) == space.flat_points(h));
        const auto& [e, c] = *g.terms().begin();
        CHECK(c == 1);  // leftmost nonzero coefficient
        (void)e;
      }
    }
  }
}
