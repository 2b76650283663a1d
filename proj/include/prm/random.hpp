#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "prm/homopoly.hpp"
#include "prm/projgeom.hpp"

namespace prm {

/// SplitMix64. Every randomized routine draws from this generator through
/// below(), so a seed reproduces the same outputs on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

ProjPoint random_point(const ProjSpace& space, SplitMix64& rng);

/// t distinct points, each uniform over the remaining ones.
std::vector<ProjPoint> random_distinct_points(const ProjSpace& space,
                                              std::size_t t, SplitMix64& rng);

/// Span of random points, redrawn until the span has dimension `dim`.
Flat random_flat(const ProjSpace& space, int dim, SplitMix64& rng);

/// Uniformly random coefficients on every monomial of degree nu.
HomPoly random_polynomial(const ProjSpace& space, std::uint32_t nu,
                          SplitMix64& rng);

/// Draws random_polynomial until its non-vanishing count lies in
/// [min_support, max_support], giving up after max_tries draws.
std::optional<HomPoly> sample_polynomial_with_support(
    const ProjSpace& space, std::uint32_t nu, std::uint64_t min_support,
    std::uint64_t max_support, SplitMix64& rng, std::uint64_t max_tries);

}  // namespace prm
