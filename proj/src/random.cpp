#include "prm/random.hpp"

#include <numeric>

#include "prm/code.hpp"
#include "prm/error.hpp"

namespace prm {

ProjPoint random_point(const ProjSpace& space, SplitMix64& rng) {
  return space.point_at(rng.below(space.num_points()));
}

std::vector<ProjPoint> random_distinct_points(const ProjSpace& space,
                                              std::size_t t, SplitMix64& rng) {
  const std::uint64_t n = space.num_points();
  if (t > n) throw Error(Errc::InvalidArgument, "more points than P^m has");
  // Partial Fisher-Yates over the index range.
  std::vector<std::uint64_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::uint64_t{0});
  std::vector<ProjPoint> out;
  out.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    const std::uint64_t j = i + rng.below(n - i);
    std::swap(idx[i], idx[j]);
    out.push_back(space.point_at(idx[i]));
  }
  return out;
}

Flat random_flat(const ProjSpace& space, int dim, SplitMix64& rng) {
  if (dim < 0 || dim > space.dim()) {
    throw Error(Errc::InvalidArgument, "flat dimension out of range");
  }
  while (true) {
    Matrix gens;
    for (int i = 0; i <= dim; ++i) gens.push_back(random_point(space, rng).coords());
    Flat f = space.span(gens);
    if (f.dim() == dim) return f;
  }
}

HomPoly random_polynomial(const ProjSpace& space, std::uint32_t nu,
                          SplitMix64& rng) {
  const Field& field = space.field();
  HomPoly f(field, space.arity(), nu);
  for (const auto& e : monomials(space.dim(), nu)) {
    f.add_term(e, static_cast<Elem>(rng.below(field.q())));
  }
  return f;
}

std::optional<HomPoly> sample_polynomial_with_support(
    const ProjSpace& space, std::uint32_t nu, std::uint64_t min_support,
    std::uint64_t max_support, SplitMix64& rng, std::uint64_t max_tries) {
  const Field& field = space.field();
  const GenMatrix g = generator_matrix(field, space.dim(), nu);
  const std::size_t rows = g.monomials.size();
  const std::size_t cols = g.points.size();
  Vec coeff(rows);
  Vec word(cols);
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    for (auto& c : coeff) c = static_cast<Elem>(rng.below(field.q()));
    std::fill(word.begin(), word.end(), Elem{0});
    for (std::size_t r = 0; r < rows; ++r) {
      if (coeff[r] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        word[j] = field.add(word[j], field.mul(coeff[r], g.entries[r][j]));
      }
    }
    const std::uint64_t support = hamming_weight(word);
    if (support < min_support || support > max_support) continue;
    HomPoly f(field, space.arity(), nu);
    for (std::size_t r = 0; r < rows; ++r) f.add_term(g.monomials[r], coeff[r]);
    return f;
  }
  return std::nullopt;
}

}  // namespace prm
