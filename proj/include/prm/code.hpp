#pragma once

#include <cstdint>
#include <vector>

#include "prm/gf.hpp"
#include "prm/homopoly.hpp"
#include "prm/linalg.hpp"
#include "prm/projgeom.hpp"

namespace prm {

/// Parameters [n, k, d] of the projective Reed-Muller code PC_nu(m, q),
/// with nu - 1 = r(q-1) + s, 0 <= s < q-1.
struct CodeParams {
  std::uint32_t q = 0;
  int m = 0;
  std::uint32_t nu = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint32_t r = 0;
  std::uint32_t s = 0;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Evaluation matrix of all degree-nu monomials at the canonical points.
/// Row i belongs to monomials[i] (lex-descending), column j to points[j]
/// (canonical point order).
struct GenMatrix {
  std::uint32_t q = 0;
  int m = 0;
  std::uint32_t nu = 0;
  std::vector<Exponents> monomials;
  std::vector<ProjPoint> points;
  Matrix entries;
};

/// Throws NuOutOfRange unless 1 <= nu <= m(q-1).
void check_nu(std::uint32_t q, int m, std::uint32_t nu);

/// All exponent vectors of length m+1 summing to nu, lex-descending.
std::vector<Exponents> monomials(int m, std::uint32_t nu);

GenMatrix generator_matrix(const Field& field, int m, std::uint32_t nu);

/// Closed-form dimension: sum over 0 < t <= nu with t = nu (mod q-1) of
/// sum_j (-1)^j C(m+1, j) C(t - jq + m, t - jq), where C(a, b) = 0 for
/// b < 0. Evaluated with arbitrary-precision integers.
std::uint64_t dimension_formula(std::uint32_t q, int m, std::uint32_t nu);

/// Closed-form n, k, d together with the (r, s) decomposition of nu - 1.
CodeParams distance_formula(std::uint32_t q, int m, std::uint32_t nu);

/// (q^k - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t projective_message_count(std::uint64_t q, std::uint64_t k);

std::size_t hamming_weight(const Vec& word) noexcept;

/// Minimum Hamming weight over the nonzero row space of `basis` (assumed
/// linearly independent). One message per scalar class is enumerated: the
/// first nonzero message coordinate is fixed to 1. The class index space is
/// split into `partitions` contiguous ranges searched on separate threads
/// (0 picks the hardware concurrency); the result does not depend on it.
/// Throws BudgetExceeded when the class count exceeds `budget`.
std::uint64_t min_weight_of_basis(const Field& field, const Matrix& basis,
                                  std::uint64_t budget,
                                  unsigned partitions = 0);

/// Minimum distance of PC_nu(m, q) by exhaustive search.
std::uint64_t min_weight_exhaustive(const Field& field, int m,
                                    std::uint32_t nu, std::uint64_t budget,
                                    unsigned partitions = 0);

/// True iff for every degree 1 <= nu <= m(q-1) no nonzero homogeneous
/// polynomial has exactly one non-vanishing point (min weight >= 2).
bool verify_no_single_nonvanishing(const Field& field, int m,
                                   std::uint64_t budget,
                                   unsigned partitions = 0);

}  // namespace prm
