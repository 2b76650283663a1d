#include "prm/code.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <string>
#include <thread>

#include "prm/error.hpp"

namespace prm {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  BigInt r = 1;
  b = std::min(b, a - b);
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(Errc::InvalidArgument,
                std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

void append_monomials(Exponents& prefix, std::size_t nvars, std::uint32_t rest,
                      std::vector<Exponents>& out) {
  if (prefix.size() + 1 == nvars) {
    prefix.push_back(rest);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint32_t e = rest + 1; e-- > 0;) {
    prefix.push_back(e);
    append_monomials(prefix, nvars, rest - e, out);
    prefix.pop_back();
  }
}

// Exhaustive search over the message classes [begin, end). Class indices
// follow the canonical point order of P^(k-1): grouped by the position of
// the leading 1, trailing digits counting upward, rightmost fastest.
class ClassWalker {
 public:
  ClassWalker(const Field& field, const Matrix& basis)
      : field_(field), basis_(basis), k_(basis.size()), n_(basis[0].size()) {
    const std::uint32_t q = field.q();
    block_sizes_.resize(k_);
    std::uint64_t size = 1;
    for (std::size_t lead = k_; lead-- > 0;) {
      block_sizes_[lead] = size;
      size *= q;
    }
    // step_[r][a]: change of the codeword when message digit r moves from
    // element a to element (a + 1) mod q in encoding order.
    step_.resize(k_);
    for (std::size_t r = 0; r < k_; ++r) {
      step_[r].resize(q);
      for (std::uint32_t a = 0; a < q; ++a) {
        const auto from = static_cast<Elem>(a);
        const auto to = static_cast<Elem>((a + 1) % q);
        Vec d(n_);
        for (std::size_t j = 0; j < n_; ++j) {
          d[j] = field.sub(field.mul(to, basis[r][j]),
                           field.mul(from, basis[r][j]));
        }
        step_[r][a] = std::move(d);
      }
    }
  }

  std::uint64_t min_weight(std::uint64_t begin, std::uint64_t end) const {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    if (begin >= end) return best;
    const std::uint32_t q = field_.q();

    std::size_t lead = 0;
    std::uint64_t offset = begin;
    while (offset >= block_sizes_[lead]) offset -= block_sizes_[lead++];

    std::vector<std::uint32_t> digits;
    Vec word;
    auto load = [&]() {
      digits.assign(k_, 0);
      digits[lead] = 1;
      std::uint64_t rest = offset;
      for (std::size_t i = k_; i-- > lead + 1;) {
        digits[i] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      word.assign(n_, 0);
      for (std::size_t r = lead; r < k_; ++r) {
        if (digits[r] == 0) continue;
        const auto a = static_cast<Elem>(digits[r]);
        for (std::size_t j = 0; j < n_; ++j) {
          word[j] = field_.add(word[j], field_.mul(a, basis_[r][j]));
        }
      }
    };
    load();

    for (std::uint64_t idx = begin; idx < end; ++idx) {
      best = std::min<std::uint64_t>(best, hamming_weight(word));
      if (idx + 1 == end) break;
      // Advance the odometer; a full wrap moves to the next block.
      bool wrapped = true;
      for (std::size_t pos = k_; pos > lead + 1;) {
        --pos;
        const Vec& d = step_[pos][digits[pos]];
        for (std::size_t j = 0; j < n_; ++j) word[j] = field_.add(word[j], d[j]);
        if (++digits[pos] < q) {
          wrapped = false;
          break;
        }
        digits[pos] = 0;
      }
      if (wrapped) {
        ++lead;
        offset = 0;
        load();
      }
    }
    return best;
  }

 private:
  const Field& field_;
  const Matrix& basis_;
  std::size_t k_;
  std::size_t n_;
  std::vector<std::uint64_t> block_sizes_;
  std::vector<std::vector<Vec>> step_;
};

}  // namespace

void check_nu(std::uint32_t q, int m, std::uint32_t nu) {
  if (q < 2) throw Error(Errc::InvalidArgument, "q must be >= 2");
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be >= 1");
  const std::uint64_t top = std::uint64_t(m) * (q - 1);
  if (nu < 1) throw Error(Errc::NuOutOfRange, "nu must be >= 1");
  if (nu > top) {
    throw Error(Errc::NuOutOfRange,
                "nu exceeds m(q-1)=" + std::to_string(top));
  }
}

std::vector<Exponents> monomials(int m, std::uint32_t nu) {
  if (m < 0) throw Error(Errc::InvalidArgument, "m must be >= 0");
  std::vector<Exponents> out;
  Exponents prefix;
  append_monomials(prefix, static_cast<std::size_t>(m) + 1, nu, out);
  return out;
}

GenMatrix generator_matrix(const Field& field, int m, std::uint32_t nu) {
  check_nu(field.q(), m, nu);
  const ProjSpace space(field, m);
  GenMatrix g;
  g.q = field.q();
  g.m = m;
  g.nu = nu;
  g.monomials = monomials(m, nu);
  g.points = space.points();
  g.entries.reserve(g.monomials.size());
  for (const auto& exps : g.monomials) {
    Vec row;
    row.reserve(g.points.size());
    for (const auto& p : g.points) {
      Elem v = 1;
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] != 0) v = field.mul(v, field.pow(p[i], exps[i]));
      }
      row.push_back(v);
    }
    g.entries.push_back(std::move(row));
  }
  return g;
}

std::uint64_t dimension_formula(std::uint32_t q, int m, std::uint32_t nu) {
  check_nu(q, m, nu);
  // Stepping t down by q-1 from nu visits exactly the t in (0, nu] with
  // t = nu (mod q-1); for q = 2 that is every t.
  BigInt k = 0;
  const std::int64_t step = q - 1;
  for (std::int64_t t = nu; t > 0; t -= step) {
    BigInt inner = 0;
    for (std::int64_t j = 0; j <= m + 1; ++j) {
      const std::int64_t b = t - j * std::int64_t{q};
      BigInt term = binomial(m + 1, j) * binomial(b + m, b);
      if (j % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
    k += inner;
  }
  return to_u64(k, "dimension");
}

CodeParams distance_formula(std::uint32_t q, int m, std::uint32_t nu) {
  check_nu(q, m, nu);
  CodeParams c;
  c.q = q;
  c.m = m;
  c.nu = nu;
  c.n = projective_point_count(q, m);
  c.k = dimension_formula(q, m, nu);
  c.r = (nu - 1) / (q - 1);
  c.s = (nu - 1) % (q - 1);
  BigInt d = q - c.s;
  for (int i = 0; i < m - static_cast<int>(c.r) - 1; ++i) d *= q;
  c.d = to_u64(d, "distance");
  return c;
}

std::uint64_t projective_message_count(std::uint64_t q, std::uint64_t k) {
  BigInt v = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    v *= q;
    if (v > BigInt(std::numeric_limits<std::uint64_t>::max()) * (q - 1)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>((v - 1) / (q - 1));
}

std::size_t hamming_weight(const Vec& word) noexcept {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [](Elem x) { return x != 0; }));
}

std::uint64_t min_weight_of_basis(const Field& field, const Matrix& basis,
                                  std::uint64_t budget, unsigned partitions) {
  if (basis.empty()) {
    throw Error(Errc::InvalidArgument, "code has no nonzero codewords");
  }
  const std::uint64_t total = projective_message_count(field.q(), basis.size());
  if (total > budget) throw BudgetExceeded(total, budget);

  if (partitions == 0) partitions = std::max(1u, std::thread::hardware_concurrency());
  const auto parts =
      static_cast<unsigned>(std::min<std::uint64_t>(partitions, total));

  const ClassWalker walker(field, basis);
  std::vector<std::uint64_t> best(parts);
  auto range = [&](unsigned i) {
    const auto wide = static_cast<unsigned __int128>(total);
    return std::pair<std::uint64_t, std::uint64_t>(
        static_cast<std::uint64_t>(wide * i / parts),
        static_cast<std::uint64_t>(wide * (i + 1) / parts));
  };
  if (parts == 1) {
    best[0] = walker.min_weight(0, total);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(parts);
    for (unsigned i = 0; i < parts; ++i) {
      workers.emplace_back([&, i] {
        const auto [b, e] = range(i);
        best[i] = walker.min_weight(b, e);
      });
    }
  }
  return *std::min_element(best.begin(), best.end());
}

std::uint64_t min_weight_exhaustive(const Field& field, int m,
                                    std::uint32_t nu, std::uint64_t budget,
                                    unsigned partitions) {
  const GenMatrix g = generator_matrix(field, m, nu);
  const Matrix basis = rref(field, g.entries);
  return min_weight_of_basis(field, basis, budget, partitions);
}

bool verify_no_single_nonvanishing(const Field& field, int m,
                                   std::uint64_t budget, unsigned partitions) {
  const std::uint32_t top = static_cast<std::uint32_t>(m) * (field.q() - 1);
  for (std::uint32_t nu = 1; nu <= top; ++nu) {
    if (min_weight_exhaustive(field, m, nu, budget, partitions) < 2) {
      return false;
    }
  }
  return true;
}

}  // namespace prm
