#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace prm {

// A field element is the integer whose little-endian base-p digits are the
// coefficients of its residue polynomial modulo the field's modulus.
using Elem = std::uint16_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

bool is_prime(std::uint64_t n) noexcept;

/// Finite field GF(p^e) with exp/log tables.
///
/// Values are cheap to copy: the tables live behind a shared immutable
/// block, so a Field can be stored by value in points, flats and
/// polynomials without duplicating anything.
class Field {
 public:
  /// Builds GF(p^e). The modulus is the monic irreducible polynomial of
  /// degree e with the smallest little-endian encoding of its lower
  /// coefficients; the primitive element is the smallest nonzero element
  /// of multiplicative order q-1.
  static Field make(std::uint32_t p, std::uint32_t e,
                    std::uint32_t max_order = kMaxFieldOrder);

  /// Resolves q to (p, e) by factoring. Throws NotPrimePower otherwise.
  static Field of_order(std::uint32_t q,
                        std::uint32_t max_order = kMaxFieldOrder);

  std::uint32_t p() const noexcept { return t_->p; }
  std::uint32_t e() const noexcept { return t_->e; }
  std::uint32_t q() const noexcept { return t_->q; }

  // Coefficients c_0..c_e of the modulus (c_e = 1). For e = 1 this is x.
  const std::vector<std::uint32_t>& modulus() const noexcept {
    return t_->modulus;
  }
  Elem primitive() const noexcept { return t_->exp[t_->q > 2 ? 1 : 0]; }
  std::span<const Elem> exp_table() const noexcept { return t_->exp; }
  // log_table()[0] is unused and set to 0.
  std::span<const std::uint32_t> log_table() const noexcept { return t_->log; }

  bool contains(std::uint64_t value) const noexcept { return value < q(); }

  Elem add(Elem a, Elem b) const noexcept {
    if (!t_->add.empty()) return t_->add[std::size_t{a} * q() + b];
    return slow_add(a, b);
  }
  Elem neg(Elem a) const noexcept { return t_->neg[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = t_->log[a] + t_->log[b];
    const std::uint32_t order = q() - 1;
    if (s >= order) s -= order;
    return t_->exp[s];
  }
  Elem inv(Elem a) const;           // throws DivisionByZero on 0
  Elem div(Elem a, Elem b) const;   // throws DivisionByZero on b == 0
  Elem pow(Elem a, std::uint64_t n) const noexcept;  // 0^0 = 1

  /// All elements 0, 1, ..., q-1 in encoding order.
  std::vector<Elem> elements() const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.t_ == b.t_ || (a.p() == b.p() && a.e() == b.e());
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<Elem> exp;
    std::vector<std::uint32_t> log;
    std::vector<Elem> neg;
    std::vector<Elem> add;  // q*q table, only for small q
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  Elem slow_add(Elem a, Elem b) const noexcept;

  std::shared_ptr<const Tables> t_;
};

}  // namespace prm
