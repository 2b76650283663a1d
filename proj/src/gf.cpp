#include "prm/gf.hpp"

#include <string>

#include "prm/error.hpp"

namespace prm {
namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

// Remainder of a modulo the monic polynomial b, in place.
void reduce_mod(Poly& a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i < db; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
      }
    }
    a.pop_back();
  }
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus,
             std::uint32_t p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  reduce_mod(r, modulus, p);
  return r;
}

Poly digits_of(std::uint32_t value, std::uint32_t p, std::uint32_t count) {
  Poly d(count, 0);
  for (std::uint32_t i = 0; i < count; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `code`.
Poly monic(std::uint32_t code, std::uint32_t p, std::uint32_t degree) {
  Poly f = digits_of(code, p, degree);
  f.push_back(1);
  return f;
}

bool divides(const Poly& divisor, Poly f, std::uint32_t p) {
  reduce_mod(f, divisor, p);
  for (auto c : f) {
    if (c != 0) return false;
  }
  return true;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const auto degree = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code) {
      if (divides(monic(code, p, d), f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::uint32_t max_order) {
  if (!is_prime(p)) {
    throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  }
  if (e < 1) {
    throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order) {
      throw Error(Errc::OrderTooLarge,
                  "field order " + std::to_string(p) + "^" +
                      std::to_string(e) + " exceeds " +
                      std::to_string(max_order));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = static_cast<std::uint32_t>(q);

  if (e == 1) {
    t->modulus = {0, 1};
  } else {
    for (std::uint32_t code = 0;; ++code) {
      Poly f = monic(code, p, e);
      if (is_irreducible(f, p)) {
        t->modulus = std::move(f);
        break;
      }
    }
  }

  const std::uint32_t order = t->q - 1;
  // Smallest nonzero element whose powers reach 1 only after q-1 steps.
  Poly generator;
  for (std::uint32_t g = 1; g < t->q; ++g) {
    const Poly gp = digits_of(g, p, e);
    Poly x = gp;
    std::uint32_t k = 1;
    while (encode(x, p) != 1) {
      x = mul_mod(x, gp, t->modulus, p);
      x.resize(e, 0);
      ++k;
    }
    if (k == order) {
      generator = gp;
      break;
    }
  }

  t->exp.resize(order);
  t->log.assign(t->q, 0);
  Poly x = digits_of(1, p, e);
  for (std::uint32_t i = 0; i < order; ++i) {
    const auto v = static_cast<Elem>(encode(x, p));
    t->exp[i] = v;
    t->log[v] = i;
    x = mul_mod(x, generator, t->modulus, p);
    x.resize(e, 0);
  }

  t->neg.resize(t->q);
  for (std::uint32_t a = 0; a < t->q; ++a) {
    Poly d = digits_of(a, p, e);
    for (auto& c : d) c = (p - c) % p;
    t->neg[a] = static_cast<Elem>(encode(d, p));
  }

  Field field(t);
  if (t->q <= 256) {
    t->add.resize(std::size_t{t->q} * t->q);
    for (std::uint32_t a = 0; a < t->q; ++a) {
      for (std::uint32_t b = 0; b < t->q; ++b) {
        t->add[std::size_t{a} * t->q + b] =
            field.slow_add(static_cast<Elem>(a), static_cast<Elem>(b));
      }
    }
  }
  return field;
}

Field Field::of_order(std::uint32_t q, std::uint32_t max_order) {
  if (q < 2) {
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) {
    throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  }
  return make(p, e, max_order);
}

Elem Field::slow_add(Elem a, Elem b) const noexcept {
  const std::uint32_t p = t_->p;
  if (p == 2) return static_cast<Elem>(a ^ b);
  std::uint32_t x = a;
  std::uint32_t y = b;
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < t_->e; ++i) {
    r += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return static_cast<Elem>(r);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q() - 1;
  return t_->exp[(order - t_->log[a]) % order];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw Error(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
  if (n == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = q() - 1;
  return t_->exp[(std::uint64_t{t_->log[a]} * (n % order)) % order];
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q());
  for (std::uint32_t i = 0; i < q(); ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  return digits_of(a, p(), e());
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() != e()) {
    throw Error(Errc::InvalidArgument, "digit count must equal e");
  }
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p()) throw Error(Errc::InvalidArgument, "digit out of range");
    v = v * p() + d[i];
  }
  return static_cast<Elem>(v);
}

}  // namespace prm
