#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "prm/error.hpp"
#include "prm/gf.hpp"

using namespace prm;

TEST_CASE("prime fields have the trivial modulus") {
  const Field f = Field::make(2, 1);
  CHECK(f.q() == 2);
  CHECK(f.modulus() == std::vector<std::uint32_t>{0, 1});
  CHECK(f.add(1, 1) == 0);
  CHECK(Field::make(5, 1).inv(2) == 3);
}

TEST_CASE("modulus is the smallest irreducible encoding") {
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});

  // Monic cubics x^3 + c2 x^2 + c1 x + c0 over GF(2), encoding
  // c0 + 2 c1 + 4 c2. A cubic is irreducible iff it has no root.
  std::vector<std::uint32_t> irreducible;
  for (std::uint32_t code = 0; code < 8; ++code) {
    const std::uint32_t c0 = code & 1, c1 = (code >> 1) & 1, c2 = code >> 2;
    const bool root0 = c0 == 0;
    const bool root1 = (1 + c2 + c1 + c0) % 2 == 0;
    if (!root0 && !root1) irreducible.push_back(code);
  }
  CHECK(irreducible == std::vector<std::uint32_t>{3, 5});
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("multiplication in GF(4): alpha squared is alpha + 1") {
  const Field f = Field::make(2, 2);
  CHECK(f.mul(2, 2) == 3);
  CHECK(oracle::poly_mul(2, 2, 2, f.modulus()) == 3);
}

TEST_CASE("enumerate_field lists encodings in order") {
  CHECK(Field::make(2, 1).elements() == std::vector<Elem>{0, 1});
  CHECK(Field::of_order(4).elements() == std::vector<Elem>{0, 1, 2, 3});
  const auto nine = Field::of_order(9).elements();
  CHECK(nine.size() == 9);
  CHECK(std::set<Elem>(nine.begin(), nine.end()).size() == 9);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::make(4, 1), Error);
  try {
    Field::make(6, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrime);
  }
  try {
    Field::make(2, 17);
    FAIL("expected OrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderTooLarge);
  }
  try {
    Field::make(3, 3, 20);
    FAIL("expected OrderTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderTooLarge);
  }
  try {
    Field::of_order(12);
    FAIL("expected NotPrimePower");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPrimePower);
  }
  CHECK(Field::of_order(65536).q() == 65536);
}

TEST_CASE("division by zero") {
  const Field f = Field::of_order(7);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(f.div(3, 0), Error);
}

TEST_CASE("exp/log tables realize polynomial multiplication") {
  for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    const auto exp = f.exp_table();
    REQUIRE(exp.size() == q - 1);
    CHECK(exp[0] == 1);
    CHECK(std::set<Elem>(exp.begin(), exp.end()).size() == q - 1);
    CHECK(std::find(exp.begin(), exp.end(), Elem{0}) == exp.end());
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      for (std::uint32_t j = 0; j < q - 1; ++j) {
        CHECK(oracle::poly_mul(exp[i], exp[j], f.p(), f.modulus()) ==
              exp[(i + j) % (q - 1)]);
      }
    }
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (std::uint32_t q = 2; q <= 64; ++q) {
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t rest = q;
    while (rest % p == 0) rest /= p;
    if (rest != 1) continue;
    const Field f = Field::of_order(q);
    CAPTURE(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      const auto x = static_cast<Elem>(a);
      ok &= f.add(x, 0) == x && f.mul(x, 1) == x;
      ok &= f.add(x, f.neg(x)) == 0;
      if (x != 0) ok &= f.mul(x, f.inv(x)) == 1 && f.pow(x, q - 1) == 1;
      ok &= f.pow(x, q) == x;
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        const auto y = static_cast<Elem>(b);
        ok &= f.add(x, y) == f.add(y, x) && f.mul(x, y) == f.mul(y, x);
        ok &= f.sub(f.add(x, y), y) == x;
        if (y != 0) ok &= f.mul(f.div(x, y), y) == x;
        if (q > 16) continue;  // triples only for small fields
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          const auto z = static_cast<Elem>(c);
          ok &= f.add(f.add(x, y), z) == f.add(x, f.add(y, z));
          ok &= f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z));
          ok &= f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("associativity and distributivity over all triples up to q = 64") {
  for (std::uint32_t q : {25u, 27u, 32u, 49u, 64u}) {
    CAPTURE(q);
    const Field f = Field::of_order(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto x = static_cast<Elem>(a), y = static_cast<Elem>(b),
                     z = static_cast<Elem>(c);
          ok &= f.add(f.add(x, y), z) == f.add(x, f.add(y, z));
          ok &= f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z));
          ok &= f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z));
        }
    CHECK(ok);
  }
}

TEST_CASE("digit round trip and large-field addition") {
  const Field f = Field::of_order(3 * 3 * 3 * 3 * 3 * 3 * 3);  // 2187 > table cap
  for (std::uint32_t v = 0; v < f.q(); v += 7) {
    const auto x = static_cast<Elem>(v);
    CHECK(f.from_digits(f.digits(x)) == x);
    CHECK(f.add(x, f.neg(x)) == 0);
  }
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(f.primitive(), f.q() - 1) == 1);
}
