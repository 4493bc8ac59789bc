#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "pscode/field.hpp"

using namespace pscode;

TEST_CASE("default moduli are the least irreducible polynomials") {
  CHECK(default_modulus(1) == 0b10);
  CHECK(default_modulus(2) == 0b111);
  CHECK(default_modulus(3) == 0b1011);
  CHECK(default_modulus(4) == 0b10011);
  CHECK(Field(3).order() == 8);
}

TEST_CASE("irreducibility check") {
  CHECK(is_irreducible(0b111));
  CHECK_FALSE(is_irreducible(0b101));  // (x+1)^2
  CHECK_FALSE(is_irreducible(0b110));  // x(x+1)
  CHECK(is_irreducible(0b1101));
  CHECK_FALSE(is_irreducible(0b10101));  // (x^2+x+1)^2
  CHECK_FALSE(is_irreducible(1));
}

TEST_CASE("modulus override is validated") {
  CHECK_NOTHROW(Field(3, 0b1101));
  CHECK_THROWS_AS(Field(2, 0b101), std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 0b111), std::invalid_argument);  // wrong degree
  CHECK_THROWS_AS(Field(0), std::invalid_argument);
  CHECK_THROWS_AS(Field(17), std::invalid_argument);
}

TEST_CASE("worked examples") {
  const Field f2(1);
  CHECK(f2.add(kOne, kOne) == kZero);
  CHECK(f2.inv(kOne) == kOne);

  const Field f4(2, 0b111);
  const Fe x{0b10};
  CHECK(f4.mul(x, x) == Fe{0b11});  // x^2 = x + 1
}

TEST_CASE("errors") {
  const Field f4(2);
  CHECK_THROWS_AS(f4.inv(kZero), std::domain_error);
  CHECK_THROWS_AS(f4.add(Fe{4}, kOne), std::out_of_range);
  CHECK_THROWS_AS(f4.mul(kOne, Fe{7}), std::out_of_range);
}

TEST_CASE("elements are listed once in increasing order") {
  CHECK(Field(1).elements() == std::vector<Fe>{Fe{0}, Fe{1}});
  const auto e4 = Field(2).elements();
  CHECK(e4.size() == 4);
  CHECK(e4.front() == kZero);
  const auto e8 = Field(3).elements();
  CHECK(e8.size() == 8);
  CHECK(std::is_sorted(e8.begin(), e8.end()));
}

TEST_CASE("field axioms hold exhaustively for q in {2, 4, 8}") {
  for (unsigned e : {1u, 2u, 3u}) {
    const Field f(e);
    CAPTURE(e);
    const auto el = f.elements();
    std::set<Fe> squares;
    for (Fe a : el) {
      CHECK(f.add(a, a) == kZero);
      squares.insert(f.mul(a, a));
      if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == kOne);
      for (Fe b : el) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (Fe c : el) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    // Frobenius is a bijection.
    CHECK(squares.size() == el.size());
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  const Field f(4);
  for (Fe a : f.elements()) {
    Fe acc = kOne;
    for (std::uint64_t k = 0; k < 20; ++k) {
      CHECK(f.pow(a, k) == acc);
      acc = f.mul(acc, a);
    }
  }
}

TEST_CASE("table-free path for e > 8 agrees on inverses") {
  const Field f(10);
  for (std::uint32_t b = 1; b < f.order(); b += 37) {
    const Fe a{b};
    CHECK(f.mul(a, f.inv(a)) == kOne);
  }
}
