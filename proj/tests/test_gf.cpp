#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "unitals/gf.hpp"

using namespace unitals;
using test::error_of;

TEST_CASE("field construction") {
  CHECK(Field(3, 1).order() == 3);

  const Field f9(3, 2, std::vector<unsigned>{1, 0, 1});
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});

  CHECK(error_of([] { Field(3, 2, std::vector<unsigned>{0, 2, 1}); }) == ErrorCode::ReducibleModulus);
  CHECK(error_of([] { Field(4, 1); }) == ErrorCode::NotPrime);
  CHECK(error_of([] { Field(3, 2, std::vector<unsigned>{1, 1, 0, 1}); }) == ErrorCode::DegreeMismatch);
  CHECK(error_of([] { Field(2, 17); }) == ErrorCode::FieldTooLarge);
}

TEST_CASE("default modulus is the first irreducible polynomial") {
  CHECK(Field(3, 2).modulus() == std::vector<unsigned>{1, 0, 1});
  CHECK(Field(2, 2).modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(Field(5, 2).modulus() == std::vector<unsigned>{2, 0, 1});
  CHECK(Field(2, 4).modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
}

TEST_CASE("irreducibility by trial division") {
  CHECK(is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(is_irreducible({0, 2, 1}, 3));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 5));  // x^2+1 = (x+2)(x+3)
  CHECK(is_irreducible({2, 0, 1}, 5));
}

TEST_CASE("prime powers") {
  CHECK(prime_power(49) == std::pair{7u, 2u});
  CHECK(prime_power(16) == std::pair{2u, 4u});
  CHECK_FALSE(prime_power(12));
  CHECK_FALSE(prime_power(1));
}

TEST_CASE("arithmetic") {
  const Field f3(3, 1);
  CHECK(f3.add(2, 2) == 1);

  const Field f9(3, 2);
  const Elem g = f9.primitive();
  CHECK(f9.mul(g, f9.pow(g, 8)) == f9.pow(g, 9));
  CHECK(f9.pow(g, 9) == g);
  for (Elem e = 1; e < 9; ++e) CHECK(f9.mul(f9.inv(e), e) == 1);
  CHECK(error_of([&] { (void)f9.inv(0); }) == ErrorCode::DivisionByZero);

  SUBCASE("field axioms over GF(16) and GF(25)") {
    for (const Field& f : {Field(2, 4), Field(5, 2)}) {
      for (Elem a = 0; a < f.order(); ++a) {
        CHECK(f.add(a, f.neg(a)) == 0);
        for (Elem b = 0; b < f.order(); ++b) {
          CHECK(f.add(a, b) == f.add(b, a));
          CHECK(f.mul(a, b) == f.mul(b, a));
          const Elem c = (a * 7 + b * 3) % f.order();
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("exp and log are inverse") {
  const Field f(7, 2);
  for (Elem a = 1; a < f.order(); ++a) CHECK(f.exp(f.log(a)) == a);
  for (unsigned k = 0; k + 1 < f.order(); ++k) CHECK(f.log(f.exp(k)) == k);
}

TEST_CASE("quadratic character") {
  const Field f3(3, 1);
  CHECK(f3.quadratic_character(2) == QuadChar::NonSquare);
  CHECK(f3.quadratic_character(0) == QuadChar::Zero);

  const Field f9(3, 2);
  CHECK(f9.quadratic_character(f9.neg(1)) == QuadChar::NonzeroSquare);

  for (const Field& f : {Field(3, 2), Field(5, 2), Field(7, 2), Field(3, 5), Field(7, 4)}) {
    unsigned squares = 0;
    for (Elem e = 1; e < f.order(); ++e) {
      const bool euler = f.pow(e, (f.order() - 1) / 2) == 1;
      CHECK(f.is_nonzero_square(e) == euler);
      squares += euler;
    }
    CHECK(squares == (f.order() - 1) / 2);
  }

  SUBCASE("products of classes") {
    const Field f(5, 2);
    for (Elem a = 1; a < 25; ++a) {
      for (Elem b = 1; b < 25; ++b) {
        if (f.is_nonsquare(a) && f.is_nonsquare(b)) CHECK(f.is_nonzero_square(f.mul(a, b)));
        if (f.is_nonsquare(a) && f.is_nonzero_square(b)) CHECK(f.is_nonsquare(f.mul(a, b)));
      }
    }
  }

  SUBCASE("even characteristic has no non-squares") {
    const Field f(2, 4);
    for (Elem e = 1; e < 16; ++e) CHECK(f.is_nonzero_square(e));
    CHECK(error_of([&] { (void)f.first_nonsquare(); }) == ErrorCode::EvenCharacteristicUnsupported);
  }
}

TEST_CASE("square roots") {
  const Field f9(3, 2);
  CHECK(f9.sqrt(1) == Elem{1});
  CHECK(Field(3, 1).sqrt(0) == Elem{0});
  for (const Field& f : {Field(3, 2), Field(5, 2), Field(2, 4)}) {
    for (Elem e = 0; e < f.order(); ++e) {
      const auto r = f.sqrt(e);
      CHECK(r.has_value() == (f.quadratic_character(e) != QuadChar::NonSquare));
      if (r) {
        CHECK(f.sqr(*r) == e);
        CHECK(*r <= f.neg(*r));
      }
    }
  }
}

TEST_CASE("subfields and norms") {
  const Field f9(3, 2);
  CHECK(f9.subfield_elements(3) == std::vector<Elem>{0, 1, 2});
  CHECK(error_of([&] { (void)f9.subfield_elements(4); }) == ErrorCode::NotASubfieldOrder);

  const Field f25(5, 2);
  const auto sub = f25.subfield_elements(5);
  CHECK(sub.size() == 5);
  for (Elem a : sub) {
    CHECK(f25.pow(a, 5) == a);
    for (Elem b : sub) {
      CHECK(std::ranges::count(sub, f25.add(a, b)) == 1);
      CHECK(std::ranges::count(sub, f25.mul(a, b)) == 1);
    }
    CHECK(std::ranges::count(sub, f25.neg(a)) == 1);
    if (a != 0) CHECK(std::ranges::count(sub, f25.inv(a)) == 1);
  }
  for (Elem e = 0; e < 25; ++e) CHECK(std::ranges::count(sub, f25.frobenius_norm(e, 5)) == 1);

  CHECK(f9.frobenius_norm(0, 3) == 0);
  const Elem g = f9.primitive();
  const Elem n = f9.frobenius_norm(g, 3);
  CHECK(n == f9.pow(g, 4));
  CHECK(n == 2);  // generates GF(3)*
}
