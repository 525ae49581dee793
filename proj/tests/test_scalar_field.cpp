#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "h4n/cyclotomic.hpp"
#include "h4n/rational.hpp"

using namespace h4n;

TEST_CASE("rational parsing and rendering") {
  CHECK(rat_parse("3") == Rat(3));
  CHECK(rat_parse("-7/2") == Rat(-7, 2));
  CHECK(rat_parse("3/6") == Rat(1, 2));
  CHECK(rat_parse("-0/5") == Rat(0));
  CHECK(rat_str(Rat(1, 2)) == "1/2");
  CHECK(rat_str(Rat(-4, 2)) == "-2");
  CHECK(rat_str(Rat(0)) == "0");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("cyclotomic moduli for the smallest orders are the known polynomials") {
  // Coefficient vectors are low degree first, leading coefficient included.
  CycField f2(2);
  CHECK(f2.degree() == 1);
  CHECK(f2.modulus() == std::vector<Rat>{Rat(1), Rat(1)});  // x + 1

  CycField f4(4);
  CHECK(f4.degree() == 2);
  CHECK(f4.modulus() == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});  // x^2 + 1

  CycField f6(6);
  CHECK(f6.degree() == 2);
  CHECK(f6.modulus() == std::vector<Rat>{Rat(1), Rat(-1), Rat(1)});  // x^2 - x + 1

  CycField f8(8);
  CHECK(f8.degree() == 4);  // x^4 + 1
  CHECK(f8.modulus() == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
}

TEST_CASE("q is a primitive root of its order and q^n = -1") {
  for (int n = 1; n <= 4; ++n) {
    CycField F(2 * n);
    CAPTURE(n);
    CHECK(F.q_power(2 * n) == F.one());
    CHECK(F.q_power(n) == -F.one());
    for (int k = 1; k < 2 * n; ++k) {
      CHECK(F.q_power(k) != F.one());
    }
  }
}

TEST_CASE("q powers follow exponent arithmetic, negative exponents included") {
  CycField F(6);
  for (long i = -4; i <= 7; ++i) {
    for (long j = -4; j <= 7; ++j) {
      CHECK(F.q_power(i) * F.q_power(j) == F.q_power(i + j));
    }
  }
  CHECK(F.q_power(-1) == F.q_power(5));
  CHECK(F.q_power(-1) * F.q_power(1) == F.one());
}

TEST_CASE("geometric sums of root powers collapse") {
  for (int n : {2, 3}) {
    CycField F(2 * n);
    for (int j = 0; j < 2 * n; ++j) {
      Cyc sum = F.zero();
      for (int i = 0; i < 2 * n; ++i) sum = sum + F.q_power(static_cast<long>(i) * j);
      if (j == 0) {
        CHECK(sum == F.from_rational(Rat(2 * n)));
      } else {
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("field axioms on sampled elements") {
  CycField F(8);  // degree 4, enough room for nontrivial coefficient vectors
  auto mk = [&](std::vector<Rat> v) {
    v.resize(static_cast<size_t>(F.degree()), Rat(0));
    return Cyc(&F, v);
  };
  std::vector<Cyc> samples = {
      mk({Rat(1), Rat(2), Rat(0), Rat(-1)}),
      mk({Rat(0), Rat(1, 2), Rat(3), Rat(0)}),
      mk({Rat(-2), Rat(0), Rat(0), Rat(5, 3)}),
      F.q_power(3),
      F.one(),
  };
  for (const Cyc& x : samples) {
    for (const Cyc& y : samples) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      for (const Cyc& z : samples) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
  for (const Cyc& x : samples) {
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == F.one());
    for (const Cyc& y : samples) {
      CHECK((y / x) * x == y);
    }
  }
  CHECK(F.q_power(1).inverse() == F.q_power(-1));
  CHECK_THROWS_AS(F.zero().inverse(), std::domain_error);
}

TEST_CASE("canonical rendering of cyclotomic elements") {
  CycField F(4);
  CHECK(F.zero().str() == "0");
  CHECK(F.one().str() == "1");
  CHECK(F.q_power(1).str() == "q");
  CHECK((-F.q_power(1)).str() == "-q");
  CHECK(F.q_power(2).str() == "-1");  // q^2 = -1 in Q(i)
  Cyc mix = F.from_rational(Rat(1, 2)) + F.q_power(1) * Rat(-3);
  CHECK(mix.str() == "1/2 - 3*q");
  CHECK(mix.coeff_strings() == std::vector<std::string>{"1/2", "-3"});
}

TEST_CASE("rationality predicate picks out the prime field") {
  CycField F(6);
  CHECK(F.from_rational(Rat(7, 3)).is_rational());
  CHECK(F.from_rational(Rat(7, 3)).rat_part() == Rat(7, 3));
  CHECK(!F.q_power(1).is_rational());
  // For order 6, q + q^-1 = 2cos(pi/3) = 1 lands back in Q.
  CHECK((F.q_power(1) + F.q_power(-1)).is_rational());
  CHECK((F.q_power(1) + F.q_power(-1)).rat_part() == Rat(1));
}
