#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wres/rational.hpp"

using namespace wres;

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(rat_parse("10/5")) == "2");
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
}

TEST_CASE("factorials and double factorials") {
  CHECK(rat_factorial(0) == 1);
  CHECK(rat_factorial(6) == 720);
  CHECK(rat_double_factorial(-1) == 1);
  CHECK(rat_double_factorial(0) == 1);
  CHECK(rat_double_factorial(1) == 1);
  CHECK(rat_double_factorial(5) == 15);
  CHECK(rat_double_factorial(7) == 105);
}

TEST_CASE("generalized binomial") {
  CHECK(rat_binomial(5, 2) == 10);
  CHECK(rat_binomial(-1, 3) == -1);
  CHECK(rat_binomial(-2, 2) == 3);   // C(-2,2) = 3
  CHECK(rat_binomial(-3, 1) == -3);
  CHECK(rat_binomial(4, 0) == 1);
}

TEST_CASE("gaussian rational field operations") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  GaussRat z(Rat(3), Rat(-2));
  CHECK(z * z.conj() == GaussRat(Rat(13)));
  CHECK(z / z == GaussRat(1));
  CHECK((GaussRat(1) / (GaussRat(1) + i)) * (GaussRat(1) + i) == GaussRat(1));
  CHECK_THROWS_AS(z / GaussRat(0), std::domain_error);
}

TEST_CASE("powers of i") {
  CHECK(GaussRat::i_pow(0) == GaussRat(1));
  CHECK(GaussRat::i_pow(1) == GaussRat::i());
  CHECK(GaussRat::i_pow(-1) == -GaussRat::i());
  CHECK(GaussRat::i_pow(6) == GaussRat(-1));
  CHECK(GaussRat::i_pow(-7) == GaussRat::i());
}

TEST_CASE("rendering") {
  CHECK(to_string(GaussRat(Rat(1, 2), Rat(-1))) == "1/2-I");
  CHECK(to_string(GaussRat(Rat(0), Rat(3, 4))) == "3/4*I");
  CHECK(to_string(GaussRat(Rat(-2))) == "-2");
}
