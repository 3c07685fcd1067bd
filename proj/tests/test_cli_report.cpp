#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wres/parser.hpp"
#include "wres/report.hpp"

using namespace wres;

TEST_CASE("JSON reports round-trip byte-identically") {
  for (int thm = 1; thm <= 2; ++thm)
    for (int n = 0; n <= 1; ++n) {
      BoundaryReport r = verify(thm, n);
      std::string once = report_to_json(r).dump(2);
      BoundaryReport back = report_from_json(ordered_json::parse(once));
      std::string twice = report_to_json(back).dump(2);
      CHECK(once == twice);
    }
}

TEST_CASE("JSON and text carry the same values") {
  BoundaryReport r = verify(2, 0);
  BoundaryReport back = report_from_json(report_to_json(r));
  CHECK(back.theorem == r.theorem);
  CHECK(back.n == r.n);
  CHECK(back.total == r.total);
  CHECK(back.paper_total == r.paper_total);
  CHECK(back.aggregate_verdict == r.aggregate_verdict);
  REQUIRE(back.cases.size() == r.cases.size());
  for (std::size_t k = 0; k < r.cases.size(); ++k) {
    CHECK(back.cases[k].id == r.cases[k].id);
    CHECK(back.cases[k].tuple == r.cases[k].tuple);
    CHECK(back.cases[k].value == r.cases[k].value);
    CHECK(back.cases[k].paper_form == r.cases[k].paper_form);
    CHECK(back.cases[k].verdict == r.cases[k].verdict);
  }
  // the text rendering mentions the same verdicts and units
  std::string text = report_to_text(r);
  CHECK(text.find(kUnits) != std::string::npos);
  CHECK(text.find(r.aggregate_verdict) != std::string::npos);
}

TEST_CASE("polynomial values survive the monomial-string encoding") {
  ScalarPoly p = ScalarPoly::var(Param::h1()) * ScalarPoly::var(Param::vol()) *
                     GaussRat(Rat(-5, 8), Rat(1, 3)) +
                 ScalarPoly::var(Param::df(3)) * ScalarPoly::var(Param::df(3)) *
                     GaussRat(Rat(2)) +
                 ScalarPoly(GaussRat(Rat(7, 2))) +
                 ScalarPoly::var(Param::dfinv(12)) * GaussRat(Rat(0), Rat(-1));
  CHECK(value_from_json(value_to_json(p)) == p);
  CHECK(value_from_json(value_to_json(ScalarPoly())) == ScalarPoly());
}

TEST_CASE("expression parser: displayed projections") {
  CHECK(ratfun_to_string(parse_ratfun("xm/(1+xm^2)^2").pi_plus()) ==
        "-I/(4*(xm-I)^2)");
  CHECK(ratfun_to_string(parse_ratfun("1/(1+xm^2)").pi_plus()) ==
        "-I/(2*(xm-I))");
  CHECK(ratfun_to_string(parse_ratfun("1/(1+xm^2)^2").pi_plus()) ==
        "(-I*xm-2)/(4*(xm-I)^2)");
  // anything holomorphic above the axis projects to zero
  CHECK(ratfun_to_string(parse_ratfun("1/(xm+I)").pi_plus()) == "0");
  CHECK(ratfun_to_string(parse_ratfun("(3/2)*xm^2/(1+xm^2)^3").pi_plus()) ==
        "(-3*I*xm^2-9*xm)/(32*(xm-I)^3)");
}

TEST_CASE("expression parser: grammar corners") {
  // rationals, unary minus, whitespace, nested powers
  CHECK(parse_ratfun(" 2/3 * xm ") == parse_ratfun("xm*2/3"));
  CHECK(parse_ratfun("-xm^2") == -(RatFun::xm(4) * RatFun::xm(4)));
  CHECK(parse_ratfun("xm^0") == parse_ratfun("1"));
  CHECK(parse_ratfun("(xm-I)*(xm+I)") == parse_ratfun("xm^2+1"));
  CHECK(parse_ratfun("1/(1+xm^2)") == parse_ratfun("(1+xm^2)^-1"));
  CHECK(parse_ratfun("I*I") == parse_ratfun("-1"));
}

TEST_CASE("expression parser: errors carry a position") {
  CHECK_THROWS_AS(parse_ratfun("xm/(xm+2)"), ParseError);
  CHECK_THROWS_AS(parse_ratfun("1/0"), ParseError);
  CHECK_THROWS_AS(parse_ratfun("xm +"), ParseError);
  CHECK_THROWS_AS(parse_ratfun("(xm"), ParseError);
  CHECK_THROWS_AS(parse_ratfun("xm xm"), ParseError);
  try {
    parse_ratfun("1/(xm+2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.pos == 1);
    CHECK(std::string(e.what()).find("position 1") != std::string::npos);
  }
  // the polynomial part is only rejected at projection time
  CHECK_THROWS_AS(parse_ratfun("xm").pi_plus(), NotInHError);
}

TEST_CASE("scalar renderer normal form") {
  CHECK(ratfun_to_string(RatFun(4)) == "0");
  CHECK(ratfun_to_string(parse_ratfun("xm^2-1")) == "xm^2-1");
  CHECK(ratfun_to_string(parse_ratfun("xm/2+1/3")) == "(3*xm+2)/(6)");
  CHECK(ratfun_to_string(parse_ratfun("I/(xm-I)^2")) == "I/((xm-I)^2)");
}
