#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wres/symexpr.hpp"

using namespace wres;

namespace {
constexpr int n = 1;
constexpr int m = 2 * n + 4;
}  // namespace

TEST_CASE("c(xi) squares to -q at h-weight level") {
  SymExpr c = SymExpr::c_xi(m);
  SymExpr sq = c * c;
  // c(xi')^2 = -h |xi'|^2 (weight 2), xi_m^2 c(dxm)^2 = -xi_m^2, cross terms cancel
  SymExpr want(m);
  for (const auto& [k, coeff] : sq.terms()) {
    CHECK((k.h_half == 2 || (k.h_half == 0 && k.xm_deg == 2)));
  }
  // restriction: c(xi)^2 -> -(1 + xi_m^2)
  RatFun r = sq.restrict_unit_sphere();
  CliffPoly want_num = {XiPolyCliff(m), XiPolyCliff(m), XiPolyCliff::unit(m) * GaussRat(-1)};
  XiPolyCliff minus_xiprime_sq(m);
  for (int k = 1; k < m; ++k) minus_xiprime_sq.add_term(0, {{k, 2}}, ScalarPoly(-1));
  want_num[0] = minus_xiprime_sq;
  CHECK(r == RatFun(want_num, 0, 0));
}

TEST_CASE("xi_m derivative of q powers") {
  SymExpr qinv = SymExpr::q_power(m, -n - 1);
  SymExpr d = qinv.d_xi(m);
  // -2(n+1) xi_m q^{-n-2}
  SymExpr want = SymExpr::term(XiPolyCliff::unit(m) * GaussRat(Rat(-2L * (n + 1))), 1,
                               -n - 2, 0);
  CHECK(d == want);
}

TEST_CASE("tangential xi derivative carries h-weight 2") {
  SymExpr qinv = SymExpr::q_power(m, -1);
  SymExpr d = qinv.d_xi(1);
  SymExpr want = SymExpr::term(XiPolyCliff::xi_var(m, 1) * GaussRat(-2), 0, -2, 2);
  CHECK(d == want);
}

TEST_CASE("mixed xi/x partials commute exactly") {
  SymExpr exprs[] = {
      SymExpr::q_power(m, -n - 1),
      SymExpr::c_xi(m) * SymExpr::q_power(m, -1),
      SymExpr::c_xiprime(m) * SymExpr::c_xi(m) * SymExpr::q_power(m, -2),
      SymExpr::c_xi(m) * SymExpr::q_power(m, -n - 2) * SymExpr::c_dxm(m),
  };
  // both orders land at x0, where the h-weights collapse
  for (const SymExpr& e : exprs) {
    for (int j : {1, 2, m}) {
      CHECK(e.d_xi(j).d_x(m).collapse_h() == e.d_x(m).d_xi(j).collapse_h());
      CHECK(e.d_xi(j).d_x(1).collapse_h() == e.d_x(1).d_xi(j).collapse_h());
    }
  }
}

TEST_CASE("normal x-derivative of q^{-1} restricts to the textbook value") {
  // d_xm q^{-1} |_{|xi'|=1} = -h'(0) (1 - xi_m^2 ... ) ; concretely
  // d_xm q^{-1} = -h' t q^{-2}, t -> 1: -h'/(1+xi_m^2)^2
  SymExpr qinv = SymExpr::q_power(m, -1);
  RatFun r = qinv.d_x(m).restrict_unit_sphere();
  ScalarPoly h1 = ScalarPoly::var(Param::h1());
  RatFun want = RatFun({XiPolyCliff::unit(m)}, 2, 2) * (-h1);
  CHECK(r == want);
}

TEST_CASE("tangential x-derivative only sees parameter jets") {
  ScalarPoly f = ScalarPoly::var(Param::f());
  SymExpr e = SymExpr::q_power(m, -1) * f;
  SymExpr d = e.d_x(2);
  SymExpr want = SymExpr::q_power(m, -1) * ScalarPoly::var(Param::df(2));
  CHECK(d == want);
  // h-weighted factors are transparent to tangential x-derivatives
  CHECK(SymExpr::c_xiprime(m).d_x(1).is_zero());
}

TEST_CASE("d_xm c(xi') = (h'/2) c(xi')") {
  SymExpr c = SymExpr::c_xiprime(m);
  SymExpr d = c.d_x(m);
  ScalarPoly h1 = ScalarPoly::var(Param::h1());
  SymExpr want = SymExpr::term(XiPolyCliff::c_xiprime(m) * (h1 * GaussRat(Rat(1, 2))), 0, 0, 0);
  CHECK(d == want);
  CHECK(SymExpr::c_dxm(m).d_x(m).is_zero());
}

TEST_CASE("restriction of positive q powers") {
  SymExpr q2 = SymExpr::q_power(m, 1) * SymExpr::q_power(m, 1);
  RatFun r = q2.restrict_unit_sphere();
  CHECK(r.is_polynomial());
  CHECK(cliffpoly_deg(r.numerator()) == 4);
}

TEST_CASE("restriction merges mixed pole orders over a common denominator") {
  SymExpr e = SymExpr::q_power(m, -1) + SymExpr::q_power(m, -2);
  RatFun r = e.restrict_unit_sphere();
  CHECK(r.pole_order_plus() == 2);
  CHECK(r.pole_order_minus() == 2);
  // numerator = (1+xi_m^2) + 1 = 2 + xi_m^2
  CliffPoly want = {XiPolyCliff::unit(m) * GaussRat(2), XiPolyCliff(m), XiPolyCliff::unit(m)};
  CHECK(r.numerator() == want);
}
