#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wres/engine.hpp"
#include "wres/numeric.hpp"

// Floating-point cross-checks of the exact contour integration.

using namespace wres;

namespace {

std::mt19937 rng(0xacc0u);

GaussRat rand_coeff() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  return GaussRat(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

// decaying scalar integrand, coefficients rational multiples of h'(0) to
// exercise the parameter binding
RatFun rand_decaying() {
  std::uniform_int_distribution<int> pole(1, 4);
  int a = pole(rng), b = pole(rng);
  CliffPoly num;
  for (int k = 0; k <= a + b - 2; ++k) {
    ScalarPoly c = ScalarPoly(rand_coeff());
    if (k % 2 == 0) c = ScalarPoly::var(Param::h1()) * rand_coeff();
    num.push_back(XiPolyCliff::unit(4) * c);
  }
  return RatFun(num, a, b);
}

}  // namespace

TEST_CASE("quadrature confirms the residue integral on random integrands") {
  auto bind = oracle_binding(4);
  auto xi = oracle_xi_point(4);
  int nontrivial = 0;
  while (nontrivial < 20) {
    RatFun f = rand_decaying();
    if (f.is_zero()) continue;
    ++nontrivial;
    NumericCheck c = numeric_line_check(f, bind, xi, 1e-9);
    INFO("rel err ", c.rel_err);
    CHECK(c.ok);
  }
}

TEST_CASE("the two exact integrators already agree before quadrature") {
  for (int t = 0; t < 20; ++t) {
    RatFun f = rand_decaying();
    CHECK(f.integrate_line() == f.integrate_line_derivform());
  }
}

TEST_CASE("n = 0 first density: zero by both routes, numerically bound") {
  BoundaryReport r = verify(1, 0);
  CHECK(r.total.is_zero());
  ScalarPoly alt;
  for (const auto& c : r.cases) alt += c.alt_value;
  CHECK(alt.is_zero());

  // re-integrate every traced line integrand in floating point
  std::vector<std::pair<RatFun, GaussRat>> tap;
  detail::integrand_tap = &tap;
  verify(1, 0);
  detail::integrand_tap = nullptr;
  CHECK(!tap.empty());
  auto bind = oracle_binding(4);
  auto xi = oracle_xi_point(4);
  for (const auto& [f, pref] : tap) {
    if (f.is_zero()) continue;
    NumericCheck c = numeric_line_check(f, bind, xi, 1e-9);
    CHECK(c.ok);
  }

  // binding the remaining formal unit, Vol(S^2) = 4 pi, the density is 0.0
  const double four_pi = 8 * std::acos(0.0);
  std::map<Param, GaussRat> vols = bind;
  double phi = 0;
  for (const auto& [mono, c] : r.total.substitute(vols).terms())
    phi += to_cx(c).real() * four_pi;
  CHECK(phi == 0.0);
}
