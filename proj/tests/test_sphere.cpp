#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wres/sphere.hpp"

using namespace wres;

TEST_CASE("odd moments vanish") {
  CHECK(sphere_moment({{1, 1}}, 2) == 0);
  CHECK(sphere_moment({{1, 2}, {2, 3}}, 2) == 0);
}

TEST_CASE("constant moment is 1") {
  CHECK(sphere_moment({}, 0) == 1);
  CHECK(sphere_moment({}, 3) == 1);
}

TEST_CASE("second moments sum to the volume") {
  for (int n = 0; n <= 4; ++n) {
    int d = 2 * n + 3;
    Rat sum = 0;
    for (int k = 1; k <= d; ++k) sum += sphere_moment({{k, 2}}, n);
    CHECK(sum == 1);
    CHECK(sphere_moment({{1, 2}}, n) == Rat(1, d));
  }
}

TEST_CASE("fourth and mixed moments") {
  int n = 1, d = 2 * n + 3;  // d = 5
  CHECK(sphere_moment({{1, 4}}, n) == Rat(3) / (Rat(d) * Rat(d + 2)));
  CHECK(sphere_moment({{1, 2}, {2, 2}}, n) == Rat(1) / (Rat(d) * Rat(d + 2)));
  // |xi'|^4 integrates to 1: sum over all pairs
  Rat sum = 0;
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b) {
      XiMono mono;
      mono[a] += 2;
      mono[b] += 2;
      sum += sphere_moment(mono, n);
    }
  CHECK(sum == 1);
}

TEST_CASE("layering guard: normal covariable rejected") {
  int n = 1;
  CHECK_THROWS_AS(sphere_moment({{2 * n + 4, 2}}, n), LayerError);
}

TEST_CASE("polynomial integration carries the volume unit") {
  int n = 0;
  XiPoly p;
  xipoly_add(p, {{1, 2}}, ScalarPoly::var(Param::h1()));
  xipoly_add(p, {{2, 1}}, ScalarPoly(7));  // odd, drops out
  ScalarPoly r = sphere_integrate(p, n);
  ScalarPoly want = ScalarPoly::var(Param::h1()) * ScalarPoly::var(Param::vol()) *
                    GaussRat(Rat(1, 3));
  CHECK(r == want);
}
