#pragma once

// Exact monomial moments over the unit sphere |xi'| = 1 in the tangential
// cotangent space R^{2n+3}. Results carry the total volume Vol(S_{2n+2}) as a
// formal unit (the VOL parameter):
//
//   (1/Vol) Int_{S^{d-1}} xi_1^{a_1}..xi_d^{a_d} dsigma
//       = prod_i (a_i - 1)!! / (d (d+2) .. (d + 2(s-1))),   s = sum a_i / 2,
//
// and zero when any exponent is odd.

#include <stdexcept>

#include "wres/clifford.hpp"

namespace wres {

struct LayerError : std::logic_error {
  using std::logic_error::logic_error;
};

// Moment of a single monomial, without the VOL factor.
inline Rat sphere_moment(const XiMono& mono, int n) {
  int d = 2 * n + 3;
  long total = 0;
  for (const auto& [v, e] : mono) {
    if (v < 1 || v > d)
      throw LayerError("sphere_moment: covariable index outside the tangential range");
    if (e < 0) throw LayerError("sphere_moment: negative exponent");
    if (e % 2 == 1) return 0;
    total += e;
  }
  Rat num = 1;
  for (const auto& [v, e] : mono) num *= rat_double_factorial(e - 1);
  Rat den = 1;
  for (long s = 0; s < total / 2; ++s) den *= Rat(d + 2 * s);
  return num / den;
}

// Integrate a scalar xi'-polynomial over the sphere; the result is a
// ScalarPoly proportional to VOL.
inline ScalarPoly sphere_integrate(const XiPoly& p, int n) {
  ScalarPoly vol = ScalarPoly::var(Param::vol());
  ScalarPoly acc;
  for (const auto& [mono, c] : p) {
    Rat mom = sphere_moment(mono, n);
    if (mom == 0) continue;
    acc += c * GaussRat(mom);
  }
  return acc * vol;
}

}  // namespace wres
