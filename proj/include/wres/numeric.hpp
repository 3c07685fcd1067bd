#pragma once

// Floating-point confirmation of the exact line integrals. A traced integrand
// is a rational function of xi_m whose coefficients are polynomials in the
// tangential xi's and the formal parameters; bind both numerically and
// compare integrate_line against adaptive quadrature on the real line
// (substitution xi_m = tan u maps it to a proper integral).

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "wres/ratfun.hpp"

namespace wres {

using Cx = std::complex<double>;

inline Cx to_cx(const GaussRat& z) { return {z.re.get_d(), z.im.get_d()}; }

// Numeric value of a blade-0 coefficient under parameter and xi' bindings.
// xi[k] is the value of xi_k, k = 1 .. m-1; xi[0] is unused.
inline Cx coeff_value(const XiPolyCliff& c, const std::map<Param, GaussRat>& bind,
                      const std::vector<double>& xi) {
  Cx acc = 0;
  for (const auto& [key, s] : c.terms()) {
    if (key.blade != 0)
      throw std::invalid_argument("numeric check: residual Clifford blade");
    ScalarPoly v = s.substitute(bind);
    if (!v.is_constant())
      throw std::invalid_argument("numeric check: unbound parameter");
    double xs = 1.0;
    for (const auto& [var, e] : key.mono) {
      if (var <= 0 || var >= static_cast<int>(xi.size()))
        throw std::invalid_argument("numeric check: xi index out of binding range");
      for (int t = 0; t < e; ++t) xs *= xi[var];
    }
    acc += to_cx(v.constant()) * xs;
  }
  return acc;
}

inline Cx ratfun_eval_numeric(const RatFun& f, const std::map<Param, GaussRat>& bind,
                              const std::vector<double>& xi, double x) {
  Cx num = 0;
  for (std::size_t k = f.numerator().size(); k-- > 0;)
    num = num * Cx(x, 0) + coeff_value(f.numerator()[k], bind, xi);
  Cx den = 1;
  for (int k = 0; k < f.pole_order_plus(); ++k) den *= Cx(x, -1.0);
  for (int k = 0; k < f.pole_order_minus(); ++k) den *= Cx(x, 1.0);
  return num / den;
}

// Integral over the real line by composite Simpson in u, x = tan u. The
// integrand must decay (checked by the caller via decays()); then
// f(tan u) sec^2 u extends continuously to u = +/- pi/2.
inline Cx quadrature_line(const RatFun& f, const std::map<Param, GaussRat>& bind,
                          const std::vector<double>& xi) {
  const double half_pi = std::acos(0.0);
  // limit of f(tan u) sec^2 u at u = +/- pi/2: the top numerator coefficient
  // when the decay is exactly x^{-2}, zero when it is faster
  Cx at_ends = 0;
  if (!f.is_zero() &&
      cliffpoly_deg(f.numerator()) == f.pole_order_plus() + f.pole_order_minus() - 2)
    at_ends = coeff_value(f.numerator().back(), bind, xi);
  auto g = [&](double u) -> Cx {
    double cu = std::cos(u);
    if (cu < 1e-9) return at_ends;
    double x = std::tan(u);
    double sec2 = 1.0 / (cu * cu);
    return ratfun_eval_numeric(f, bind, xi, x) * sec2;
  };
  Cx prev = 0;
  for (int npanels = 64; npanels <= (1 << 22); npanels *= 2) {
    double h = 2 * half_pi / npanels;
    Cx s = g(-half_pi) + g(half_pi);
    for (int k = 1; k < npanels; ++k)
      s += g(-half_pi + k * h) * ((k % 2) ? 4.0 : 2.0);
    Cx cur = s * (h / 3.0);
    if (npanels > 64 && std::abs(cur - prev) <= 1e-13 * (1.0 + std::abs(cur)))
      return cur;
    prev = cur;
  }
  return prev;
}

struct NumericCheck {
  double rel_err{0};
  bool ok{false};
};

// Compare pi * integrate_line (exact residue route) against quadrature.
inline NumericCheck numeric_line_check(const RatFun& f,
                                       const std::map<Param, GaussRat>& bind,
                                       const std::vector<double>& xi, double tol) {
  const double pi = 2 * std::acos(0.0);
  Cx exact = coeff_value(f.integrate_line(), bind, xi) * pi;
  Cx approx = quadrature_line(f, bind, xi);
  NumericCheck r;
  r.rel_err = std::abs(exact - approx) / std::max(1.0, std::abs(exact));
  r.ok = r.rel_err <= tol;
  return r;
}

// Default numeric binding: consistent values for the conformal factor and its
// jets (dfinv_j = -finv^2 df_j), a nonzero h'(0), unit volume.
inline std::map<Param, GaussRat> oracle_binding(int m) {
  std::map<Param, GaussRat> b;
  Rat f(13, 10), finv(10, 13), h1(37, 100);
  b[Param::h1()] = GaussRat(h1);
  b[Param::f()] = GaussRat(f);
  b[Param::finv()] = GaussRat(finv);
  b[Param::vol()] = GaussRat(1);
  for (int j = 1; j <= m; ++j) {
    Rat dfj(2 * j + 1, 20);
    b[Param::df(j)] = GaussRat(dfj);
    b[Param::dfinv(j)] = GaussRat(-finv * finv * dfj);
  }
  return b;
}

// A fixed non-symmetric point on the tangential unit sphere, |xi'| = 1.
inline std::vector<double> oracle_xi_point(int m) {
  std::vector<double> xi(m, 0.0);
  double norm2 = 0;
  for (int k = 1; k < m; ++k) {
    xi[k] = 1.0 + 0.25 * k;
    norm2 += xi[k] * xi[k];
  }
  double s = 1.0 / std::sqrt(norm2);
  for (int k = 1; k < m; ++k) xi[k] *= s;
  return xi;
}

}  // namespace wres
