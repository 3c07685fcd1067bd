#pragma once

// Symbol table for the two boundary computations: constructors for every
// stage-A symbol and restricted projection the case evaluations consume,
// parameterized by n (manifold dimension m = 2n+4). Values at the boundary
// point x0 of the collar metric:
//   sigma_0(D)(x0) = c0 c(dx_m),  c0 = -((n+2)/2) h'(0)
//   Gamma^m(x0)    = ((2n+3)/2) h'(0)
//   xi-contracted delta: sum_{k<m} xi_k delta^k = (h'(0)/4) c(xi') c(dx_m)
//   d_xm c(xi')(x0) = (h'(0)/2) c(xi')

#include <stdexcept>
#include <string>
#include <variant>

#include "wres/symexpr.hpp"

namespace wres {

enum class SymbolId {
  SIGMA1_D,
  SIGMA0_D_X0,
  SIGMA_M1_DINV,
  SIGMA_M2_DINV,
  SIGMA_M2_A,
  SIGMA_M2N_AN,
  SIGMA_M2NM1_DPOW,
  SIGMA_M3_A,
  SIGMA_M2NM1_AN,
  SIGMA_M2NM2_DODD,
  PIPLUS_SIGMA_M1,
  PIPLUS_DXM_SIGMA_M1,
  J1,
  J2,
  H1,
  H2,
  GAMMA_M_X0,
  DELTA_K_X0,
};

using SymbolValue = std::variant<SymExpr, RatFun>;

inline void check_n(int n) {
  if (n < 0 || n > 8) throw std::out_of_range("n outside [0, 8]");
}

namespace detail {

inline ScalarPoly h1p() { return ScalarPoly::var(Param::h1()); }

inline ScalarPoly c0(int n) {
  // -(m/4) h'(0) with m = 2n+4
  return h1p() * GaussRat(Rat(-(n + 2), 2));
}

// d_xm c(xi') at x0
inline XiPolyCliff dxm_cxiprime(int m) {
  return XiPolyCliff::c_xiprime(m) * (h1p() * GaussRat(Rat(1, 2)));
}

// c(df^{-1}) = sum_j dfinv_j c(e_j)
inline XiPolyCliff c_dfinv(int m) {
  XiPolyCliff r(m);
  for (int j = 1; j <= m; ++j)
    r += XiPolyCliff::gen(m, j) * ScalarPoly::var(Param::dfinv(j));
  return r;
}

// sigma_{-3}(fD^{-1}f^{-1}D^{-1})(x0) as a stage-A value (q-powers);
// restricting reproduces the displayed form.
inline SymExpr sigma_m3(int n) {
  int m = 2 * n + 4;
  GaussRat i = GaussRat::i();
  SymExpr q2 = SymExpr::q_power(m, -2);
  SymExpr q3 = SymExpr::q_power(m, -3);
  // i q^{-2} [ (h'/2) c(xi')c(dx_m) - ((2n+3)/2) h' xi_m ]
  SymExpr cliff = SymExpr::c_xiprime(m) * SymExpr::from_cliff(XiPolyCliff::c_dxm(m)) *
                  (h1p() * (i * GaussRat(Rat(1, 2))));
  SymExpr scal = SymExpr::term(XiPolyCliff::unit(m), 1, 0, 0) *
                 (h1p() * (i * GaussRat(Rat(-(2 * n + 3), 2))));
  SymExpr first = q2 * (cliff + scal);
  // -2i h' xi_m q^{-3}
  SymExpr second = q3 * SymExpr::term(XiPolyCliff::unit(m), 1, 0, 0) *
                   (h1p() * (i * GaussRat(Rat(-2))));
  // -i q^{-2} sum_{k<m} xi_k c(e_k) f c(df^{-1})  (odd in xi', sphere-killed)
  SymExpr fterm = q2 * SymExpr::c_xiprime(m) *
                  SymExpr::from_cliff(c_dfinv(m) * ScalarPoly::var(Param::f())) * (-i);
  return first + second + fterm;
}

// displayed induction value of sigma_{-2n-1}((fD^-1 f^-1 D^-1)^n): the odd
// Clifford and f terms of sigma_{-3} are already dropped
inline SymExpr sigma_m2nm1_an(int n) {
  int m = 2 * n + 4;
  GaussRat i = GaussRat::i();
  SymExpr xm = SymExpr::term(XiPolyCliff::unit(m), 1, 0, 0);
  SymExpr inner = SymExpr::q_power(m, -2) * xm *
                      (h1p() * (i * GaussRat(Rat(-(2 * n + 3), 2)))) +
                  SymExpr::q_power(m, -3) * xm * (h1p() * (i * GaussRat(Rat(-2))));
  SymExpr first = SymExpr::q_power(m, 1 - n) * inner * GaussRat(Rat(n));
  SymExpr second = SymExpr::q_power(m, -n - 2) * xm *
                   (h1p() * (i * GaussRat(Rat(-(n * n - n)))));
  return first + second;
}

// sigma_{-2n-2}(D^{-2n-1})(x0), the displayed four-term value
inline SymExpr sigma_m2nm2_dodd(int n) {
  int m = 2 * n + 4;
  GaussRat i = GaussRat::i();
  SymExpr xm = SymExpr::term(XiPolyCliff::unit(m), 1, 0, 0);
  SymExpr cxi = SymExpr::c_xiprime(m) + xm * SymExpr::from_cliff(XiPolyCliff::c_dxm(m));
  // ((-2n-3)/4) h' c(dx_m) q^{-n-1}
  SymExpr a = SymExpr::q_power(m, -n - 1) *
              SymExpr::from_cliff(XiPolyCliff::c_dxm(m) *
                                  (h1p() * GaussRat(Rat(-(2 * n + 3), 4))));
  // -2(n+1) xi_m q^{-n-2} d_xm c(xi')
  SymExpr b = SymExpr::q_power(m, -n - 2) * xm *
              SymExpr::from_cliff(dxm_cxiprime(m)) * GaussRat(Rat(-2 * (n + 1)));
  // (n+1) i q^{-n} c(xi) [ -i h'/2 c(xi')c(dx_m) q^{-2} - i(2n+3)h'/2 xi_m q^{-2}
  //                        - 2i h' xi_m q^{-3} ]
  SymExpr inner =
      SymExpr::q_power(m, -2) * SymExpr::c_xiprime(m) *
          SymExpr::from_cliff(XiPolyCliff::c_dxm(m)) *
          (h1p() * (-i * GaussRat(Rat(1, 2)))) +
      SymExpr::q_power(m, -2) * xm * (h1p() * (-i * GaussRat(Rat(2 * n + 3, 2)))) +
      SymExpr::q_power(m, -3) * xm * (h1p() * (-i * GaussRat(Rat(2))));
  SymExpr c = SymExpr::q_power(m, -n) * cxi * inner * (i * GaussRat(Rat(n + 1)));
  // (n^2+n) h' xi_m c(xi) q^{-n-3}
  SymExpr d = SymExpr::q_power(m, -n - 3) * xm * cxi *
              (h1p() * GaussRat(Rat(n * n + n)));
  return a + b + c + d;
}

// sigma_{-2}(D^{-1}) at x0 from the general composition formula
inline SymExpr sigma_m2_dinv(int n) {
  int m = 2 * n + 4;
  SymExpr xm = SymExpr::term(XiPolyCliff::unit(m), 1, 0, 0);
  SymExpr cxi = SymExpr::c_xiprime(m) + xm * SymExpr::from_cliff(XiPolyCliff::c_dxm(m));
  SymExpr s0 = SymExpr::from_cliff(XiPolyCliff::c_dxm(m) * c0(n));
  SymExpr first = cxi * s0 * cxi * SymExpr::q_power(m, -2);
  // only j = m survives at x0:
  //   c(xi) q^{-3} c(dx_m) [ d_xm(c(xi)) q - c(xi) d_xm(|xi|^2) ],
  // with d_xm c(xi) = (h'/2) c(xi') and d_xm |xi|^2 = h' t, t = q - xi_m^2
  SymExpr dq = SymExpr::q_power(m, 1) - xm * xm;  // t as a stage-A value
  SymExpr bracket = SymExpr::from_cliff(dxm_cxiprime(m)) * SymExpr::q_power(m, 1) -
                    cxi * dq * h1p();
  SymExpr second = cxi * SymExpr::q_power(m, -3) *
                   SymExpr::from_cliff(XiPolyCliff::c_dxm(m)) * bracket;
  return first + second;
}

inline XiPolyCliff h1_elem(int n) {
  int m = 2 * n + 4;
  GaussRat i = GaussRat::i();
  XiPolyCliff cp = XiPolyCliff::c_xiprime(m), cm = XiPolyCliff::c_dxm(m);
  XiPolyCliff s0 = cm * c0(n);
  return (cp * s0 * cp + cm * s0 * cm + cp * cm * dxm_cxiprime(m)) * i;
}

inline XiPolyCliff h2_elem(int n) {
  int m = 2 * n + 4;
  GaussRat i = GaussRat::i();
  XiPolyCliff cp = XiPolyCliff::c_xiprime(m), cm = XiPolyCliff::c_dxm(m);
  XiPolyCliff s0 = cm * c0(n);
  XiPolyCliff mixed = cp + cm * i;
  return mixed * s0 * mixed + cp * cm * dxm_cxiprime(m) - dxm_cxiprime(m) * i;
}

inline RatFun j1_fun(int n) {
  int m = 2 * n + 4;
  RatFun t1({h1_elem(n) * GaussRat(Rat(-1, 4))}, 1, 0);
  RatFun t2({h2_elem(n) * GaussRat(Rat(-1, 4))}, 2, 0);
  (void)m;
  return t1 + t2;
}

inline RatFun j2_fun(int n) {
  int m = 2 * n + 4;
  GaussRat i = GaussRat::i();
  XiPolyCliff cp = XiPolyCliff::c_xiprime(m), cm = XiPolyCliff::c_dxm(m);
  ScalarPoly half_h = h1p() * GaussRat(Rat(1, 2));
  // c(dx_m)/(4i(xi_m-i))
  RatFun t1({cm * (GaussRat(1) / (GaussRat(4) * i))}, 1, 0);
  // (c(dx_m) - i c(xi'))/(8 (xi_m-i)^2)
  RatFun t2({(cm - cp * i) * GaussRat(Rat(1, 8))}, 2, 0);
  // (3 xi_m - 7i)/(8 (xi_m-i)^3) (i c(xi') - c(dx_m))
  XiPolyCliff w = (cp * i - cm) * GaussRat(Rat(1, 8));
  RatFun t3({w * (GaussRat(-7) * i), w * GaussRat(3)}, 3, 0);
  return (t1 + t2 + t3) * half_h;
}

}  // namespace detail

inline SymbolValue symbol(SymbolId id, int n) {
  check_n(n);
  int m = 2 * n + 4;
  GaussRat i = GaussRat::i();
  using namespace detail;
  SymExpr xm = SymExpr::term(XiPolyCliff::unit(m), 1, 0, 0);
  SymExpr cxi = SymExpr::c_xiprime(m) + xm * SymExpr::from_cliff(XiPolyCliff::c_dxm(m));
  switch (id) {
    case SymbolId::SIGMA1_D:
      return cxi * i;
    case SymbolId::SIGMA0_D_X0:
      return SymExpr::from_cliff(XiPolyCliff::c_dxm(m) * c0(n));
    case SymbolId::SIGMA_M1_DINV:
      return cxi * SymExpr::q_power(m, -1) * i;
    case SymbolId::SIGMA_M2_DINV:
      return sigma_m2_dinv(n);
    case SymbolId::SIGMA_M2_A:
      return SymExpr::q_power(m, -1);
    case SymbolId::SIGMA_M2N_AN:
      return SymExpr::q_power(m, -n);
    case SymbolId::SIGMA_M2NM1_DPOW:
      return cxi * SymExpr::q_power(m, -n - 1) * i;
    case SymbolId::SIGMA_M3_A:
      return sigma_m3(n);
    case SymbolId::SIGMA_M2NM1_AN:
      return sigma_m2nm1_an(n);
    case SymbolId::SIGMA_M2NM2_DODD:
      return sigma_m2nm2_dodd(n);
    case SymbolId::PIPLUS_SIGMA_M1:
      // (c(xi') + i c(dx_m)) / (2 (xi_m - i))
      return RatFun({(XiPolyCliff::c_xiprime(m) + XiPolyCliff::c_dxm(m) * i) *
                     GaussRat(Rat(1, 2))},
                    1, 0);
    case SymbolId::PIPLUS_DXM_SIGMA_M1:
      // i h'(0) (c(xi') + i c(dx_m)) / (4 (xi_m - i)^2)
      return RatFun({(XiPolyCliff::c_xiprime(m) + XiPolyCliff::c_dxm(m) * i) *
                     (h1p() * (i * GaussRat(Rat(1, 4))))},
                    2, 0);
    case SymbolId::J1:
      return j1_fun(n);
    case SymbolId::J2:
      return j2_fun(n);
    case SymbolId::H1:
      return RatFun::from_cliff(h1_elem(n));
    case SymbolId::H2:
      return RatFun::from_cliff(h2_elem(n));
    case SymbolId::GAMMA_M_X0:
      return SymExpr::from_cliff(XiPolyCliff::unit(m) *
                                 (h1p() * GaussRat(Rat(2 * n + 3, 2))));
    case SymbolId::DELTA_K_X0:
      // xi-contracted: sum_{k<m} xi_k delta^k = (h'/4) c(xi') c(dx_m)
      return SymExpr::from_cliff(XiPolyCliff::c_xiprime(m) * XiPolyCliff::c_dxm(m) *
                                 (h1p() * GaussRat(Rat(1, 4))));
  }
  throw std::invalid_argument("unknown symbol id");
}

inline SymExpr symbol_sym(SymbolId id, int n) { return std::get<SymExpr>(symbol(id, n)); }
inline RatFun symbol_rat(SymbolId id, int n) { return std::get<RatFun>(symbol(id, n)); }

// Remainder of p modulo (|xi'|^2 - 1): rewrite xi_1^2 -> 1 - sum_{k>1} xi_k^2
// until no monomial has xi_1-degree >= 2. Zero remainder certifies that p
// vanishes identically on the unit sphere (the relation ideal is principal).
inline XiPoly xipoly_mod_unit_sphere(XiPoly p, int m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = p.begin(); it != p.end(); ++it) {
      auto d1 = it->first.find(1);
      if (d1 == it->first.end() || d1->second < 2) continue;
      XiMono base = it->first;
      if ((base[1] -= 2) == 0) base.erase(1);
      ScalarPoly c = it->second;
      p.erase(it);
      xipoly_add(p, base, c);
      for (int k = 2; k < m; ++k) {
        XiMono mk = base;
        mk[k] += 2;
        xipoly_add(p, mk, -c);
      }
      changed = true;
      break;
    }
  }
  return p;
}

inline XiPolyCliff cliff_mod_unit_sphere(const XiPolyCliff& v) {
  int m = v.dim();
  // group by blade, reduce each polynomial coefficient
  std::map<Blade, XiPoly> by_blade;
  for (const auto& [key, c] : v.terms()) xipoly_add(by_blade[key.blade], key.mono, c);
  XiPolyCliff r(m);
  for (auto& [blade, poly] : by_blade)
    for (const auto& [mono, c] : xipoly_mod_unit_sphere(std::move(poly), m))
      r.add_term(blade, mono, c);
  return r;
}

inline RatFun ratfun_mod_unit_sphere(const RatFun& f) {
  CliffPoly num;
  num.reserve(f.numerator().size());
  for (const auto& c : f.numerator()) num.push_back(cliff_mod_unit_sphere(c));
  return RatFun(num, f.pole_order_plus(), f.pole_order_minus());
}

struct CrosscheckResult {
  bool equal{false};
  RatFun derived;   // pi_plus of the composition-formula sigma_{-2}(D^{-1})
  RatFun displayed; // J1 - J2
  RatFun diff;
};

// Rebuild pi^+ sigma_{-2}(D^{-1})(x0)|_{|xi'|=1} from the composition formula
// and compare with the imported display J1 - J2.
inline CrosscheckResult crosscheck_piplus_sigma_m2(int n) {
  check_n(n);
  CrosscheckResult r;
  RatFun restricted = symbol_sym(SymbolId::SIGMA_M2_DINV, n).restrict_unit_sphere();
  r.derived = restricted.pi_plus();
  r.displayed = symbol_rat(SymbolId::J1, n) - symbol_rat(SymbolId::J2, n);
  // both sides only claim equality on |xi'| = 1
  r.diff = ratfun_mod_unit_sphere(r.derived - r.displayed);
  r.equal = r.diff.is_zero();
  return r;
}

inline std::string symbol_name(SymbolId id) {
  switch (id) {
    case SymbolId::SIGMA1_D: return "SIGMA1_D";
    case SymbolId::SIGMA0_D_X0: return "SIGMA0_D_X0";
    case SymbolId::SIGMA_M1_DINV: return "SIGMA_M1_DINV";
    case SymbolId::SIGMA_M2_DINV: return "SIGMA_M2_DINV";
    case SymbolId::SIGMA_M2_A: return "SIGMA_M2_A";
    case SymbolId::SIGMA_M2N_AN: return "SIGMA_M2N_AN";
    case SymbolId::SIGMA_M2NM1_DPOW: return "SIGMA_M2NM1_DPOW";
    case SymbolId::SIGMA_M3_A: return "SIGMA_M3_A";
    case SymbolId::SIGMA_M2NM1_AN: return "SIGMA_M2NM1_AN";
    case SymbolId::SIGMA_M2NM2_DODD: return "SIGMA_M2NM2_DODD";
    case SymbolId::PIPLUS_SIGMA_M1: return "PIPLUS_SIGMA_M1";
    case SymbolId::PIPLUS_DXM_SIGMA_M1: return "PIPLUS_DXM_SIGMA_M1";
    case SymbolId::J1: return "J1";
    case SymbolId::J2: return "J2";
    case SymbolId::H1: return "H1";
    case SymbolId::H2: return "H2";
    case SymbolId::GAMMA_M_X0: return "GAMMA_M_X0";
    case SymbolId::DELTA_K_X0: return "DELTA_K_X0";
  }
  return "?";
}

inline bool symbol_from_name(const std::string& s, SymbolId& out) {
  for (int k = 0; k <= static_cast<int>(SymbolId::DELTA_K_X0); ++k) {
    SymbolId id = static_cast<SymbolId>(k);
    if (symbol_name(id) == s) {
      out = id;
      return true;
    }
  }
  return false;
}

}  // namespace wres
