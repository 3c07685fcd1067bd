#pragma once

// Stage-A symbol values: Clifford-valued Laurent expressions in q = |xi|^2
// with polynomial xi', xi_m dependence, evaluated at the boundary point x0 of
// the collar metric h(x_m)^{-1} g' + dx_m^2. Tangential xi-derivatives are
// taken here, before restriction to |xi'| = 1.
//
// Each term carries an h-weight (power of sqrt(h(x_m)) picked up from the
// tangential coframe); the single normal x-derivative consumes it:
//   d_xm q = h'(0) t,  t = q - xi_m^2
//   d_xm (sqrt(h)-weighted factor) = (w/2) h'(0) x (factor)
// Outputs of d_x live at x0 and carry no residual h-weight.

#include <map>
#include <stdexcept>

#include "wres/ratfun.hpp"

namespace wres {

class SymExpr {
 public:
  struct Key {
    int xm_deg;
    int q_pow;
    int h_half;  // power of sqrt(h(x_m)) attached to the term
    auto operator<=>(const Key&) const = default;
  };
  using Terms = std::map<Key, XiPolyCliff>;

  SymExpr() = default;
  explicit SymExpr(int m) : m_(m) {}

  static SymExpr term(XiPolyCliff coeff, int xm_deg, int q_pow, int h_half = 0) {
    SymExpr e(coeff.dim());
    e.add(Key{xm_deg, q_pow, h_half}, coeff);
    return e;
  }
  static SymExpr from_cliff(const XiPolyCliff& c) { return term(c, 0, 0, 0); }
  // c(xi') carries one coframe factor sqrt(h)
  static SymExpr c_xiprime(int m) {
    return term(XiPolyCliff::c_xiprime(m), 0, 0, 1);
  }
  static SymExpr c_dxm(int m) { return term(XiPolyCliff::c_dxm(m), 0, 0, 0); }
  // c(xi) = c(xi') + xi_m c(dx_m)
  static SymExpr c_xi(int m) {
    SymExpr e = c_xiprime(m);
    e.add(Key{1, 0, 0}, XiPolyCliff::c_dxm(m));
    return e;
  }
  static SymExpr q_power(int m, int p) {
    return term(XiPolyCliff::unit(m), 0, p, 0);
  }

  int dim() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const XiPolyCliff& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms_.emplace(k, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymExpr operator-() const {
    SymExpr r(m_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  SymExpr& operator+=(const SymExpr& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SymExpr operator+(const SymExpr& o) const {
    SymExpr r(*this);
    return r += o;
  }
  SymExpr operator-(const SymExpr& o) const { return *this + (-o); }
  SymExpr operator*(const SymExpr& o) const {
    if (m_ != o.m_ && m_ != 0 && o.m_ != 0)
      throw std::invalid_argument("SymExpr dimension mismatch");
    SymExpr r(m_ ? m_ : o.m_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_)
        r.add(Key{ka.xm_deg + kb.xm_deg, ka.q_pow + kb.q_pow, ka.h_half + kb.h_half},
              ca * cb);
    return r;
  }
  SymExpr operator*(const GaussRat& c) const {
    SymExpr r(m_);
    for (const auto& [k, x] : terms_) {
      XiPolyCliff t = x * c;
      if (!t.is_zero()) r.terms_[k] = t;
    }
    return r;
  }
  SymExpr operator*(const ScalarPoly& s) const {
    SymExpr r(m_);
    for (const auto& [k, x] : terms_) {
      XiPolyCliff t = x * s;
      if (!t.is_zero()) r.terms_[k] = t;
    }
    return r;
  }

  bool operator==(const SymExpr& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymExpr& o) const { return !(*this == o); }

  // Formal d/dxi_j (tangential, j < m) or d/dxi_m (j == m).
  //   d_xi_j q = 2 h xi_j   (h-weight 2 on the produced factor)
  //   d_xi_m q = 2 xi_m
  SymExpr d_xi(int j) const {
    SymExpr r(m_);
    if (j == m_) {
      for (const auto& [k, c] : terms_) {
        if (k.xm_deg > 0)
          r.add(Key{k.xm_deg - 1, k.q_pow, k.h_half}, c * GaussRat(Rat(k.xm_deg)));
        if (k.q_pow != 0)
          r.add(Key{k.xm_deg + 1, k.q_pow - 1, k.h_half}, c * GaussRat(Rat(2L * k.q_pow)));
      }
      return r;
    }
    if (j < 1 || j >= m_) throw std::out_of_range("xi direction");
    XiPolyCliff xj = XiPolyCliff::xi_var(m_, j);
    for (const auto& [k, c] : terms_) {
      XiPolyCliff dc = c.d_xi(j);
      if (!dc.is_zero()) r.add(k, dc);
      if (k.q_pow != 0)
        r.add(Key{k.xm_deg, k.q_pow - 1, k.h_half + 2},
              c * xj * GaussRat(Rat(2L * k.q_pow)));
    }
    return r;
  }

  // First x-derivative at x0. Tangential directions only touch the f-jet
  // parameters; the normal direction also acts on q and the h-weights.
  // The result lives at x0 (h-weights cleared); only one x-derivative is
  // ever needed.
  SymExpr d_x(int j) const {
    SymExpr r(m_);
    ScalarPoly h1 = ScalarPoly::var(Param::h1());
    for (const auto& [k, c] : terms_) {
      Key at0{k.xm_deg, k.q_pow, 0};
      // parameter jets
      XiPolyCliff dparams = map_scalars(c, j);
      if (!dparams.is_zero()) r.add(at0, dparams);
      if (j != m_) continue;
      if (k.h_half != 0)
        r.add(at0, c * (h1 * GaussRat(Rat(k.h_half, 2))));
      if (k.q_pow != 0) {
        // p h' t q^{p-1},  t = q - xi_m^2
        GaussRat p(Rat(k.q_pow));
        r.add(Key{k.xm_deg, k.q_pow, 0}, c * (h1 * p));
        r.add(Key{k.xm_deg + 2, k.q_pow - 1, 0}, c * (h1 * (-p)));
      }
    }
    return r;
  }

  // Merge the h-weights away (h(0) = 1); valid for expressions evaluated at
  // x0, i.e. once no further normal x-derivative will be taken.
  SymExpr collapse_h() const {
    SymExpr r(m_);
    for (const auto& [k, c] : terms_) r.add(Key{k.xm_deg, k.q_pow, 0}, c);
    return r;
  }

  // Substitute t -> 1 (q -> 1 + xi_m^2); negative q-powers become poles of
  // the rational function at +/-i.
  RatFun restrict_unit_sphere() const {
    RatFun out(m_);
    for (const auto& [k, c] : terms_) {
      CliffPoly num(k.xm_deg + 1, XiPolyCliff(m_));
      num[k.xm_deg] = c;
      int a = 0, b = 0, p = k.q_pow;
      if (p >= 0) {
        CliffPoly onep = {XiPolyCliff::unit(m_), XiPolyCliff(m_), XiPolyCliff::unit(m_)};
        for (int t = 0; t < p; ++t) num = cliffpoly_mul(num, onep);
      } else {
        a = b = -p;
      }
      out = out + RatFun(num, a, b);
    }
    return out;
  }

 private:
  static XiPolyCliff map_scalars(const XiPolyCliff& c, int j) {
    XiPolyCliff r(c.dim());
    for (const auto& [key, s] : c.terms()) {
      ScalarPoly ds = s.d_x_params(j);
      if (!ds.is_zero()) r.add_term(key.blade, key.mono, ds);
    }
    return r;
  }

  int m_{0};
  Terms terms_;
};

inline SymExpr operator*(const GaussRat& c, const SymExpr& e) { return e * c; }
inline SymExpr operator*(const ScalarPoly& s, const SymExpr& e) { return e * s; }

}  // namespace wres
