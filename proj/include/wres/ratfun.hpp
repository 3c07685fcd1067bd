#pragma once

// Univariate rational functions of the normal covariable xi_m with Clifford
// coefficients and poles restricted to +/-i: partial fractions, the pi^+
// half-plane projection, d/dxi_m, and the real-line contour integral. After
// restriction to |xi'| = 1 every symbol in the boundary computation has this
// shape.

#include <stdexcept>
#include <utility>
#include <vector>

#include "wres/clifford.hpp"

namespace wres {

struct NotInHError : std::domain_error {
  using std::domain_error::domain_error;
};
struct DivergentIntegralError : std::domain_error {
  using std::domain_error::domain_error;
};

// Polynomial in xi_m with XiPolyCliff coefficients, index = power.
using CliffPoly = std::vector<XiPolyCliff>;

inline void cliffpoly_trim(CliffPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int cliffpoly_deg(const CliffPoly& p) {
  return static_cast<int>(p.size()) - 1;  // -1 for zero
}

inline CliffPoly cliffpoly_add(const CliffPoly& x, const CliffPoly& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  int m = x[0].dim();
  CliffPoly r = x;
  if (y.size() > r.size()) r.resize(y.size(), XiPolyCliff(m));
  for (std::size_t k = 0; k < y.size(); ++k) r[k] += y[k];
  cliffpoly_trim(r);
  return r;
}

inline CliffPoly cliffpoly_mul(const CliffPoly& x, const CliffPoly& y) {
  if (x.empty() || y.empty()) return {};
  int m = x[0].dim();
  CliffPoly r(x.size() + y.size() - 1, XiPolyCliff(m));
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) r[a + b] += x[a] * y[b];
  cliffpoly_trim(r);
  return r;
}

inline CliffPoly cliffpoly_deriv(const CliffPoly& p) {
  if (p.size() <= 1) return {};
  CliffPoly r(p.size() - 1, XiPolyCliff(p[0].dim()));
  for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * GaussRat(Rat(static_cast<long>(k)));
  cliffpoly_trim(r);
  return r;
}

inline XiPolyCliff cliffpoly_eval(const CliffPoly& p, const GaussRat& x, int m) {
  XiPolyCliff acc(m);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divide p by (xi_m - root); remainder must vanish.
inline CliffPoly cliffpoly_divide_linear(const CliffPoly& p, const GaussRat& root) {
  if (p.empty()) return {};
  int m = p[0].dim();
  CliffPoly q(p.size() - 1, XiPolyCliff(m));
  XiPolyCliff carry(m);
  for (int k = static_cast<int>(p.size()) - 1; k >= 1; --k) {
    carry = p[k] + carry * root;
    q[k - 1] = carry;
  }
  XiPolyCliff rem = p[0] + carry * root;
  if (!rem.is_zero()) throw std::logic_error("nonzero remainder in linear division");
  cliffpoly_trim(q);
  return q;
}

// Rational function  num(xi_m) / ((xi_m - i)^a (xi_m + i)^b).
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(int m) : m_(m) {}
  RatFun(CliffPoly num, int a, int b) : a_(a), b_(b), num_(std::move(num)) {
    if (!num_.empty()) m_ = num_[0].dim();
    normalize();
  }

  static RatFun from_cliff(const XiPolyCliff& c) {
    RatFun r(c.dim());
    if (!c.is_zero()) r.num_ = {c};
    return r;
  }
  static RatFun xm(int m) {
    RatFun r(m);
    r.num_ = {XiPolyCliff(m), XiPolyCliff::unit(m)};
    return r;
  }

  int dim() const { return m_; }
  int pole_order_plus() const { return a_; }
  int pole_order_minus() const { return b_; }
  const CliffPoly& numerator() const { return num_; }
  bool is_zero() const { return num_.empty(); }
  // deg(num) <= a + b - 2, so the real-line integral converges.
  bool decays() const { return cliffpoly_deg(num_) <= a_ + b_ - 2; }
  bool is_polynomial() const { return a_ == 0 && b_ == 0; }

  RatFun operator-() const {
    RatFun r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
  }
  RatFun operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    check_dim(o);
    int a = std::max(a_, o.a_), b = std::max(b_, o.b_);
    CliffPoly x = scale_to(num_, a - a_, b - b_);
    CliffPoly y = o.scale_to(o.num_, a - o.a_, b - o.b_);
    return RatFun(cliffpoly_add(x, y), a, b);
  }
  RatFun operator-(const RatFun& o) const { return *this + (-o); }
  RatFun operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun(m_ ? m_ : o.m_);
    check_dim(o);
    return RatFun(cliffpoly_mul(num_, o.num_), a_ + o.a_, b_ + o.b_);
  }
  RatFun operator*(const GaussRat& c) const {
    RatFun r(*this);
    for (auto& x : r.num_) x = x * c;
    r.normalize();
    return r;
  }
  RatFun operator*(const ScalarPoly& s) const {
    RatFun r(*this);
    for (auto& x : r.num_) x = x * s;
    r.normalize();
    return r;
  }
  // Clifford multiplication is noncommutative; keep both orders available.
  friend RatFun lmul(const XiPolyCliff& c, const RatFun& r) {
    RatFun x(r);
    for (auto& t : x.num_) t = c * t;
    x.normalize();
    return x;
  }
  friend RatFun rmul(const RatFun& r, const XiPolyCliff& c) {
    RatFun x(r);
    for (auto& t : x.num_) t = t * c;
    x.normalize();
    return x;
  }

  bool operator==(const RatFun& o) const {
    return a_ == o.a_ && b_ == o.b_ && num_ == o.num_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  // Exact quotient-rule derivative.
  RatFun d_xim() const {
    if (is_zero()) return *this;
    CliffPoly dnum = cliffpoly_deriv(num_);
    if (a_ == 0 && b_ == 0) return RatFun(dnum, 0, 0);
    // (N' (x-i)(x+i) - N (a(x+i) + b(x-i))) / ((x-i)^{a+1} (x+i)^{b+1})
    CliffPoly quad = {XiPolyCliff::unit(m_), XiPolyCliff(m_),
                      XiPolyCliff::unit(m_)};  // x^2 + 1
    CliffPoly lin(2, XiPolyCliff(m_));
    GaussRat c0 = GaussRat(Rat(a_)) * GaussRat::i() - GaussRat(Rat(b_)) * GaussRat::i();
    lin[0] = XiPolyCliff::unit(m_) * c0;                 // a*i - b*i
    lin[1] = XiPolyCliff::unit(m_) * GaussRat(Rat(a_ + b_));  // (a+b) x
    CliffPoly res = cliffpoly_add(cliffpoly_mul(dnum, quad),
                                  negate(cliffpoly_mul(num_, lin)));
    return RatFun(res, a_ + 1, b_ + 1);
  }

  struct PFDecomp {
    // principal_plus[k-1] = coefficient of (xi_m - i)^{-k}
    std::vector<XiPolyCliff> principal_plus;
    std::vector<XiPolyCliff> principal_minus;
    CliffPoly poly_part;
  };

  PFDecomp partial_fractions() const {
    PFDecomp d;
    if (is_zero()) return d;
    d.principal_plus = principal_at(GaussRat::i(), a_, GaussRat(0, -1), b_);
    d.principal_minus = principal_at(GaussRat(0, -1), b_, GaussRat::i(), a_);
    // poly part by long division against the expanded denominator
    CliffPoly den = denominator_poly();
    d.poly_part = long_div_quotient(num_, den);
    return d;
  }

  static RatFun recombine(const PFDecomp& d, int m) {
    RatFun r(m);
    if (!d.poly_part.empty()) r = RatFun(d.poly_part, 0, 0);
    for (std::size_t k = 0; k < d.principal_plus.size(); ++k)
      r = r + RatFun({d.principal_plus[k]}, static_cast<int>(k) + 1, 0);
    for (std::size_t k = 0; k < d.principal_minus.size(); ++k)
      r = r + RatFun({d.principal_minus[k]}, 0, static_cast<int>(k) + 1);
    return r;
  }

  // Projection onto the part holomorphic in the lower half-plane (poles kept
  // at +i). Input must be strictly proper.
  RatFun pi_plus() const {
    if (is_zero()) return *this;
    if (cliffpoly_deg(num_) >= a_ + b_)
      throw NotInHError("pi_plus: input has a polynomial part");
    PFDecomp d = partial_fractions();
    RatFun r(m_);
    for (std::size_t k = 0; k < d.principal_plus.size(); ++k)
      r = r + RatFun({d.principal_plus[k]}, static_cast<int>(k) + 1, 0);
    return r;
  }

  RatFun pi_minus() const {
    if (is_zero()) return *this;
    if (cliffpoly_deg(num_) >= a_ + b_)
      throw NotInHError("pi_minus: input has a polynomial part");
    PFDecomp d = partial_fractions();
    RatFun r(m_);
    for (std::size_t k = 0; k < d.principal_minus.size(); ++k)
      r = r + RatFun({d.principal_minus[k]}, 0, static_cast<int>(k) + 1);
    return r;
  }

  // Integral over the real line as 2*pi*i * Res_{xi_m = i}; the returned
  // value V satisfies  integral = pi * V.  Route: Laurent expansion at +i.
  XiPolyCliff integrate_line() const {
    if (is_zero()) return XiPolyCliff(m_);
    if (!decays()) throw DivergentIntegralError("integrate_line: integrand does not decay");
    XiPolyCliff res = residue_at_i_series();
    return res * (GaussRat::i() * GaussRat(2));
  }

  // Same integral by the closed-form route: 2*pi*i/(a-1)! [N/(xi_m+i)^b]^{(a-1)} at i.
  XiPolyCliff integrate_line_derivform() const {
    if (is_zero()) return XiPolyCliff(m_);
    if (!decays()) throw DivergentIntegralError("integrate_line: integrand does not decay");
    if (a_ == 0) return XiPolyCliff(m_);
    XiPolyCliff g = nth_derivative_at(num_, GaussRat::i(), b_, a_ - 1, GaussRat::i());
    GaussRat c = GaussRat(2) * GaussRat::i() / GaussRat(rat_factorial(a_ - 1));
    return g * c;
  }

  // p-th derivative of N(x)/(x+shift)^b evaluated at x = i (no factorial
  // division). Used verbatim for the paper-style bracket evaluations.
  static XiPolyCliff nth_derivative_at(const CliffPoly& num, const GaussRat& shift,
                                       int b, int p, const GaussRat& at) {
    if (num.empty()) return XiPolyCliff(0);
    int m = num[0].dim();
    if (b == 0) {
      CliffPoly d = num;
      for (int j = 0; j < p; ++j) d = cliffpoly_deriv(d);
      return cliffpoly_eval(d, at, m);
    }
    // g_j = N_j / (x+shift)^{b+j},  N_{j+1} = N_j' (x+shift) - (b+j) N_j
    CliffPoly nj = num;
    for (int j = 0; j < p; ++j) {
      CliffPoly shifted(2, XiPolyCliff(m));
      shifted[0] = XiPolyCliff::unit(m) * shift;
      shifted[1] = XiPolyCliff::unit(m);
      CliffPoly t = cliffpoly_mul(cliffpoly_deriv(nj), shifted);
      CliffPoly s = nj;
      for (auto& c : s) c = c * GaussRat(Rat(-(b + j)));
      nj = cliffpoly_add(t, s);
    }
    GaussRat base = at + shift;
    GaussRat den(1);
    for (int k = 0; k < b + p; ++k) den *= base;
    return cliffpoly_eval(nj, at, m) * (GaussRat(1) / den);
  }

  CliffPoly denominator_poly() const {
    CliffPoly den = {XiPolyCliff::unit(m_)};
    CliffPoly fp(2, XiPolyCliff(m_)), fm(2, XiPolyCliff(m_));
    fp[0] = XiPolyCliff::unit(m_) * (-GaussRat::i());
    fp[1] = XiPolyCliff::unit(m_);
    fm[0] = XiPolyCliff::unit(m_) * GaussRat::i();
    fm[1] = XiPolyCliff::unit(m_);
    for (int k = 0; k < a_; ++k) den = cliffpoly_mul(den, fp);
    for (int k = 0; k < b_; ++k) den = cliffpoly_mul(den, fm);
    return den;
  }

 private:
  static CliffPoly negate(CliffPoly p) {
    for (auto& c : p) c = -c;
    return p;
  }

  void check_dim(const RatFun& o) const {
    if (m_ != 0 && o.m_ != 0 && m_ != o.m_)
      throw std::invalid_argument("RatFun dimension mismatch");
  }

  // num * (xi_m - i)^da (xi_m + i)^db
  CliffPoly scale_to(const CliffPoly& n, int da, int db) const {
    CliffPoly r = n;
    int m = m_;
    CliffPoly fp(2, XiPolyCliff(m)), fm(2, XiPolyCliff(m));
    fp[0] = XiPolyCliff::unit(m) * (-GaussRat::i());
    fp[1] = XiPolyCliff::unit(m);
    fm[0] = XiPolyCliff::unit(m) * GaussRat::i();
    fm[1] = XiPolyCliff::unit(m);
    for (int k = 0; k < da; ++k) r = cliffpoly_mul(r, fp);
    for (int k = 0; k < db; ++k) r = cliffpoly_mul(r, fm);
    return r;
  }

  void normalize() {
    cliffpoly_trim(num_);
    if (num_.empty()) {
      a_ = b_ = 0;
      return;
    }
    while (a_ > 0 && cliffpoly_eval(num_, GaussRat::i(), m_).is_zero()) {
      num_ = cliffpoly_divide_linear(num_, GaussRat::i());
      --a_;
      if (num_.empty()) {
        a_ = b_ = 0;
        return;
      }
    }
    while (b_ > 0 && cliffpoly_eval(num_, GaussRat(0, -1), m_).is_zero()) {
      num_ = cliffpoly_divide_linear(num_, GaussRat(0, -1));
      --b_;
      if (num_.empty()) {
        a_ = b_ = 0;
        return;
      }
    }
  }

  // Principal part at `root` with order `ord`; the opposite factor is
  // (x - other)^{other_ord}. coefficient of (x-root)^{-k}:
  //   (1/(ord-k)!) d^{ord-k}/dx^{ord-k} [ N/(x-other)^{other_ord} ] at root.
  std::vector<XiPolyCliff> principal_at(const GaussRat& root, int ord,
                                        const GaussRat& other, int other_ord) const {
    std::vector<XiPolyCliff> out(ord, XiPolyCliff(m_));
    if (ord == 0) return out;
    for (int k = 1; k <= ord; ++k) {
      XiPolyCliff d = nth_derivative_at(num_, -other, other_ord, ord - k, root);
      out[k - 1] = d * (GaussRat(1) / GaussRat(rat_factorial(ord - k)));
    }
    return out;
  }

  static CliffPoly long_div_quotient(const CliffPoly& n, const CliffPoly& d) {
    // denominator is monic by construction
    if (cliffpoly_deg(n) < cliffpoly_deg(d)) return {};
    int m = n[0].dim();
    CliffPoly rem = n;
    CliffPoly q(cliffpoly_deg(n) - cliffpoly_deg(d) + 1, XiPolyCliff(m));
    while (cliffpoly_deg(rem) >= cliffpoly_deg(d)) {
      int shift = cliffpoly_deg(rem) - cliffpoly_deg(d);
      XiPolyCliff lead = rem.back();
      q[shift] += lead;
      for (std::size_t k = 0; k < d.size(); ++k)
        rem[k + shift] -= lead * d[k];
      cliffpoly_trim(rem);
      if (rem.empty()) break;
    }
    cliffpoly_trim(q);
    return q;
  }

  // coefficient of (x-i)^{-1}: expand N and (x+i)^{-b} around x = i and take
  // the u^{a-1} coefficient of their product (u = x - i).
  XiPolyCliff residue_at_i_series() const {
    if (a_ == 0) return XiPolyCliff(m_);
    int need = a_;  // powers u^0..u^{a-1}
    // Taylor shift of the numerator to powers of u
    CliffPoly shifted(std::min<int>(need, static_cast<int>(num_.size())), XiPolyCliff(m_));
    for (std::size_t k = 0; k < num_.size(); ++k) {
      // (u + i)^k = sum_j C(k, j) i^{k-j} u^j
      for (int j = 0; j <= static_cast<int>(k) && j < need; ++j) {
        GaussRat c = GaussRat(rat_binomial(static_cast<long>(k), j)) *
                     GaussRat::i_pow(static_cast<long>(k) - j);
        shifted[j] += num_[k] * c;
      }
    }
    // (x+i)^{-b} = (2i)^{-b} (1 + u/(2i))^{-b}: series coefficients
    std::vector<GaussRat> den_series(need);
    GaussRat inv2i = GaussRat(1) / (GaussRat(2) * GaussRat::i());
    GaussRat lead(1);
    for (int k = 0; k < b_; ++k) lead *= inv2i;
    for (int j = 0; j < need; ++j) {
      GaussRat c = GaussRat(rat_binomial(-static_cast<long>(b_), j));
      GaussRat u(1);
      for (int t = 0; t < j; ++t) u *= inv2i;
      den_series[j] = lead * c * u;
    }
    XiPolyCliff res(m_);
    for (int j = 0; j < need && j < static_cast<int>(shifted.size()); ++j)
      res += shifted[j] * den_series[need - 1 - j];
    return res;
  }

  int m_{0};
  int a_{0};
  int b_{0};
  CliffPoly num_;
};

inline RatFun operator*(const GaussRat& c, const RatFun& r) { return r * c; }
inline RatFun operator*(const ScalarPoly& s, const RatFun& r) { return r * s; }

// Scalar polynomial helpers over GaussRat, used by the paper-style closed
// forms in the engine.
using CPoly = std::vector<GaussRat>;

inline GaussRat cpoly_nth_derivative_at(const CPoly& num, const GaussRat& shift,
                                        int b, int p, const GaussRat& at) {
  CliffPoly n;
  n.reserve(num.size());
  for (const auto& c : num) n.push_back(XiPolyCliff::unit(4) * c);
  cliffpoly_trim(n);
  if (n.empty()) return GaussRat(0);
  XiPolyCliff v = RatFun::nth_derivative_at(n, shift, b, p, at);
  return v.coefficient(0, {}).constant();
}

}  // namespace wres
