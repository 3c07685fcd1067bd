#pragma once

// The Clifford algebra Cl(m) at the boundary point x0, in the orthonormal
// frame {e_1..e_m}: blades as sorted index sets (bitmasks) with the relation
// c(e_i)c(e_j) + c(e_j)c(e_i) = -2 delta_ij. Coefficients are polynomials in
// the tangential covariables xi_1..xi_{m-1} over ScalarPoly. The normal
// covariable xi_m never appears at this layer.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "wres/scalar_poly.hpp"

namespace wres {

using Blade = std::uint32_t;  // bit k-1 set  <=>  e_k in the product

inline int blade_popcount(Blade b) { return __builtin_popcount(b); }

// Product of basis blades: (mask, sign in {+1,-1}).
inline std::pair<Blade, int> blade_mul(Blade a, Blade b) {
  int swaps = 0;
  for (Blade bb = b; bb; bb &= bb - 1) {
    Blade lowest = bb & -bb;
    // generators of a strictly above this one must be hopped over
    swaps += blade_popcount(a & ~(lowest | (lowest - 1)));
  }
  int sign = (swaps % 2 == 0) ? 1 : -1;
  if (blade_popcount(a & b) % 2 == 1) sign = -sign;  // e_i e_i = -1
  return {static_cast<Blade>(a ^ b), sign};
}

inline std::string blade_str(Blade b) {
  if (b == 0) return "1";
  std::string s;
  for (int k = 1; b; ++k, b >>= 1)
    if (b & 1) {
      if (!s.empty()) s += ".";
      s += "e" + std::to_string(k);
    }
  return s;
}

// Monomial in the tangential covariables.
using XiMono = std::map<int, int>;

inline std::string to_string(const XiMono& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : m) {
    if (!s.empty()) s += "*";
    s += "xi" + std::to_string(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

inline XiMono ximono_mul(const XiMono& a, const XiMono& b) {
  XiMono r = a;
  for (const auto& [v, e] : b) {
    int& x = r[v];
    x += e;
    if (x == 0) r.erase(v);
  }
  return r;
}

// Scalar xi'-polynomial over ScalarPoly (the image of the spinor trace).
using XiPoly = std::map<XiMono, ScalarPoly>;

inline void xipoly_add(XiPoly& p, const XiMono& m, const ScalarPoly& c) {
  if (c.is_zero()) return;
  auto [it, ins] = p.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

class XiPolyCliff {
 public:
  struct Key {
    Blade blade;
    XiMono mono;
    auto operator<=>(const Key&) const = default;
  };
  using Terms = std::map<Key, ScalarPoly>;

  XiPolyCliff() = default;
  explicit XiPolyCliff(int m) : m_(m) {}

  static XiPolyCliff scalar(int m, ScalarPoly c) {
    XiPolyCliff r(m);
    r.add_term(0, {}, std::move(c));
    return r;
  }
  static XiPolyCliff unit(int m) { return scalar(m, ScalarPoly(1)); }
  static XiPolyCliff gen(int m, int k) {
    if (k < 1 || k > m) throw std::out_of_range("generator index");
    XiPolyCliff r(m);
    r.add_term(Blade(1) << (k - 1), {}, ScalarPoly(1));
    return r;
  }
  // c(xi') = sum_{k<m} xi_k c(e_k)
  static XiPolyCliff c_xiprime(int m) {
    XiPolyCliff r(m);
    for (int k = 1; k < m; ++k)
      r.add_term(Blade(1) << (k - 1), {{k, 1}}, ScalarPoly(1));
    return r;
  }
  static XiPolyCliff c_dxm(int m) { return gen(m, m); }
  static XiPolyCliff xi_var(int m, int k) {
    if (k < 1 || k >= m) throw std::out_of_range("tangential xi index");
    XiPolyCliff r(m);
    r.add_term(0, {{k, 1}}, ScalarPoly(1));
    return r;
  }

  int dim() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(Blade b, const XiMono& mono, const ScalarPoly& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms_.emplace(Key{b, mono}, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  XiPolyCliff operator-() const {
    XiPolyCliff r(m_);
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
  }
  XiPolyCliff& operator+=(const XiPolyCliff& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.blade, k.mono, c);
    return *this;
  }
  XiPolyCliff& operator-=(const XiPolyCliff& o) {
    check_dim(o);
    for (const auto& [k, c] : o.terms_) add_term(k.blade, k.mono, -c);
    return *this;
  }
  XiPolyCliff operator+(const XiPolyCliff& o) const {
    XiPolyCliff r(*this);
    return r += o;
  }
  XiPolyCliff operator-(const XiPolyCliff& o) const {
    XiPolyCliff r(*this);
    return r -= o;
  }

  XiPolyCliff operator*(const XiPolyCliff& o) const {
    check_dim(o);
    XiPolyCliff r(m_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        auto [mask, sign] = blade_mul(ka.blade, kb.blade);
        ScalarPoly c = ca * cb;
        if (sign < 0) c = -c;
        r.add_term(mask, ximono_mul(ka.mono, kb.mono), c);
      }
    return r;
  }
  XiPolyCliff& operator*=(const XiPolyCliff& o) { return *this = *this * o; }

  XiPolyCliff operator*(const ScalarPoly& s) const {
    XiPolyCliff r(m_);
    for (const auto& [k, c] : terms_) r.add_term(k.blade, k.mono, c * s);
    return r;
  }
  XiPolyCliff operator*(const GaussRat& g) const {
    XiPolyCliff r(m_);
    for (const auto& [k, c] : terms_) r.add_term(k.blade, k.mono, c * g);
    return r;
  }

  bool operator==(const XiPolyCliff& o) const {
    return m_ == o.m_ && terms_ == o.terms_;
  }
  bool operator!=(const XiPolyCliff& o) const { return !(*this == o); }

  // Formal d/dxi_k on the tangential monomials.
  XiPolyCliff d_xi(int k) const {
    XiPolyCliff r(m_);
    for (const auto& [key, c] : terms_) {
      auto it = key.mono.find(k);
      if (it == key.mono.end()) continue;
      XiMono dm = key.mono;
      int e = it->second;
      if (--dm[k] == 0) dm.erase(k);
      r.add_term(key.blade, dm, c * GaussRat(e));
    }
    return r;
  }

  ScalarPoly coefficient(Blade b, const XiMono& mono) const {
    auto it = terms_.find(Key{b, mono});
    return it == terms_.end() ? ScalarPoly() : it->second;
  }

  // Keep only terms whose xi'-monomial has even total degree (the odd part
  // integrates to zero over the sphere).
  XiPolyCliff even_xi_part() const {
    XiPolyCliff r(m_);
    for (const auto& [k, c] : terms_) {
      int deg = 0;
      for (const auto& [v, e] : k.mono) deg += e;
      if (deg % 2 == 0) r.add_term(k.blade, k.mono, c);
    }
    return r;
  }

 private:
  void check_dim(const XiPolyCliff& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Clifford dimension mismatch");
  }
  int m_{0};
  Terms terms_;
};

inline XiPolyCliff operator*(const ScalarPoly& s, const XiPolyCliff& a) { return a * s; }
inline XiPolyCliff operator*(const GaussRat& g, const XiPolyCliff& a) { return a * g; }

// Spinor trace on Cl(2n+4): trace[id] = 2^{n+2}, every nontrivial blade
// traces to zero. Returns the xi'-polynomial 2^{n+2} * <a>_0.
inline XiPoly clif_trace(const XiPolyCliff& a, int n) {
  if (a.dim() != 2 * n + 4) throw std::invalid_argument("trace dimension mismatch");
  GaussRat norm(Rat(mpz_class(1) << (n + 2)));
  XiPoly r;
  for (const auto& [k, c] : a.terms())
    if (k.blade == 0) xipoly_add(r, k.mono, c * norm);
  return r;
}

inline std::string to_string(const XiPolyCliff& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    std::string cs = to_string(c);
    bool wrap = cs.find('+') != std::string::npos ||
                cs.find('-', 1) != std::string::npos || cs[0] == '-';
    s += wrap ? "(" + cs + ")" : cs;
    if (!k.mono.empty()) s += "*" + to_string(k.mono);
    if (k.blade != 0) s += "*" + blade_str(k.blade);
  }
  return s;
}

}  // namespace wres
