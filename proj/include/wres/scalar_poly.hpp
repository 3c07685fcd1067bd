#pragma once

// Multivariate polynomials in the formal parameters of the boundary
// computation (metric jet h'(0), conformal-factor jets, opaque interior
// symbols) over exact Gaussian rationals. Parameters are free commuting
// indeterminates; no relations are imposed here.

#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wres/rational.hpp"

namespace wres {

enum class ParamKind : int {
  H1,      // h'(0)
  F,       // f(x0)
  FINV,    // f^{-1}(x0)
  DF,      // d_{x_j} f, indexed
  DFINV,   // d_{x_j} f^{-1}, indexed
  VOL,     // Vol(S_{2n+2}), formal unit
  S,       // scalar curvature (opaque)
  LAPF,    // Laplacian of f (opaque)
  GRADF2,  // |grad f|^2 (opaque)
  FLAPF,   // f^{-1} Laplacian f pairing (opaque)
};

struct Param {
  ParamKind kind{ParamKind::H1};
  int idx{0};  // direction j for DF/DFINV, else 0

  auto operator<=>(const Param&) const = default;

  static Param h1() { return {ParamKind::H1, 0}; }
  static Param f() { return {ParamKind::F, 0}; }
  static Param finv() { return {ParamKind::FINV, 0}; }
  static Param df(int j) { return {ParamKind::DF, j}; }
  static Param dfinv(int j) { return {ParamKind::DFINV, j}; }
  static Param vol() { return {ParamKind::VOL, 0}; }
  static Param s() { return {ParamKind::S, 0}; }
  static Param lapf() { return {ParamKind::LAPF, 0}; }
  static Param gradf2() { return {ParamKind::GRADF2, 0}; }
  static Param flapf() { return {ParamKind::FLAPF, 0}; }
};

inline std::string to_string(const Param& p) {
  switch (p.kind) {
    case ParamKind::H1: return "h1";
    case ParamKind::F: return "f";
    case ParamKind::FINV: return "finv";
    case ParamKind::DF: return "df_" + std::to_string(p.idx);
    case ParamKind::DFINV: return "dfinv_" + std::to_string(p.idx);
    case ParamKind::VOL: return "vol";
    case ParamKind::S: return "s";
    case ParamKind::LAPF: return "lapf";
    case ParamKind::GRADF2: return "gradf2";
    case ParamKind::FLAPF: return "flapf";
  }
  return "?";
}

// Sorted exponent map; the empty monomial is 1.
using ParamMono = std::map<Param, int>;

inline std::string to_string(const ParamMono& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : m) {
    if (!s.empty()) s += "*";
    s += to_string(p);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

class ScalarPoly {
 public:
  using Terms = std::map<ParamMono, GaussRat>;

  ScalarPoly() = default;
  ScalarPoly(GaussRat c) {
    if (!c.is_zero()) terms_[{}] = std::move(c);
  }
  ScalarPoly(long c) : ScalarPoly(GaussRat(c)) {}
  ScalarPoly(int c) : ScalarPoly(GaussRat(c)) {}
  static ScalarPoly var(Param p) {
    ScalarPoly r;
    r.terms_[{{p, 1}}] = GaussRat(1);
    return r;
  }
  static ScalarPoly i() { return ScalarPoly(GaussRat::i()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  GaussRat constant() const {
    if (terms_.empty()) return GaussRat(0);
    auto it = terms_.find({});
    return it == terms_.end() ? GaussRat(0) : it->second;
  }

  void add_term(const ParamMono& m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, ins] = terms_.emplace(m, c);
    if (!ins) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ScalarPoly operator-() const {
    ScalarPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }
  ScalarPoly& operator+=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ScalarPoly& operator-=(const ScalarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  ScalarPoly operator+(const ScalarPoly& o) const {
    ScalarPoly r(*this);
    return r += o;
  }
  ScalarPoly operator-(const ScalarPoly& o) const {
    ScalarPoly r(*this);
    return r -= o;
  }
  ScalarPoly operator*(const ScalarPoly& o) const {
    ScalarPoly r;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        ParamMono m = ma;
        for (const auto& [p, e] : mb) {
          int& x = m[p];
          x += e;
          if (x == 0) m.erase(p);
        }
        r.add_term(m, ca * cb);
      }
    return r;
  }
  ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }
  ScalarPoly operator*(const GaussRat& c) const {
    ScalarPoly r;
    for (const auto& [m, x] : terms_)
      if (!(x * c).is_zero()) r.terms_[m] = x * c;
    return r;
  }

  bool operator==(const ScalarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

  // Replace bound parameters by exact values; unbound ones remain.
  ScalarPoly substitute(const std::map<Param, GaussRat>& bindings) const {
    ScalarPoly r;
    for (const auto& [m, c] : terms_) {
      GaussRat coeff = c;
      ParamMono rest;
      for (const auto& [p, e] : m) {
        auto it = bindings.find(p);
        if (it == bindings.end()) {
          rest[p] = e;
        } else {
          for (int k = 0; k < e; ++k) coeff *= it->second;
        }
      }
      r.add_term(rest, coeff);
    }
    return r;
  }

  // Leibniz derivative of f/finv parameters in the tangential or normal
  // direction j: F -> DF_j, FINV -> DFINV_j. First-order jets only; any
  // already-differentiated parameter is x-constant.
  ScalarPoly d_x_params(int j) const {
    ScalarPoly r;
    for (const auto& [m, c] : terms_) {
      for (const auto& [p, e] : m) {
        Param d;
        if (p.kind == ParamKind::F)
          d = Param::df(j);
        else if (p.kind == ParamKind::FINV)
          d = Param::dfinv(j);
        else
          continue;
        ParamMono dm = m;
        if (--dm[p] == 0) dm.erase(p);
        ++dm[d];
        r.add_term(dm, c * GaussRat(e));
      }
    }
    return r;
  }

  int degree_in(ParamKind k) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (const auto& [p, e] : m)
        if (p.kind == k) t += e;
      if (t > d) d = t;
    }
    return d;
  }

 private:
  Terms terms_;
};

inline ScalarPoly operator*(const GaussRat& c, const ScalarPoly& p) { return p * c; }

inline std::string to_string(const ScalarPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    std::string cs = to_string(c);
    bool wrap = cs.find('+') != std::string::npos ||
                cs.find('-', 1) != std::string::npos;
    if (!s.empty()) s += " + ";
    if (m.empty()) {
      s += wrap ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      s += to_string(m);
    } else {
      s += (wrap ? "(" + cs + ")" : cs) + "*" + to_string(m);
    }
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) {
  return os << to_string(p);
}

}  // namespace wres
