#pragma once

// Exact Gaussian-rational scalars. All arithmetic is exact; mpq_class keeps
// numerator/denominator coprime with positive denominator.

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace wres {

using Rat = mpq_class;

inline std::string rat_str(const Rat& q) {
  return q.get_str();  // "p/q" with q > 0, or "p" when integral
}

inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline Rat rat_factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rat(z);
}

// (n-1)!! for odd n >= -1; returns 1 for n <= 0.
inline Rat rat_double_factorial(int n) {
  mpz_class z = 1;
  for (int k = n; k > 1; k -= 2) z *= k;
  return Rat(z);
}

// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for integer a (possibly
// negative), k >= 0.
inline Rat rat_binomial(long a, unsigned k) {
  Rat num = 1;
  for (unsigned j = 0; j < k; ++j) num *= Rat(a - static_cast<long>(j));
  return num / rat_factorial(k);
}

struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  // mpq_class(a, b) does not canonicalize; normalize at the boundary so that
  // comparisons (mpq_equal assumes coprime form) stay sound
  GaussRat(Rat r) : re(std::move(r)) { re.canonicalize(); }
  GaussRat(long r) : re(r) {}
  GaussRat(int r) : re(r) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }

  static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat operator+(const GaussRat& o) const {
    GaussRat r(*this);
    return r += o;
  }
  GaussRat operator-(const GaussRat& o) const {
    GaussRat r(*this);
    return r -= o;
  }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  GaussRat conj() const { return {re, -im}; }
  GaussRat operator/(const GaussRat& o) const {
    Rat n2 = o.re * o.re + o.im * o.im;
    if (n2 == 0) throw std::domain_error("division by zero GaussRat");
    GaussRat p = *this * o.conj();
    return {p.re / n2, p.im / n2};
  }
  GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  // i^k for any integer k
  static GaussRat i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return GaussRat(1);
      case 1: return GaussRat::i();
      case 2: return GaussRat(-1);
      default: return -GaussRat::i();
    }
  }
};

inline std::string to_string(const GaussRat& z) {
  if (z.im == 0) return rat_str(z.re);
  std::string s;
  if (z.re != 0) s = rat_str(z.re);
  std::string im = rat_str(z.im);
  if (!s.empty() && im[0] != '-') s += "+";
  if (im == "1")
    s += "I";
  else if (im == "-1")
    s += "-I";
  else
    s += im + "*I";
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
  return os << to_string(z);
}

}  // namespace wres
