#pragma once

// Recursive-descent parser for scalar rational expressions in xm, used by the
// ad-hoc pi+ evaluator:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' int)?
//   base   := 'xm' | 'I' | rational | '(' expr ')'
// Division is only defined when the divisor's roots lie in {+i, -i} (powers
// of (1+xm^2), (xm-I), (xm+I) and rational multiples thereof).

#include <cctype>
#include <string>

#include "wres/ratfun.hpp"

namespace wres {

struct ParseError : std::invalid_argument {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::invalid_argument(msg + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {

// parser works in a fixed small Clifford dimension; expressions are scalar
constexpr int kParserDim = 4;

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  RatFun parse() {
    RatFun r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  RatFun expr() {
    RatFun r = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        r = r + term();
      } else if (peek() == '-') {
        ++pos_;
        r = r - term();
      } else {
        return r;
      }
    }
  }

  RatFun term() {
    RatFun r = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        r = r * factor();
      } else if (peek() == '/') {
        std::size_t at = pos_++;
        r = divide(r, factor(), at);
      } else {
        return r;
      }
    }
  }

  RatFun factor() {
    RatFun b = base();
    skip_ws();
    if (peek() != '^') return b;
    std::size_t at = ++pos_;
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(peek())) throw ParseError("expected integer exponent", pos_);
    long e = 0;
    while (std::isdigit(peek())) e = 10 * e + (s_[pos_++] - '0');
    RatFun r = RatFun::from_cliff(XiPolyCliff::unit(kParserDim));
    for (long k = 0; k < e; ++k) r = r * b;
    if (neg) r = divide(RatFun::from_cliff(XiPolyCliff::unit(kParserDim)), r, at);
    return r;
  }

  RatFun base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (c == '-') {
      ++pos_;
      return -factor();  // binds looser than '^': -xm^2 is -(xm^2)
    }
    if (std::isdigit(c)) {
      std::string num;
      while (std::isdigit(peek())) num += s_[pos_++];
      skip_ws();
      if (peek() == '/') {
        // lookahead: rational literal only if a digit follows directly
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (std::isdigit(peek())) {
          std::size_t at = pos_;
          std::string den;
          while (std::isdigit(peek())) den += s_[pos_++];
          Rat d = rat_parse(den);
          if (d == 0) throw ParseError("division by zero", at);
          return constant(GaussRat(rat_parse(num) / d));
        }
        pos_ = save;
      }
      return constant(GaussRat(rat_parse(num)));
    }
    if (c == 'x' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'm') {
      pos_ += 2;
      return RatFun::xm(kParserDim);
    }
    if (c == 'I') {
      ++pos_;
      return constant(GaussRat::i());
    }
    throw ParseError("expected 'xm', 'I', a rational, or '('", pos_);
  }

  static RatFun constant(const GaussRat& c) {
    return RatFun::from_cliff(XiPolyCliff::unit(kParserDim) * c);
  }

  // a / b: strip the roots of b's numerator at +/-i; the rest must be a
  // nonzero constant
  static RatFun divide(const RatFun& a, const RatFun& b, std::size_t at) {
    if (b.is_zero()) throw ParseError("division by zero", at);
    CliffPoly num = b.numerator();
    int extra_a = 0, extra_b = 0;
    GaussRat ip(Rat(0), Rat(1)), im(Rat(0), Rat(-1));
    while (num.size() > 1 && cliffpoly_eval(num, ip, kParserDim).is_zero()) {
      num = cliffpoly_divide_linear(num, ip);
      ++extra_a;
    }
    while (num.size() > 1 && cliffpoly_eval(num, im, kParserDim).is_zero()) {
      num = cliffpoly_divide_linear(num, im);
      ++extra_b;
    }
    if (num.size() != 1)
      throw ParseError("divisor must factor over (xm-I), (xm+I)", at);
    GaussRat c = num[0].coefficient(0, {}).constant();
    if (c.is_zero()) throw ParseError("divisor is not scalar", at);
    // a * (xm-i)^{pb} (xm+i)^{qb} / (c (xm-i)^{extra_a} (xm+i)^{extra_b})
    RatFun recip(kParserDim);
    CliffPoly one = {XiPolyCliff::unit(kParserDim) * (GaussRat(1) / c)};
    recip = RatFun(one, extra_a, extra_b);
    CliffPoly fp = {XiPolyCliff::unit(kParserDim) * im, XiPolyCliff::unit(kParserDim)};
    CliffPoly fm = {XiPolyCliff::unit(kParserDim) * ip, XiPolyCliff::unit(kParserDim)};
    CliffPoly scale = {XiPolyCliff::unit(kParserDim)};
    for (int k = 0; k < b.pole_order_plus(); ++k) scale = cliffpoly_mul(scale, fp);
    for (int k = 0; k < b.pole_order_minus(); ++k) scale = cliffpoly_mul(scale, fm);
    return a * RatFun(scale, 0, 0) * recip;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  std::size_t pos_{0};
};

}  // namespace detail

inline RatFun parse_ratfun(const std::string& s) { return detail::ExprParser(s).parse(); }

// Render a scalar RatFun as num/(L*(xm-I)^a*(xm+I)^b) with an integral
// numerator: the common rational denominator of the coefficients moves into L.
inline std::string ratfun_to_string(const RatFun& f) {
  if (f.is_zero()) return "0";
  // collect scalar coefficients
  std::vector<GaussRat> coeffs;
  for (const auto& c : f.numerator()) {
    for (const auto& [key, s] : c.terms())
      if (key.blade != 0 || !key.mono.empty() || !s.is_constant())
        throw std::invalid_argument("ratfun_to_string: non-scalar value");
    coeffs.push_back(c.coefficient(0, {}).constant());
  }
  mpz_class L = 1;
  for (const auto& c : coeffs) {
    L = lcm(L, c.re.get_den());
    L = lcm(L, c.im.get_den());
  }
  std::string num;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    GaussRat c = coeffs[k] * GaussRat(Rat(L));
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool wrap = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
    std::string piece;
    if (k == 0) {
      piece = wrap ? "(" + cs + ")" : cs;
    } else {
      std::string var = (k == 1) ? "xm" : "xm^" + std::to_string(k);
      if (cs == "1")
        piece = var;
      else if (cs == "-1")
        piece = "-" + var;
      else
        piece = (wrap ? "(" + cs + ")" : cs) + "*" + var;
    }
    if (num.empty()) {
      num = piece;
    } else {
      num += (piece[0] == '-') ? piece : "+" + piece;
    }
  }
  int a = f.pole_order_plus(), b = f.pole_order_minus();
  if (a == 0 && b == 0 && L == 1) return num;
  std::string den;
  if (L != 1) den = L.get_str();
  auto pole = [&](const char* base, int p) {
    if (p == 0) return;
    if (!den.empty()) den += "*";
    den += base;
    if (p > 1) den += "^" + std::to_string(p);
  };
  pole("(xm-I)", a);
  pole("(xm+I)", b);
  bool wrap_num = num.find('+') != std::string::npos ||
                  num.find('-', 1) != std::string::npos;
  if (wrap_num) num = "(" + num + ")";
  return num + "/(" + den + ")";
}

}  // namespace wres
