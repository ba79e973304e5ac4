#include "witt/parse.hpp"

#include <cctype>
#include <sstream>

#include "witt/errors.hpp"

namespace witt {

namespace {

// Expression values live in the rank-one module (scalar + dpart * d) over the
// Laurent ring; input must stay linear in d.
struct ExprValue {
  LaurentPoly scalar;
  LaurentPoly dpart;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprValue parse_expression() {
    ExprValue value = parse_term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        ExprValue rhs = parse_term();
        value.scalar += rhs.scalar;
        value.dpart += rhs.dpart;
      } else if (peek() == '-') {
        ++pos_;
        ExprValue rhs = parse_term();
        value.scalar -= rhs.scalar;
        value.dpart -= rhs.dpart;
      } else {
        return value;
      }
    }
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input", pos_);
  }

 private:
  ExprValue parse_term() {
    ExprValue value = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        ExprValue rhs = parse_factor();
        value = multiply(value, rhs);
      } else {
        return value;
      }
    }
  }

  ExprValue parse_factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      ExprValue v = parse_factor();
      v.scalar = -v.scalar;
      v.dpart = -v.dpart;
      return v;
    }
    ExprValue base = parse_atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      long exponent = parse_exponent();
      if (!base.dpart.is_zero())
        throw parse_error("cannot exponentiate a d-term", pos_);
      base.scalar = laurent_pow(base.scalar, exponent);
    }
    return base;
  }

  ExprValue parse_atom() {
    skip_ws();
    std::size_t at = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExprValue v = parse_expression();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return {LaurentPoly(parse_rational_literal()), LaurentPoly()};
    if (c == 't') {
      ++pos_;
      return {LaurentPoly::monomial(1), LaurentPoly()};
    }
    if (c == 'd') {
      ++pos_;
      return {LaurentPoly(), LaurentPoly(Rational(1))};
    }
    if (c == 'e') {
      ++pos_;
      skip_ws();
      if (peek() != '_') throw parse_error("expected '_' after 'e'", pos_);
      ++pos_;
      long n = parse_signed_integer();
      return {LaurentPoly(), LaurentPoly::monomial(n + 1)};
    }
    throw parse_error("unexpected character in expression", at);
  }

  long parse_exponent() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      long n = parse_signed_integer();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return n;
    }
    return parse_signed_integer();
  }

  long parse_signed_integer() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected an integer", pos_);
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1000000) throw parse_error("exponent too large", pos_);
      ++pos_;
    }
    return negative ? -value : value;
  }

  Rational parse_rational_literal() {
    std::string digits = parse_digits();
    skip_ws();
    if (peek() == '/') {
      std::size_t mark = pos_;
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = mark;  // not a literal denominator; leave '/' unconsumed
        return parse_rational(digits);
      }
      std::string den = parse_digits();
      return parse_rational(digits + "/" + den);
    }
    return parse_rational(digits);
  }

  std::string parse_digits() {
    skip_ws();
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      out.push_back(peek());
      ++pos_;
    }
    if (out.empty()) throw parse_error("expected digits", pos_);
    return out;
  }

  static ExprValue multiply(const ExprValue& a, const ExprValue& b) {
    if (!a.dpart.is_zero() && !b.dpart.is_zero())
      throw domain_error("expression is not linear in d");
    ExprValue out;
    out.scalar = a.scalar * b.scalar;
    out.dpart = a.scalar * b.dpart + a.dpart * b.scalar;
    return out;
  }

  static LaurentPoly laurent_pow(const LaurentPoly& base, long exponent) {
    if (exponent == 0) return LaurentPoly(Rational(1));
    if (base.is_zero()) {
      if (exponent < 0) throw domain_error("zero to a negative power");
      return LaurentPoly();
    }
    // Negative powers only of monomials (units of the Laurent ring).
    if (exponent < 0) {
      if (base.coeffs().size() != 1)
        throw domain_error("negative power of a non-monomial");
      auto [e, c] = *base.coeffs().begin();
      return LaurentPoly::monomial(e * exponent, pow_rational(c, exponent));
    }
    LaurentPoly acc(Rational(1));
    LaurentPoly b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e > 0) {
      if (e & 1UL) acc *= b;
      b *= b;
      e >>= 1UL;
    }
    return acc;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string format_monomial(const Rational& c, long e, bool with_d) {
  std::ostringstream out;
  Rational abs_c = c < 0 ? Rational(-c) : c;
  bool unit_coeff = abs_c == 1;
  bool printed_coeff = false;
  if (c < 0) out << "-";
  if (!unit_coeff || (e == 0 && !with_d)) {
    out << abs_c.str();
    printed_coeff = true;
  }
  if (e != 0) {
    if (printed_coeff) out << "*";
    out << "t";
    if (e != 1) out << "^" << e;
    printed_coeff = true;
  }
  if (with_d) {
    if (printed_coeff) out << "*";
    out << "d";
  }
  return out.str();
}

std::string format_terms(const std::map<long, Rational>& coeffs) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    std::string term = format_monomial(it->second, it->first, false);
    if (!first && term[0] != '-') out << "+";
    out << term;
    first = false;
  }
  return out.str();
}

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser parser(text);
  ExprValue v = parser.parse_expression();
  parser.expect_end();
  if (!v.dpart.is_zero()) throw domain_error("expected a polynomial, found d");
  if (!v.scalar.is_polynomial())
    throw domain_error("negative exponents are not allowed here");
  return v.scalar.to_poly();
}

LaurentPoly parse_laurent(const std::string& text) {
  Parser parser(text);
  ExprValue v = parser.parse_expression();
  parser.expect_end();
  if (!v.dpart.is_zero())
    throw domain_error("expected a Laurent polynomial, found d");
  return v.scalar;
}

WittElement parse_witt(const std::string& text, AlgebraKind kind) {
  Parser parser(text);
  ExprValue v = parser.parse_expression();
  parser.expect_end();
  if (!v.scalar.is_zero())
    throw domain_error("Witt element must be a multiple of d");
  return WittElement(v.dpart, kind);
}

std::string format_poly(const Poly& p) { return format_terms(p.coeffs()); }

std::string format_laurent(const LaurentPoly& p) {
  return format_terms(p.coeffs());
}

std::string format_witt(const WittElement& w) {
  if (w.is_zero()) return "0";
  const auto& coeffs = w.coeff().coeffs();
  if (coeffs.size() == 1) {
    auto [e, c] = *coeffs.begin();
    return format_monomial(c, e, true);
  }
  return "(" + format_terms(coeffs) + ")*d";
}

}  // namespace witt
