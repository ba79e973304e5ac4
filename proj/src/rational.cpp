#include "witt/rational.hpp"

#include <gmp.h>

#include "witt/errors.hpp"

namespace witt {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Integer num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Integer(text);
    } else {
      num = Integer(text.substr(0, slash));
      den = Integer(text.substr(slash + 1));
    }
  } catch (const std::runtime_error&) {
    throw parse_error("invalid rational literal: " + text, 0);
  }
  if (den == 0) throw domain_error("rational with zero denominator: " + text);
  // Constructing from a (num, den) pair canonicalises; string construction
  // of mpq does not.
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

std::optional<Integer> exact_root(const Integer& n, unsigned d) {
  if (d == 0) return std::nullopt;
  if (n < 0 && d % 2 == 0) return std::nullopt;
  Integer result;
  int exact = mpz_root(result.backend().data(), n.backend().data(), d);
  if (!exact) return std::nullopt;
  return result;
}

std::optional<Rational> exact_root(const Rational& r, unsigned d) {
  auto num = exact_root(numerator(r), d);
  if (!num) return std::nullopt;
  auto den = exact_root(denominator(r), d);
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw domain_error("zero raised to a negative power");
    return Rational(0);
  }
  Rational b = base;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational acc(1);
  while (e > 0) {
    if (e & 1UL) acc *= b;
    b *= b;
    e >>= 1UL;
  }
  if (exp < 0) acc = Rational(1) / acc;
  return acc;
}

std::size_t rational_bit_size(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  return mpz_sizeinbase(num.backend().data(), 2) +
         mpz_sizeinbase(den.backend().data(), 2);
}

}  // namespace witt
