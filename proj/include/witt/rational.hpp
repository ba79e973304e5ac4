#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <optional>
#include <string>

namespace witt {

/// Arbitrary-precision integers and rationals (GMP-backed, no expression
/// templates so values behave like plain scalars).
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Parses "p", "-p" or "p/q". The result is always canonical: lowest terms,
/// positive denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

/// Exact d-th root, when one exists.
std::optional<Integer> exact_root(const Integer& n, unsigned d);
std::optional<Rational> exact_root(const Rational& r, unsigned d);

/// base^exp with negative exponents allowed; base must be nonzero then.
Rational pow_rational(const Rational& base, long exp);

/// Cheap size heuristic used for pivot selection in exact elimination.
std::size_t rational_bit_size(const Rational& r);

}  // namespace witt
