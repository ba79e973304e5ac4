#pragma once

#include <string>

#include "witt/poly.hpp"
#include "witt/witt_element.hpp"

namespace witt {

/// Text grammar shared by the CLI and the JSON forms: rational literals
/// (`3`, `-4/7`), the variable `t`, operators `+ - * ^` (with `^` taking a
/// non-negative exponent for Poly and any integer for LaurentPoly),
/// parentheses; whitespace is insignificant. Witt elements add the atoms `d`
/// and the sugar `e_n` for t^(n+1)*d, and must be linear in `d`.
Poly parse_poly(const std::string& text);
LaurentPoly parse_laurent(const std::string& text);
WittElement parse_witt(const std::string& text, AlgebraKind kind);

/// Canonical forms: descending exponents, explicit signs, lowest terms.
std::string format_poly(const Poly& p);
std::string format_laurent(const LaurentPoly& p);
std::string format_witt(const WittElement& w);

}  // namespace witt
