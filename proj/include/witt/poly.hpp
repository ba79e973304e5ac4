#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

class LaurentPoly;

/// Univariate polynomial over the rationals. Coefficients are stored as a
/// finite exponent-to-value map with no zero entries, so representations are
/// canonical and equality is structural.
class Poly {
 public:
  /// degree() of the zero polynomial.
  static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(long constant);

  static Poly monomial(long exponent, const Rational& coeff = Rational(1));
  static Poly variable() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty() || degree() == 0; }
  long degree() const;
  Rational coeff(long exponent) const;
  Rational leading_coeff() const;
  const std::map<long, Rational>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  Poly pow(unsigned long n) const;
  Poly monic() const;  ///< zero stays zero

  void set_coeff(long exponent, const Rational& value);

 private:
  friend class LaurentPoly;
  std::map<long, Rational> coeffs_;
};

/// Quotient and remainder of exact polynomial division.
struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

PolyDivMod divmod(const Poly& num, const Poly& den);
bool divides(const Poly& den, const Poly& num);
/// num / den, which must be exact.
Poly exact_div(const Poly& num, const Poly& den);

/// Monic gcd; gcd(f, 0) is the monic normalisation of f.
Poly gcd(const Poly& a, const Poly& b);

/// Monic f / gcd(f, f'): the product of the distinct linear factors of f over
/// the algebraic closure. Throws domain_error on zero input.
Poly squarefree_part(const Poly& f);

bool is_squarefree(const Poly& f);

/// p(q), computed exactly.
Poly poly_compose(const Poly& p, const Poly& q);

/// All rational roots with multiplicities, via the rational root theorem on
/// the primitive integer form.
std::map<Rational, long> rational_roots(const Poly& f);

/// Multiset of root multiplicities of f over the algebraic closure, derived
/// from the squarefree decomposition; invariant under affine substitutions.
std::vector<std::pair<long, long>> multiplicity_multiset(const Poly& f);

/// Writes p = sum c_i f^i with rational constants c_i, if possible.
std::optional<std::vector<Rational>> base_f_expansion(const Poly& p,
                                                      const Poly& f);

/// Laurent polynomial over the rationals: exponents may be negative. Same
/// canonical-map representation as Poly.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  LaurentPoly(const Poly& p);  // NOLINT: lossless embedding

  static LaurentPoly monomial(long exponent, const Rational& coeff = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  long top_exponent() const;  ///< throws on zero
  long bottom_exponent() const;
  Rational coeff(long exponent) const;
  const std::map<long, Rational>& coeffs() const { return coeffs_; }

  bool is_polynomial() const;  ///< no negative exponents
  Poly to_poly() const;        ///< throws if negative exponents present
  /// Writes f = t^shift * p with p a polynomial, p(0) != 0 (f nonzero).
  std::pair<long, Poly> split_unit() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  LaurentPoly derivative() const;
  void set_coeff(long exponent, const Rational& value);

 private:
  std::map<long, Rational> coeffs_;
};

/// ord_xi(f): multiplicity of (t - xi) in f, counted negatively on
/// denominator powers of t. std::nullopt encodes ord(0) = infinity.
std::optional<long> ord_at(const LaurentPoly& f, const Rational& xi);
std::optional<long> ord_at(const Poly& f, const Rational& xi);

}  // namespace witt
