#pragma once

#include <utility>

#include "witt/poly.hpp"

namespace witt {

/// Ambient algebra: derivations of the polynomial ring (coefficient exponents
/// >= 0, basis e_n for n >= -1) or of the Laurent ring (all integers).
enum class AlgebraKind { OneSided, TwoSided };

/// Degree window used to truncate infinite-dimensional spaces to the span of
/// e_lo .. e_hi during candidate searches.
struct GradedWindow {
  long lo;
  long hi;
};

/// An element f * d of the (one- or two-sided) Witt algebra, where d = d/dt.
class WittElement {
 public:
  WittElement() : kind_(AlgebraKind::OneSided) {}
  WittElement(LaurentPoly coeff, AlgebraKind kind);
  WittElement(const Poly& coeff, AlgebraKind kind)
      : WittElement(LaurentPoly(coeff), kind) {}

  /// e_n = t^{n+1} d. Requires n >= -1 for the one-sided algebra.
  static WittElement basis(long n, AlgebraKind kind);
  static WittElement zero(AlgebraKind kind) { return WittElement(LaurentPoly(), kind); }

  const LaurentPoly& coeff() const { return coeff_; }
  AlgebraKind kind() const { return kind_; }
  bool is_zero() const { return coeff_.is_zero(); }

  /// degree(f d) = top exponent of f, minus 1. Throws on zero.
  long degree() const;

  WittElement operator-() const { return WittElement(-coeff_, kind_); }
  WittElement& operator+=(const WittElement& rhs);
  WittElement& operator-=(const WittElement& rhs);
  WittElement& operator*=(const Rational& s);

  friend WittElement operator+(WittElement a, const WittElement& b) { return a += b; }
  friend WittElement operator-(WittElement a, const WittElement& b) { return a -= b; }
  friend WittElement operator*(WittElement a, const Rational& s) { return a *= s; }
  friend WittElement operator*(const Rational& s, WittElement a) { return a *= s; }
  bool operator==(const WittElement& rhs) const {
    return kind_ == rhs.kind_ && coeff_ == rhs.coeff_;
  }

 private:
  LaurentPoly coeff_;
  AlgebraKind kind_;
};

/// [f d, g d] = (f g' - f' g) d. Kinds must match.
WittElement bracket(const WittElement& u, const WittElement& v);

/// (degree, leading term). Throws domain_error on the zero element.
std::pair<long, WittElement> leading_data(const WittElement& w);

/// Whether w lies in the submodule-subalgebra W(f) = f W, i.e. whether f
/// divides coeff(w) in the appropriate ring. For the two-sided algebra the
/// conductor is normalised to have nonzero constant term, so divisibility
/// ignores powers of t.
bool submodule_membership(const WittElement& w, const Poly& f);

/// Conductor normalisation: monic, and with nonzero constant term in the
/// two-sided case (powers of t are units there).
Poly normalize_conductor(Poly f, AlgebraKind kind);

}  // namespace witt
