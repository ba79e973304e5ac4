#include "witt/witt_element.hpp"

#include "witt/errors.hpp"

namespace witt {

WittElement::WittElement(LaurentPoly coeff, AlgebraKind kind)
    : coeff_(std::move(coeff)), kind_(kind) {
  if (kind_ == AlgebraKind::OneSided && !coeff_.is_polynomial())
    throw domain_error("one-sided Witt element with negative exponents");
}

WittElement WittElement::basis(long n, AlgebraKind kind) {
  if (kind == AlgebraKind::OneSided && n < -1)
    throw domain_error("one-sided basis element e_n requires n >= -1");
  return WittElement(LaurentPoly::monomial(n + 1), kind);
}

long WittElement::degree() const {
  if (is_zero()) throw domain_error("degree of the zero element");
  return coeff_.top_exponent() - 1;
}

WittElement& WittElement::operator+=(const WittElement& rhs) {
  if (kind_ != rhs.kind_) throw domain_error("algebra kind mismatch");
  coeff_ += rhs.coeff_;
  return *this;
}

WittElement& WittElement::operator-=(const WittElement& rhs) {
  if (kind_ != rhs.kind_) throw domain_error("algebra kind mismatch");
  coeff_ -= rhs.coeff_;
  return *this;
}

WittElement& WittElement::operator*=(const Rational& s) {
  coeff_ *= s;
  return *this;
}

WittElement bracket(const WittElement& u, const WittElement& v) {
  if (u.kind() != v.kind()) throw domain_error("bracket: algebra kind mismatch");
  LaurentPoly result =
      u.coeff() * v.coeff().derivative() - u.coeff().derivative() * v.coeff();
  return WittElement(std::move(result), u.kind());
}

std::pair<long, WittElement> leading_data(const WittElement& w) {
  if (w.is_zero()) throw domain_error("leading_data of the zero element");
  long top = w.coeff().top_exponent();
  LaurentPoly lt = LaurentPoly::monomial(top, w.coeff().coeff(top));
  return {top - 1, WittElement(std::move(lt), w.kind())};
}

bool submodule_membership(const WittElement& w, const Poly& f) {
  if (f.is_zero()) throw domain_error("submodule_membership: zero conductor");
  if (w.is_zero()) return true;
  if (w.kind() == AlgebraKind::OneSided)
    return divides(f, w.coeff().to_poly());
  auto [shift, p] = w.coeff().split_unit();
  auto [fshift, fp] = LaurentPoly(f).split_unit();
  return divides(fp, p);
}

Poly normalize_conductor(Poly f, AlgebraKind kind) {
  if (f.is_zero()) throw domain_error("zero conductor");
  if (kind == AlgebraKind::TwoSided) {
    auto [shift, p] = LaurentPoly(f).split_unit();
    f = p;
  }
  return f.monic();
}

}  // namespace witt
