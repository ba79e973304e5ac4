#include "witt/poly.hpp"

#include <algorithm>

#include "witt/errors.hpp"

namespace witt {

namespace {

void map_add(std::map<long, Rational>& into, long exponent, const Rational& v) {
  if (v == 0) return;
  auto it = into.find(exponent);
  if (it == into.end()) {
    into.emplace(exponent, v);
    return;
  }
  it->second += v;
  if (it->second == 0) into.erase(it);
}

std::map<long, Rational> map_mul(const std::map<long, Rational>& a,
                                 const std::map<long, Rational>& b) {
  std::map<long, Rational> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) map_add(out, ea + eb, ca * cb);
  return out;
}

}  // namespace

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly Poly::monomial(long exponent, const Rational& coeff) {
  if (exponent < 0) throw domain_error("Poly: negative exponent");
  Poly p;
  if (coeff != 0) p.coeffs_.emplace(exponent, coeff);
  return p;
}

long Poly::degree() const {
  if (coeffs_.empty()) return kMinusInfinity;
  return coeffs_.rbegin()->first;
}

Rational Poly::coeff(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational Poly::leading_coeff() const {
  if (coeffs_.empty()) return Rational(0);
  return coeffs_.rbegin()->second;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) map_add(coeffs_, e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) map_add(coeffs_, e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  coeffs_ = map_mul(coeffs_, rhs.coeffs_);
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= s;
  return *this;
}

Poly Poly::derivative() const {
  Poly out;
  for (const auto& [e, c] : coeffs_)
    if (e > 0) out.coeffs_.emplace(e - 1, c * Rational(e));
  return out;
}

Rational Poly::eval(const Rational& x) const {
  // Horner over the sparse support.
  Rational acc(0);
  long prev = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev >= 0) acc *= pow_rational(x, prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc *= pow_rational(x, prev);
  return acc;
}

Poly Poly::pow(unsigned long n) const {
  Poly acc(Rational(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1UL;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading_coeff());
}

void Poly::set_coeff(long exponent, const Rational& value) {
  if (exponent < 0) throw domain_error("Poly: negative exponent");
  coeffs_.erase(exponent);
  if (value != 0) coeffs_.emplace(exponent, value);
}

PolyDivMod divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw domain_error("polynomial division by zero");
  PolyDivMod out;
  out.remainder = num;
  const long dd = den.degree();
  const Rational lc = den.leading_coeff();
  while (!out.remainder.is_zero() && out.remainder.degree() >= dd) {
    long shift = out.remainder.degree() - dd;
    Rational factor = out.remainder.leading_coeff() / lc;
    Poly term = Poly::monomial(shift, factor);
    out.quotient += term;
    out.remainder -= term * den;
  }
  return out;
}

bool divides(const Poly& den, const Poly& num) {
  if (den.is_zero()) return num.is_zero();
  return divmod(num, den).remainder.is_zero();
}

Poly exact_div(const Poly& num, const Poly& den) {
  PolyDivMod dm = divmod(num, den);
  if (!dm.remainder.is_zero())
    throw domain_error("exact_div: division is not exact");
  return dm.quotient;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw domain_error("squarefree_part of zero polynomial");
  if (f.degree() == 0) return Poly(Rational(1));
  return exact_div(f, gcd(f, f.derivative())).monic();
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

Poly poly_compose(const Poly& p, const Poly& q) {
  // Horner over the sparse support of p.
  Poly acc;
  long prev = -1;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    if (prev >= 0) acc *= q.pow(static_cast<unsigned long>(prev - it->first));
    acc += Poly(it->second);
    prev = it->first;
  }
  if (prev > 0) acc *= q.pow(static_cast<unsigned long>(prev));
  return acc;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw internal_error("divisors of zero requested");
  // Trial division; inputs here are desk scale by construction.
  if (n > Integer("281474976710656"))  // 2^48
    throw domain_error("rational root enumeration: coefficient too large");
  unsigned long long nn = n.convert_to<unsigned long long>();
  std::vector<Integer> divs;
  for (unsigned long long i = 1; i * i <= nn; ++i) {
    if (nn % i == 0) {
      divs.emplace_back(i);
      if (i * i != nn) divs.emplace_back(nn / i);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::map<Rational, long> rational_roots(const Poly& f) {
  if (f.is_zero()) throw domain_error("rational_roots of zero polynomial");
  std::map<Rational, long> roots;
  Poly work = f;

  // Factor out t^k first.
  long low = work.coeffs().begin()->first;
  if (low > 0) {
    roots[Rational(0)] = low;
    Poly shifted;
    for (const auto& [e, c] : work.coeffs()) shifted.set_coeff(e - low, c);
    work = shifted;
  }
  if (work.degree() <= 0) return roots;

  // Primitive integer form.
  Integer den_lcm(1);
  for (const auto& [e, c] : work.coeffs())
    den_lcm = lcm(den_lcm, denominator(c));
  Integer content(0);
  for (const auto& [e, c] : work.coeffs())
    content = gcd(content, Integer(numerator(c) * (den_lcm / denominator(c))));
  Integer lead = numerator(work.leading_coeff()) *
                 (den_lcm / denominator(work.leading_coeff()));
  Integer trail = numerator(work.coeff(0)) * (den_lcm / denominator(work.coeff(0)));
  lead /= content;
  trail /= content;

  std::vector<Rational> candidates;
  for (const Integer& p : positive_divisors(trail))
    for (const Integer& q : positive_divisors(lead)) {
      candidates.emplace_back(p, q);
      candidates.emplace_back(-p, q);
    }

  for (const Rational& xi : candidates) {
    if (work.eval(xi) != 0) continue;
    long mult = 0;
    Poly factor = Poly::variable() - Poly(xi);
    while (divides(factor, work)) {
      work = exact_div(work, factor);
      ++mult;
    }
    roots[xi] = mult;
    if (work.degree() <= 0) break;
  }
  return roots;
}

std::vector<std::pair<long, long>> multiplicity_multiset(const Poly& f) {
  if (f.is_zero()) throw domain_error("multiplicity_multiset of zero polynomial");
  // Yun-style decomposition: f = prod a_i^i with the a_i squarefree, coprime.
  std::vector<std::pair<long, long>> out;
  Poly work = f.monic();
  long mult = 1;
  while (work.degree() > 0) {
    Poly g = gcd(work, work.derivative());
    Poly square_free_layer = exact_div(work, g);  // product of all distinct factors
    // Factors of multiplicity exactly `mult` in the original: those roots of
    // square_free_layer which are not roots of g.
    Poly exact_layer = exact_div(square_free_layer, gcd(square_free_layer, g));
    if (exact_layer.degree() > 0) out.emplace_back(mult, exact_layer.degree());
    work = g;
    ++mult;
  }
  return out;
}

std::optional<std::vector<Rational>> base_f_expansion(const Poly& p, const Poly& f) {
  if (f.degree() < 1) throw domain_error("base_f_expansion: deg f >= 1 required");
  std::vector<Rational> coeffs;
  Poly work = p;
  while (!work.is_zero()) {
    PolyDivMod dm = divmod(work, f);
    if (dm.remainder.degree() > 0) return std::nullopt;
    coeffs.push_back(dm.remainder.coeff(0));
    work = dm.quotient;
  }
  if (coeffs.empty()) coeffs.push_back(Rational(0));
  return coeffs;
}

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) coeffs_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(const Poly& p) : coeffs_(p.coeffs_) {}

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_.emplace(exponent, coeff);
  return p;
}

long LaurentPoly::top_exponent() const {
  if (coeffs_.empty()) throw domain_error("top_exponent of zero");
  return coeffs_.rbegin()->first;
}

long LaurentPoly::bottom_exponent() const {
  if (coeffs_.empty()) throw domain_error("bottom_exponent of zero");
  return coeffs_.begin()->first;
}

Rational LaurentPoly::coeff(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_polynomial() const {
  return coeffs_.empty() || coeffs_.begin()->first >= 0;
}

Poly LaurentPoly::to_poly() const {
  if (!is_polynomial())
    throw domain_error("LaurentPoly with negative exponents is not a Poly");
  Poly p;
  p.coeffs_ = coeffs_;
  return p;
}

std::pair<long, Poly> LaurentPoly::split_unit() const {
  if (is_zero()) throw domain_error("split_unit of zero");
  long shift = bottom_exponent();
  Poly p;
  for (const auto& [e, c] : coeffs_) p.coeffs_.emplace(e - shift, c);
  return {shift, p};
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) map_add(coeffs_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) map_add(coeffs_, e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  coeffs_ = map_mul(coeffs_, rhs.coeffs_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly out;
  for (const auto& [e, c] : coeffs_)
    if (e != 0) out.coeffs_.emplace(e - 1, c * Rational(e));
  return out;
}

void LaurentPoly::set_coeff(long exponent, const Rational& value) {
  coeffs_.erase(exponent);
  if (value != 0) coeffs_.emplace(exponent, value);
}

std::optional<long> ord_at(const LaurentPoly& f, const Rational& xi) {
  if (f.is_zero()) return std::nullopt;
  auto [shift, p] = f.split_unit();
  if (xi == 0) return shift;
  long mult = 0;
  Poly factor = Poly::variable() - Poly(xi);
  Poly work = p;
  while (work.eval(xi) == 0) {
    work = exact_div(work, factor);
    ++mult;
  }
  return mult;
}

std::optional<long> ord_at(const Poly& f, const Rational& xi) {
  return ord_at(LaurentPoly(f), xi);
}

}  // namespace witt
