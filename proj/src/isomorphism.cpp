#include "witt/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "witt/errors.hpp"
#include "witt/parse.hpp"

namespace witt {

namespace {

Poly linear_substitution(const Rational& alpha, const Rational& x) {
  // s = alpha (t - x)
  Poly lin = Poly::monomial(1, alpha);
  lin.set_coeff(0, -alpha * x);
  return lin;
}

LaurentPoly tau_coeff(const LaurentPoly& p) {
  // p d -> -t^2 p(1/t) d
  LaurentPoly out;
  for (const auto& [e, c] : p.coeffs()) out.set_coeff(2 - e, -c);
  return out;
}

LaurentPoly sigma_coeff(const LaurentPoly& p, const Rational& alpha) {
  // p d -> alpha^{-1} p(alpha t) d
  LaurentPoly out;
  for (const auto& [e, c] : p.coeffs())
    out.set_coeff(e, c * pow_rational(alpha, e - 1));
  return out;
}

}  // namespace

Automorphism Automorphism::one_sided(const Rational& x, const Rational& alpha) {
  if (alpha == 0) throw domain_error("automorphism with alpha = 0");
  Automorphism a;
  a.kind = AlgebraKind::OneSided;
  a.x = x;
  a.alpha = alpha;
  return a;
}

Automorphism Automorphism::two_sided(const Rational& alpha, bool inverted) {
  if (alpha == 0) throw domain_error("automorphism with alpha = 0");
  Automorphism a;
  a.kind = AlgebraKind::TwoSided;
  a.alpha = alpha;
  a.inverted = inverted;
  return a;
}

WittElement apply_automorphism(const Automorphism& a, const WittElement& w) {
  if (a.kind != w.kind()) throw domain_error("automorphism kind mismatch");
  if (w.is_zero()) return w;
  if (a.kind == AlgebraKind::OneSided) {
    Poly p = w.coeff().to_poly();
    Poly image = poly_compose(p, linear_substitution(a.alpha, a.x));
    return WittElement(LaurentPoly(image) * (Rational(1) / a.alpha), a.kind);
  }
  LaurentPoly c = w.coeff();
  if (a.inverted) c = tau_coeff(c);
  return WittElement(sigma_coeff(c, a.alpha), a.kind);
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.kind != b.kind) throw domain_error("automorphism kind mismatch");
  Automorphism out;
  out.kind = a.kind;
  if (a.kind == AlgebraKind::OneSided) {
    out.alpha = a.alpha * b.alpha;
    out.x = a.x + b.x / a.alpha;
    return out;
  }
  // sigma_p tau^e . sigma_q tau^f = sigma_{p q^{+-1}} tau^{e+f}
  out.alpha = a.inverted ? a.alpha / b.alpha : a.alpha * b.alpha;
  out.inverted = a.inverted != b.inverted;
  return out;
}

Automorphism inverse(const Automorphism& a) {
  Automorphism out;
  out.kind = a.kind;
  if (a.kind == AlgebraKind::OneSided) {
    out.alpha = Rational(1) / a.alpha;
    out.x = -a.alpha * a.x;
    return out;
  }
  out.inverted = a.inverted;
  out.alpha = a.inverted ? a.alpha : Rational(1) / a.alpha;
  return out;
}

namespace {

// The conductor of the image of W(f), normalised.
Poly conductor_image(const Poly& f, const Automorphism& a) {
  if (a.kind == AlgebraKind::OneSided)
    return poly_compose(f, linear_substitution(a.alpha, a.x)).monic();
  Poly base = f;
  if (a.inverted) {
    Poly rev;
    long n = f.degree();
    for (const auto& [e, c] : f.coeffs()) rev.set_coeff(n - e, c);
    base = rev;
  }
  Poly image;
  for (const auto& [e, c] : base.coeffs())
    image.set_coeff(e, c * pow_rational(a.alpha, e));
  return normalize_conductor(image, AlgebraKind::TwoSided);
}

struct MultiplicativeSystem {
  // alpha^m = r for each entry; m >= 1, r != 0.
  std::vector<std::pair<long, Rational>> equations;

  enum class Status { Free, Candidates, Inconsistent, Irrational };
  Status status = Status::Free;
  std::vector<Rational> candidates;
  Poly constraint;  // for Irrational: alpha^d - rho
};

void ext_gcd(long a, long b, long& g, long& s, long& t) {
  if (b == 0) {
    g = a;
    s = 1;
    t = 0;
    return;
  }
  long g2, s2, t2;
  ext_gcd(b, a % b, g2, s2, t2);
  g = g2;
  s = t2;
  t = s2 - (a / b) * t2;
}

void solve_multiplicative(MultiplicativeSystem& sys) {
  if (sys.equations.empty()) {
    sys.status = MultiplicativeSystem::Status::Free;
    return;
  }
  long d = sys.equations[0].first;
  Rational rho = sys.equations[0].second;
  for (std::size_t i = 1; i < sys.equations.size(); ++i) {
    long g, s, t;
    ext_gcd(d, sys.equations[i].first, g, s, t);
    rho = pow_rational(rho, s) * pow_rational(sys.equations[i].second, t);
    d = g;
  }
  if (d < 0) {
    d = -d;
    rho = Rational(1) / rho;
  }
  // Solvability over the closure: every equation must be a power of alpha^d = rho.
  for (const auto& [m, r] : sys.equations)
    if (pow_rational(rho, m / d) != r) {
      sys.status = MultiplicativeSystem::Status::Inconsistent;
      return;
    }
  auto root = exact_root(rho, static_cast<unsigned>(d));
  std::vector<Rational> candidates;
  if (root) {
    candidates.push_back(*root);
    if (d % 2 == 0 && *root != 0) candidates.push_back(-*root);
  }
  std::vector<Rational> verified;
  for (const Rational& alpha : candidates) {
    bool ok = alpha != 0;
    for (const auto& [m, r] : sys.equations)
      if (pow_rational(alpha, m) != r) ok = false;
    if (ok) verified.push_back(alpha);
  }
  if (verified.empty()) {
    sys.status = MultiplicativeSystem::Status::Irrational;
    sys.constraint = Poly::monomial(d) - Poly(rho);
    return;
  }
  sys.status = MultiplicativeSystem::Status::Candidates;
  sys.candidates = std::move(verified);
}

std::string multiset_string(const Poly& f) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto [mult, count] : multiplicity_multiset(f)) {
    for (long i = 0; i < count; ++i) {
      if (!first) out << ",";
      out << mult;
      first = false;
    }
  }
  out << "}";
  return out.str();
}

std::optional<IsoWitness> verify_one_sided(const Poly& f, const Poly& g,
                                           const Rational& x,
                                           const Rational& alpha) {
  Poly image = poly_compose(f, linear_substitution(alpha, x));
  if (image.degree() != g.degree()) return std::nullopt;
  Rational gamma = image.leading_coeff() / g.leading_coeff();
  if (!(image == gamma * g)) return std::nullopt;
  IsoWitness w;
  w.automorphism = Automorphism::one_sided(x, alpha);
  w.gamma = gamma;
  return w;
}

std::optional<IsoWitness> verify_two_sided(const Poly& f, const Poly& g,
                                           const Rational& alpha,
                                           bool inverted) {
  // Spec forms: f(alpha t) = gamma g(t), or t^n f(alpha / t) = gamma g(t).
  Poly image;
  long n = f.degree();
  for (const auto& [e, c] : f.coeffs())
    image.set_coeff(inverted ? n - e : e, c * pow_rational(alpha, e));
  if (image.degree() != g.degree()) return std::nullopt;
  Rational gamma = image.leading_coeff() / g.leading_coeff();
  if (!(image == gamma * g)) return std::nullopt;
  IsoWitness w;
  // t -> alpha/t induces sigma_{1/alpha} tau on the algebra.
  w.automorphism =
      Automorphism::two_sided(inverted ? Rational(1) / alpha : alpha, inverted);
  w.gamma = gamma;
  return w;
}

IsoResult decide_one_sided(const Poly& f, const Poly& g) {
  long n = f.degree();
  if (n != g.degree())
    return NotIsomorphic{"conductor degrees (codimensions) differ: " +
                         std::to_string(n) + " vs " +
                         std::to_string(g.degree())};
  if (n == 0) {
    IsoWitness w;
    w.automorphism = Automorphism::identity(AlgebraKind::OneSided);
    w.gamma = f.coeff(0) / g.coeff(0);
    return w;
  }

  Poly fm = f.monic();
  Poly gm = g.monic();
  Rational af = fm.coeff(n - 1);
  Rational ag = gm.coeff(n - 1);
  // Depress both: the shift is then pinned by the substitution.
  Poly fhat = poly_compose(fm, Poly::variable() - Poly(af / Rational(n)));
  Poly ghat = poly_compose(gm, Poly::variable() - Poly(ag / Rational(n)));

  auto support = [n](const Poly& p) {
    std::vector<long> s;
    for (const auto& [e, c] : p.coeffs())
      if (e < n) s.push_back(e);
    return s;
  };
  if (support(fhat) != support(ghat)) {
    std::string ms_f = multiset_string(f);
    std::string ms_g = multiset_string(g);
    std::string reason =
        "no affine substitution matches the depressed coefficient supports";
    if (ms_f != ms_g)
      reason = "root multiplicity multisets differ: " + ms_f + " vs " + ms_g;
    return NotIsomorphic{reason};
  }

  MultiplicativeSystem sys;
  for (long j : support(fhat))
    sys.equations.push_back({n - j, fhat.coeff(j) / ghat.coeff(j)});
  solve_multiplicative(sys);

  auto witness_for = [&](const Rational& alpha) {
    Rational x = af / (Rational(n) * alpha) - ag / Rational(n);
    return verify_one_sided(f, g, x, alpha);
  };
  switch (sys.status) {
    case MultiplicativeSystem::Status::Free: {
      auto w = witness_for(Rational(1));
      if (!w) throw internal_error("decide_isomorphic: free witness failed");
      return *w;
    }
    case MultiplicativeSystem::Status::Candidates: {
      for (const Rational& alpha : sys.candidates)
        if (auto w = witness_for(alpha)) return *w;
      throw internal_error("decide_isomorphic: verified candidate failed "
                           "substitution");
    }
    case MultiplicativeSystem::Status::Inconsistent: {
      std::string ms_f = multiset_string(f);
      std::string ms_g = multiset_string(g);
      if (ms_f != ms_g)
        return NotIsomorphic{"root multiplicity multisets differ: " + ms_f +
                             " vs " + ms_g};
      return NotIsomorphic{
          "coefficient ratios admit no scaling over any field extension"};
    }
    case MultiplicativeSystem::Status::Irrational:
      return NoRationalWitness{sys.constraint};
  }
  throw internal_error("decide_isomorphic: unreachable");
}

IsoResult decide_two_sided(const Poly& f_in, const Poly& g_in) {
  Poly f = normalize_conductor(f_in, AlgebraKind::TwoSided);
  Poly g = normalize_conductor(g_in, AlgebraKind::TwoSided);
  long n = f.degree();
  if (n != g.degree())
    return NotIsomorphic{"conductor degrees differ after unit normalisation"};
  if (n == 0) {
    IsoWitness w;
    w.automorphism = Automorphism::identity(AlgebraKind::TwoSided);
    w.gamma = Rational(1);
    return w;
  }

  std::optional<Poly> constraint;
  for (bool inverted : {false, true}) {
    auto support = [n](const Poly& p) {
      std::vector<long> s;
      for (const auto& [e, c] : p.coeffs()) s.push_back(e);
      return s;
    };
    std::vector<long> sf = support(f);
    if (inverted)
      for (long& e : sf) e = n - e;
    std::sort(sf.begin(), sf.end());
    if (sf != support(g)) continue;

    // Coefficientwise: (inverted) f_{n-j} alpha^{n-j} = gamma g_j with
    // gamma fixed at j = n; (direct) f_j alpha^j = gamma g_j, gamma = alpha^n.
    MultiplicativeSystem sys;
    if (!inverted) {
      for (const auto& [e, c] : f.coeffs())
        if (e < n) sys.equations.push_back({n - e, c / g.coeff(e)});
    } else {
      Rational gamma = f.coeff(0) / g.coeff(n);  // j = n entry
      for (const auto& [e, c] : g.coeffs())
        if (e < n)
          sys.equations.push_back({n - e, gamma * c / f.coeff(n - e)});
    }
    solve_multiplicative(sys);
    // Verify against the unit-normalised conductors; powers of t are units.
    if (sys.status == MultiplicativeSystem::Status::Free) {
      if (auto w = verify_two_sided(f, g, Rational(1), inverted)) return *w;
    } else if (sys.status == MultiplicativeSystem::Status::Candidates) {
      for (const Rational& alpha : sys.candidates)
        if (auto w = verify_two_sided(f, g, alpha, inverted)) return *w;
    } else if (sys.status == MultiplicativeSystem::Status::Irrational &&
               !constraint) {
      constraint = sys.constraint;
    }
  }
  if (constraint) return NoRationalWitness{*constraint};
  std::string ms_f = multiset_string(f);
  std::string ms_g = multiset_string(g);
  if (ms_f != ms_g)
    return NotIsomorphic{"root multiplicity multisets differ: " + ms_f +
                         " vs " + ms_g};
  return NotIsomorphic{
      "neither a scaling nor an inversion matches the conductors"};
}

}  // namespace

IsoResult decide_isomorphic(const Poly& f, const Poly& g, AlgebraKind kind) {
  if (f.is_zero() || g.is_zero())
    throw domain_error("decide_isomorphic: zero conductor");
  if (kind == AlgebraKind::OneSided) return decide_one_sided(f, g);
  return decide_two_sided(f, g);
}

AutGroupDescription automorphism_group(const Poly& f, AlgebraKind kind) {
  if (f.is_zero()) throw domain_error("automorphism_group: zero conductor");
  AutGroupDescription out;
  out.elements.push_back(Automorphism::identity(kind));

  if (kind == AlgebraKind::OneSided) {
    long n = f.degree();
    if (n == 0) {
      out.summary = "W(constant) is the whole algebra; every rho_{x;alpha}";
      out.torus = true;
      out.torus_root = Rational(0);
      return out;
    }
    Poly fm = f.monic();
    Rational a = fm.coeff(n - 1);
    Poly fhat = poly_compose(fm, Poly::variable() - Poly(a / Rational(n)));
    bool monomial = fhat == Poly::monomial(n);
    if (monomial) {
      out.torus = true;
      out.torus_root = -a / Rational(n);
      out.summary =
          "one-parameter family: x = x0 (1 - 1/alpha), alpha arbitrary, "
          "x0 = " +
          to_string(out.torus_root);
      return out;
    }
    long d = 0;
    for (const auto& [e, c] : fhat.coeffs())
      if (e < n) d = std::gcd(d, n - e);
    if (d % 2 == 0) {
      Rational alpha(-1);
      Rational x = a / (Rational(n) * alpha) - a / Rational(n);
      if (auto w = verify_one_sided(f, f, x, alpha))
        out.elements.push_back(w->automorphism);
    }
    out.summary = out.elements.size() == 1
                      ? "identity only over the rationals"
                      : "identity and one affine involution";
    return out;
  }

  // Two-sided: scalings with f(alpha t) proportional to f, plus inverted maps.
  Poly fn = normalize_conductor(f, kind);
  long n = fn.degree();
  if (n == 0) {
    out.summary = "W(unit) is the whole algebra; every sigma_alpha and tau";
    out.torus = true;
    out.torus_root = Rational(0);
    return out;
  }
  for (bool inverted : {false, true}) {
    MultiplicativeSystem sys;
    bool support_ok = true;
    if (!inverted) {
      for (const auto& [e, c] : fn.coeffs())
        if (e < n) sys.equations.push_back({n - e, c / fn.coeff(e)});
    } else {
      for (const auto& [e, c] : fn.coeffs())
        if (fn.coeff(n - e) == 0) support_ok = false;
      if (support_ok) {
        Rational gamma = fn.coeff(0) / fn.coeff(n);
        for (const auto& [e, c] : fn.coeffs())
          if (e < n) sys.equations.push_back({n - e, gamma * c / fn.coeff(n - e)});
      }
    }
    if (!support_ok) continue;
    solve_multiplicative(sys);
    std::vector<Rational> candidates;
    if (sys.status == MultiplicativeSystem::Status::Free)
      candidates.push_back(Rational(1));
    else if (sys.status == MultiplicativeSystem::Status::Candidates)
      candidates = sys.candidates;
    for (const Rational& alpha : candidates) {
      if (!inverted && alpha == 1) continue;  // identity already listed
      if (auto w = verify_two_sided(fn, fn, alpha, inverted))
        out.elements.push_back(w->automorphism);
    }
  }
  out.summary = std::to_string(out.elements.size()) +
                " rational automorphism(s) stabilise the conductor";
  return out;
}

FinCodimSubalgebra transport_subalgebra(const FinCodimSubalgebra& l,
                                        const Automorphism& a) {
  if (l.kind() != a.kind) throw domain_error("automorphism kind mismatch");
  Poly image = conductor_image(l.conductor(), a);
  std::vector<WittElement> extras;
  for (const WittElement& c : l.coset_basis())
    extras.push_back(apply_automorphism(a, c));
  FinCodimSubalgebra out = canonicalize_known(l.kind(), image, extras);
  const SubalgebraCertificate& cert = out.certificate();
  if (!cert.sandwich || !cert.closure)
    throw internal_error("transport_subalgebra: certificate failure");
  if (out.codim() != l.codim())
    throw internal_error("transport_subalgebra: codimension changed");
  return out;
}

}  // namespace witt
