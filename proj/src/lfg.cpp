#include "witt/lfg.hpp"

#include "witt/errors.hpp"

namespace witt {

IfIdeal ideal_generator(const Poly& f) {
  if (f.degree() < 1) throw domain_error("ideal_generator: deg f >= 1 required");
  Poly fp = f.derivative();
  IfIdeal out;
  out.f = f;
  if (fp.degree() == 0) {
    out.generator = Poly(Rational(1));  // f' is a unit, I(f) = (1)
    return out;
  }

  // Unknown monic p of degree d: p(f) = f^d + sum c_i f^i = 0 mod f'.
  const long m = fp.degree();
  std::vector<Poly> powers;  // f^i mod f'
  powers.push_back(Poly(Rational(1)));
  for (long i = 1; i <= m + 1; ++i)
    powers.push_back(divmod(powers.back() * f, fp).remainder);

  for (long d = 1; d <= m + 1; ++d) {
    QMatrix a(m, d);
    QVector rhs(m);
    for (long i = 0; i < d; ++i)
      for (long e = 0; e < m; ++e)
        a(e, i) = powers[static_cast<std::size_t>(i)].coeff(e);
    for (long e = 0; e < m; ++e)
      rhs(e) = -powers[static_cast<std::size_t>(d)].coeff(e);
    auto sol = solve_linear(a, rhs);
    if (!sol) continue;
    Poly h = Poly::monomial(d);
    for (long i = 0; i < d; ++i)
      if ((*sol)(i) != 0) h.set_coeff(i, (*sol)(i));
    // Certify by exact division, and the generator is always squarefree.
    if (!divides(fp, poly_compose(h, f)))
      throw internal_error("ideal_generator: candidate failed division check");
    if (!is_squarefree(h))
      throw internal_error("ideal_generator: generator is not squarefree");
    out.generator = h;
    return out;
  }
  throw internal_error("ideal_generator: no generator up to deg f' + 1");
}

Poly minimal_g(const Poly& f) {
  IfIdeal ideal = ideal_generator(f);
  Poly fp = f.derivative();
  if (fp.degree() == 0)
    return Poly(Rational(1));  // f' g in k[f] already for g = 1
  return exact_div(poly_compose(ideal.generator, f), fp).monic();
}

LfgAlgebra::LfgAlgebra(Poly f, Poly g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.degree() < 1) throw domain_error("L(f,g): deg f >= 1 required");
  if (g_.is_zero()) throw domain_error("L(f,g): g must be nonzero");
  auto coeffs = base_f_expansion(f_.derivative() * g_, f_);
  if (!coeffs)
    throw domain_error("L(f,g): f' g does not lie in k[f]");
  for (std::size_t i = 0; i < coeffs->size(); ++i)
    if ((*coeffs)[i] != 0) h_.set_coeff(static_cast<long>(i), (*coeffs)[i]);
  if (!(poly_compose(h_, f_) == f_.derivative() * g_))
    throw internal_error("L(f,g): base-f expansion mismatch");
}

LfgAlgebra LfgAlgebra::maximal(const Poly& f) { return LfgAlgebra(f, minimal_g(f)); }

bool lfg_contains(const LfgAlgebra& a, const WittElement& w) {
  if (w.is_zero()) return true;
  if (w.kind() != AlgebraKind::OneSided)
    throw domain_error("L(f,g) lives in the one-sided algebra");
  Poly c = w.coeff().to_poly();
  if (!divides(a.g(), c)) return false;
  return base_f_expansion(exact_div(c, a.g()), a.f()).has_value();
}

LfgIsoReport lfg_iso(const LfgAlgebra& a, long pairs) {
  LfgIsoReport report;
  report.h = a.h();
  report.image_conductor = a.h().monic();
  report.all_exact = true;

  const AlgebraKind kind = AlgebraKind::OneSided;
  long emitted = 0;
  for (long i = 0; i < 8 && emitted < pairs; ++i)
    for (long j = i + 1; j < 8 && emitted < pairs; ++j) {
      // Source side: [f^i g d, f^j g d].
      Poly pi = a.f().pow(static_cast<unsigned long>(i)) * a.g();
      Poly pj = a.f().pow(static_cast<unsigned long>(j)) * a.g();
      WittElement source = bracket(WittElement(pi, kind), WittElement(pj, kind));

      // Map through p(f) g d -> p h d: expand the bracket coefficient.
      LfgIsoPair entry;
      entry.i = i;
      entry.j = j;
      entry.source_bracket = source;
      Poly coeff = source.coeff().to_poly();
      bool ok = true;
      Poly mapped_poly;
      if (!coeff.is_zero()) {
        if (!divides(a.g(), coeff)) ok = false;
        if (ok) {
          auto expansion = base_f_expansion(exact_div(coeff, a.g()), a.f());
          if (!expansion) {
            ok = false;
          } else {
            Poly r;
            for (std::size_t e = 0; e < expansion->size(); ++e)
              if ((*expansion)[e] != 0) r.set_coeff(static_cast<long>(e),
                                                    (*expansion)[e]);
            mapped_poly = r * a.h();
          }
        }
      }
      entry.mapped = WittElement(mapped_poly, kind);

      // Target side: [t^i h d, t^j h d] must equal the image exactly.
      WittElement target = bracket(
          WittElement(Poly::monomial(i) * a.h(), kind),
          WittElement(Poly::monomial(j) * a.h(), kind));
      entry.exact = ok && entry.mapped == target;
      if (!entry.exact) report.all_exact = false;
      report.transcript.push_back(std::move(entry));
      ++emitted;
    }
  if (!report.all_exact)
    throw internal_error("lfg_iso: bracket transcript failed (invalid h)");
  return report;
}

DerivationSpaceReport lfg_derivation_space(const LfgAlgebra& a) {
  FinCodimSubalgebra image = FinCodimSubalgebra::submodule(
      a.h().monic(), AlgebraKind::OneSided);
  // Transport through L(f,g) ≅ W(h): witnesses are reported on the W(h) side.
  return derivation_space(image);
}

}  // namespace witt
