#include "witt/derivations.hpp"

#include <map>

#include "witt/errors.hpp"

namespace witt {

std::vector<GradedDerivation> graded_derivation_space(
    long n, long k, std::optional<GradedWindow> window, AlgebraKind kind) {
  if (kind == AlgebraKind::OneSided && n < -1)
    throw domain_error("graded_derivation_space: n >= -1 required");
  GradedWindow w = window ? *window
                          : GradedWindow{kind == AlgebraKind::OneSided ? n : -20,
                                         std::max(n, 0L) + 24};
  long lo = kind == AlgebraKind::OneSided ? n : w.lo;
  long hi = w.hi;
  if (hi - lo < 16)
    throw window_error("graded_derivation_space: window must cover 16 degrees",
                       lo, lo + 24);

  // Unknowns lambda_m for m in [lo, hi]; one Leibniz constraint per pair
  // m < l with m + l in range:
  //   (l - m) lambda_{m+l} = (l + k - m) lambda_l + (l - m - k) lambda_m.
  const long count = hi - lo + 1;
  auto idx = [lo](long m) { return m - lo; };

  long rows = 0;
  for (long m = lo; m <= hi; ++m)
    for (long l = m + 1; l <= hi; ++l)
      if (m + l >= lo && m + l <= hi) ++rows;

  QMatrix a = QMatrix::Zero(rows, count);
  long r = 0;
  for (long m = lo; m <= hi; ++m)
    for (long l = m + 1; l <= hi; ++l) {
      if (m + l < lo || m + l > hi) continue;
      a(r, idx(m + l)) += Rational(l - m);
      a(r, idx(l)) -= Rational(l + k - m);
      a(r, idx(m)) -= Rational(l - m - k);
      ++r;
    }

  QMatrix ker = kernel_basis(a);
  if (ker.cols() == 0) throw internal_error("graded solver lost ad_{e_k}");
  if (ker.cols() > 1)
    throw window_error("graded_derivation_space: window does not pin the system",
                       lo, hi + 16);

  // The restriction of ad_{e_k} solves the system and spans the kernel, so
  // the window solution must match lambda_m = (m - k) c pointwise.
  Rational c;
  for (long m = lo; m <= hi; ++m)
    if (m != k && ker(idx(m), 0) != 0) {
      c = ker(idx(m), 0) / Rational(m - k);
      break;
    }
  if (c == 0) throw internal_error("graded solver returned the zero derivation");
  for (long m = lo; m <= hi; ++m)
    if (ker(idx(m), 0) != Rational(m - k) * c)
      throw internal_error("graded solution does not extend globally");

  return {GradedDerivation{n, k, Rational(1)}};
}

DerivationSpaceReport derivation_space(const FinCodimSubalgebra& l) {
  DerivationSpaceReport report;
  FinCodimSubalgebra n = normalizer(l);
  report.h1_dim = l.codim() - n.codim();

  // Lift a basis of N(L)/L: spanning candidates are the conductor module
  // generators of N (a Krylov range of them covers (W(f_N) + L)/L) plus its
  // coset representatives, all reduced modulo L.
  std::vector<WittElement> candidates;
  long span_k = l.conductor().degree() + 1;
  long klo = l.kind() == AlgebraKind::OneSided ? 0 : -span_k;
  for (long k = klo; k <= span_k; ++k)
    candidates.push_back(WittElement(
        LaurentPoly(n.conductor()) * LaurentPoly::monomial(k), l.kind()));
  for (const WittElement& c : n.coset_basis()) candidates.push_back(c);

  std::vector<long> quotient = l.quotient_exponents();
  QMatrix rows_mat(static_cast<Eigen::Index>(candidates.size()),
                   static_cast<Eigen::Index>(quotient.size()));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    WittElement red = l.reduce(candidates[i]);
    for (std::size_t q = 0; q < quotient.size(); ++q)
      rows_mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(q)) =
          red.coeff().coeff(quotient[q]);
  }
  RowEchelon re = row_space(rows_mat);
  for (Eigen::Index r = 0; r < re.mat.rows(); ++r) {
    LaurentPoly p;
    for (std::size_t q = 0; q < quotient.size(); ++q)
      p.set_coeff(quotient[q], re.mat(r, static_cast<Eigen::Index>(q)));
    report.normalizer_basis.emplace_back(p, l.kind());
  }
  if (static_cast<long>(report.normalizer_basis.size()) != report.h1_dim)
    throw internal_error("derivation_space: witness count != dim N(L)/L");

  report.inner_generators = l.generators();
  report.inner_dim = static_cast<long>(report.inner_generators.size());

  // Submodule cross-check: the linear-algebra path must match the closed
  // form deg f - deg rad f.
  if (l.coset_basis().empty()) {
    long formula = l.conductor().degree() -
                   squarefree_part(l.conductor()).degree();
    if (report.h1_dim != formula)
      throw internal_error("derivation_space: normalizer path disagrees with "
                           "the degree formula");
  }
  return report;
}

long h1_dim(const FinCodimSubalgebra& l) {
  return l.codim() - normalizer(l).codim();
}

AssociatedGraded associated_graded_derivation(const WittElement& w,
                                              const FinCodimSubalgebra& l) {
  if (w.kind() != l.kind()) throw domain_error("algebra kind mismatch");
  if (w.is_zero()) throw domain_error("associated graded of the zero derivation");
  // w must normalise L: inside W(rad f) and compatible with the coset basis.
  Poly rad = squarefree_part(l.conductor());
  if (!submodule_membership(w, rad))
    throw domain_error("element does not normalise the subalgebra");
  for (const WittElement& c : l.coset_basis())
    if (!l.contains(bracket(w, c)))
      throw domain_error("element does not normalise the subalgebra");

  auto [deg, lt] = leading_data(w);
  AssociatedGraded out;
  out.degree = deg;
  out.lambda = lt.coeff().coeff(deg + 1);
  // ad_w keeps the full degree shift except on elements of degree N, where
  // the (m - N) factor vanishes.
  if (l.kind() == AlgebraKind::TwoSided || deg >= l.min_degree())
    out.incompatible = deg;
  return out;
}

WittElement verify_relation(long n, long m) {
  const AlgebraKind kind = AlgebraKind::TwoSided;
  WittElement en = WittElement::basis(n, kind);
  WittElement em = WittElement::basis(m, kind);
  WittElement b = bracket(en, em);                  // [e_n, e_m]
  WittElement bb = bracket(em, bracket(en, b));     // [e_m, [e_n, [e_n, e_m]]]
  WittElement first = bracket(b, bracket(b, bracket(b, bb)));
  WittElement second = bracket(bb, bracket(bb, b));
  return Rational(n * m) * first +
         Rational(3 * (m - n) * (n + m)) * second;
}

}  // namespace witt
