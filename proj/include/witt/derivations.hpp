#pragma once

#include <optional>
#include <vector>

#include "witt/subalgebra.hpp"

namespace witt {

/// A graded derivation of degree k on the span of e_m, m >= source_min: it
/// sends e_m to lambda(m) e_{m+k}, and every such derivation is a multiple of
/// ad_{e_k}, so lambda(m) = (m - k) * c.
struct GradedDerivation {
  long source_min;
  long degree;
  Rational constant;

  Rational lambda(long m) const { return Rational(m - degree) * constant; }
};

/// Derivations of a subalgebra, described through normaliser witnesses:
/// every derivation is ad_w for some w normalising L.
struct DerivationSpaceReport {
  std::vector<WittElement> normalizer_basis;  ///< outer witnesses mod L, canonical
  std::vector<WittElement> inner_generators;  ///< generators of L acting by ad
  long h1_dim = 0;
  long inner_dim = 0;  ///< size of the inner generating set reported above
};

/// Solves the graded Leibniz constraints for degree-k derivations of the span
/// of e_m (m >= n) with values in the full algebra, over the window, and
/// certifies the solution against the closed form lambda(m) = (m - k) c.
/// Exactly one basis element is returned when the window pins the system.
std::vector<GradedDerivation> graded_derivation_space(
    long n, long k, std::optional<GradedWindow> window = {},
    AlgebraKind kind = AlgebraKind::OneSided);

DerivationSpaceReport derivation_space(const FinCodimSubalgebra& l);

long h1_dim(const FinCodimSubalgebra& l);

/// Leading-term shadow of ad_w as a derivation of L: gr(ad_w) = lambda ad_{e_N}.
struct AssociatedGraded {
  long degree;                        ///< N
  Rational lambda;                    ///< leading coefficient of w
  std::optional<long> incompatible;   ///< the one degree where the shift drops
};

AssociatedGraded associated_graded_derivation(const WittElement& w,
                                              const FinCodimSubalgebra& l);

/// Evaluates the degree-5 bracket relation on e_n, e_m by exact arithmetic;
/// the result is returned and must be zero.
WittElement verify_relation(long n, long m);

}  // namespace witt
