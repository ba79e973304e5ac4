#pragma once

#include <string>
#include <vector>

#include "witt/derivations.hpp"
#include "witt/subalgebra.hpp"

namespace witt {

/// Generator data of the ideal I(f) = {p : f' divides p(f)}.
struct IfIdeal {
  Poly f;
  Poly generator;  ///< minimal monic element; always squarefree
};

/// Minimal monic p with f' | p(f), found degree by degree by exact linear
/// algebra and verified by division and a squarefree check.
IfIdeal ideal_generator(const Poly& f);

/// The unique monic g of minimal degree with f' g in k[f].
Poly minimal_g(const Poly& f);

/// L(f, g) = k[f] g d, with the certified h satisfying f' g = h(f) exactly.
class LfgAlgebra {
 public:
  LfgAlgebra(Poly f, Poly g);
  static LfgAlgebra maximal(const Poly& f);  ///< L(f) = L(f, g_f)

  const Poly& f() const { return f_; }
  const Poly& g() const { return g_; }
  /// The h with f' g = h(f); the monic image conductor is h.monic().
  const Poly& h() const { return h_; }

 private:
  Poly f_;
  Poly g_;
  Poly h_;
};

/// Whether coeff(w) lies in g k[f], via exact division and base-f expansion.
bool lfg_contains(const LfgAlgebra& a, const WittElement& w);

/// The isomorphism p(f) g d -> p h d onto W(h), with an exact bracket
/// transcript on low-degree basis pairs.
struct LfgIsoPair {
  long i, j;          ///< p = t^i, q = t^j
  WittElement source_bracket;
  WittElement mapped;
  bool exact;
};

struct LfgIsoReport {
  Poly h;                       ///< unnormalised: f' g = h(f)
  Poly image_conductor;         ///< monic h: the target W(h)
  std::vector<LfgIsoPair> transcript;
  bool all_exact = false;
};

LfgIsoReport lfg_iso(const LfgAlgebra& a, long pairs = 10);

/// Derivations of L(f, g) through the isomorphism with W(h); for L(f) the
/// report always has h1_dim = 0 because h is squarefree.
DerivationSpaceReport lfg_derivation_space(const LfgAlgebra& a);

}  // namespace witt
