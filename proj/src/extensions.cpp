#include "witt/extensions.hpp"

#include <algorithm>

#include "witt/derivations.hpp"
#include "witt/errors.hpp"

namespace witt {

namespace {

Rational laurent_eval(const LaurentPoly& p, const Rational& xi) {
  Rational acc(0);
  for (const auto& [e, c] : p.coeffs()) {
    if (e < 0 && xi == 0)
      throw domain_error("evaluating a Laurent polynomial at its pole");
    acc += c * pow_rational(xi, e);
  }
  return acc;
}

// Matrix of the induced action of u on the quotient (ambient / L), in the
// canonical quotient coordinates.
QMatrix action_matrix(const FinCodimSubalgebra& l, const std::vector<long>& qexp,
                      const WittElement& u) {
  const Eigen::Index q = static_cast<Eigen::Index>(qexp.size());
  QMatrix a(q, q);
  for (Eigen::Index j = 0; j < q; ++j) {
    WittElement basis_vec(LaurentPoly::monomial(qexp[static_cast<std::size_t>(j)]),
                          l.kind());
    WittElement red = l.reduce(bracket(u, basis_vec));
    for (Eigen::Index i = 0; i < q; ++i)
      a(i, j) = red.coeff().coeff(qexp[static_cast<std::size_t>(i)]);
  }
  return a;
}

WittElement lift_quotient_vector(const FinCodimSubalgebra& l,
                                 const std::vector<long>& qexp, const QVector& v) {
  LaurentPoly p;
  for (std::size_t i = 0; i < qexp.size(); ++i)
    p.set_coeff(qexp[i], v(static_cast<Eigen::Index>(i)));
  return WittElement(p, l.kind());
}

}  // namespace

Rational Character::lambda(const Poly& f, long k) const {
  if (variant == Variant::Trivial) return Rational(0);
  return -pow_rational(xi, k) * f.derivative().eval(xi);
}

Rational Character::lambda_of(const WittElement& u) const {
  if (variant == Variant::Trivial) return Rational(0);
  return -laurent_eval(u.coeff().derivative(), xi);
}

ClassifyResult classify_characters(const Poly& f_in, AlgebraKind kind) {
  if (f_in.is_zero()) throw domain_error("classify_characters: zero conductor");
  Poly f = normalize_conductor(f_in, kind);
  FinCodimSubalgebra l = FinCodimSubalgebra::submodule(f, kind);
  Poly rad = squarefree_part(f);

  ClassifyResult out;

  // Trivial character: Ext^1 = H^1, one canonical extension per outer
  // derivation witness.
  ExtensionReport trivial;
  trivial.character = Character::trivial();
  trivial.ext_dim = f.degree() - rad.degree();
  if (trivial.ext_dim > 0)
    for (const WittElement& w : derivation_space(l).normalizer_basis)
      trivial.canonical_extensions.push_back(canonicalize_known(kind, f, {w}));
  out.reports.push_back(std::move(trivial));

  // Simple rational roots, ascending.
  std::map<Rational, long> roots = rational_roots(f);
  long rational_simple = 0;
  for (const auto& [root, mult] : roots) {
    if (mult != 1) continue;
    ++rational_simple;
    ExtensionReport report;
    report.character = Character::simple_root(root);
    report.ext_dim = 1;
    Poly linear = Poly::variable() - Poly(root);
    report.canonical_extensions.push_back(
        FinCodimSubalgebra::submodule(exact_div(f, linear), kind));
    out.reports.push_back(std::move(report));
  }

  // Simple roots over the closure: rad f / rad(gcd(f, f')).
  Poly repeated = gcd(f, f.derivative());
  Poly simple_part =
      repeated.degree() == 0 ? rad : exact_div(rad, squarefree_part(repeated));
  out.nonrational_simple_roots = simple_part.degree() - rational_simple;
  return out;
}

namespace {

// Decomposes [u, x] inside L + k x (x realised by the ambient element w).
std::pair<WittElement, Rational> act_on_x(const FinCodimSubalgebra& l,
                                          const WittElement& w_red,
                                          const WittElement& u,
                                          const WittElement& w) {
  WittElement br = bracket(u, w);
  WittElement r = l.reduce(br);
  Rational lambda(0);
  if (!r.is_zero()) {
    long top = w_red.coeff().top_exponent();
    lambda = r.coeff().coeff(top) / w_red.coeff().coeff(top);
    WittElement left = r - lambda * w_red;
    if (!left.is_zero())
      throw domain_error(
          "action is not a module: [u, x] leaves L + k x for u = generator");
  }
  return {br - lambda * w, lambda};
}

}  // namespace

ExtensionBracketTable extension_bracket(const FinCodimSubalgebra& l,
                                        const WittElement& ambient_x) {
  if (ambient_x.kind() != l.kind()) throw domain_error("algebra kind mismatch");
  WittElement w_red = l.reduce(ambient_x);
  if (w_red.is_zero())
    throw domain_error("x lies inside L; not a one-dimensional extension");

  ExtensionBracketTable table;
  std::vector<WittElement> gens = l.generators();
  for (const WittElement& u : gens) {
    auto [inside, lambda] = act_on_x(l, w_red, u, ambient_x);
    if (!l.contains(inside))
      throw internal_error("extension_bracket: L-component escaped L");
    table.action.push_back({u, inside, lambda});
  }

  // Jacobi on generator pairs with x: [[u,v],x] = [u,[v,x]] - [v,[u,x]].
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      WittElement z = bracket(gens[i], gens[j]);
      auto [bz, lz] = act_on_x(l, w_red, z, ambient_x);
      const WittElement& bi = table.action[i].inside;
      const WittElement& bj = table.action[j].inside;
      const Rational li = table.action[i].on_x;
      const Rational lj = table.action[j].on_x;
      WittElement rhs =
          bracket(gens[i], bj) - bracket(gens[j], bi) + lj * bi - li * bj;
      if (!(bz == rhs) || lz != 0)
        throw domain_error("action is not a module: Jacobi fails on a "
                           "generator pair");
    }
  table.jacobi_verified = true;
  return table;
}

ExtensionBracketTable extension_bracket(const FinCodimSubalgebra& l,
                                        const Character& chi) {
  ExtensionBracketTable table;
  std::vector<WittElement> gens = l.generators();
  for (const WittElement& u : gens)
    table.action.push_back({u, WittElement::zero(l.kind()), chi.lambda_of(u)});
  // Module validity: the character must kill brackets of generators.
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (chi.lambda_of(bracket(gens[i], gens[j])) != 0)
        throw domain_error(
            "action is not a module: character does not kill [u, v]");
  table.jacobi_verified = true;
  return table;
}

std::optional<WittElement> split_section(const FinCodimSubalgebra& l,
                                         const WittElement& w,
                                         const std::vector<Rational>& lambdas) {
  std::vector<WittElement> gens = l.generators();
  if (gens.size() != lambdas.size())
    throw domain_error("split_section: one character value per generator");

  // Degree pinning: a common eigenvector y of all ad_u, u in L, has its top
  // (and two-sided bottom) exponent forced by the minimal-degree generator,
  // so a small window is complete.
  long top_bound = l.conductor().degree() + 2;
  long bot_bound = l.kind() == AlgebraKind::OneSided ? 0 : -1;
  if (!w.is_zero()) {
    top_bound = std::max(top_bound, w.coeff().top_exponent() + 2);
    bot_bound = std::min(bot_bound, w.coeff().bottom_exponent());
  }
  if (l.kind() == AlgebraKind::OneSided) {
    long n0 = l.min_degree();
    top_bound = std::max(top_bound, n0 + 3);
    if (n0 <= 0) {
      // Leading-coefficient matching pins deg y = lambda0 / lc(u0) when the
      // minimal generator has degree 0.
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].degree() != n0) continue;
        Rational lc = gens[i].coeff().coeff(n0 + 1);
        Rational k = lambdas[i] / lc;
        if (denominator(k) == 1 && numerator(k) > 0 &&
            numerator(k) < 10000)
          top_bound = std::max(top_bound, numerator(k).convert_to<long>() + 2);
        break;
      }
    }
  }

  const long elo = bot_bound;
  const long ehi = top_bound + 1;
  const long yn = ehi - elo + 1;

  // Result coordinates for the bracket conditions.
  long rlo = elo, rhi = ehi;
  for (const WittElement& g : gens) {
    rlo = std::min(rlo, g.coeff().bottom_exponent() + elo - 1);
    rhi = std::max(rhi, g.coeff().top_exponent() + ehi - 1);
  }
  const long rn = rhi - rlo + 1;

  std::vector<long> qexp = l.quotient_exponents();
  const long qn = static_cast<long>(qexp.size());

  const Eigen::Index rows =
      static_cast<Eigen::Index>(gens.size()) * rn + qn;
  QMatrix a = QMatrix::Zero(rows, yn);
  QVector rhs = QVector::Zero(rows);

  for (long e = elo; e <= ehi; ++e) {
    WittElement basis_vec(LaurentPoly::monomial(e), l.kind());
    Eigen::Index col = e - elo;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      WittElement cond = bracket(gens[gi], basis_vec) - lambdas[gi] * basis_vec;
      for (const auto& [ce, cv] : cond.coeff().coeffs())
        a(static_cast<Eigen::Index>(gi) * rn + (ce - rlo), col) += cv;
    }
    WittElement red = l.reduce(basis_vec);
    for (long qi = 0; qi < qn; ++qi)
      a(static_cast<Eigen::Index>(gens.size()) * rn + qi, col) =
          red.coeff().coeff(qexp[static_cast<std::size_t>(qi)]);
  }
  WittElement wred = l.reduce(w);
  for (long qi = 0; qi < qn; ++qi)
    rhs(static_cast<Eigen::Index>(gens.size()) * rn + qi) =
        wred.coeff().coeff(qexp[static_cast<std::size_t>(qi)]);

  auto sol = solve_linear(a, rhs);
  if (!sol) return std::nullopt;
  LaurentPoly y;
  for (long e = elo; e <= ehi; ++e)
    if ((*sol)(e - elo) != 0) y.set_coeff(e, (*sol)(e - elo));
  WittElement section(y, l.kind());
  // Exact re-verification of the section.
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    if (!(bracket(gens[gi], section) == lambdas[gi] * section))
      throw internal_error("split_section: candidate failed re-verification");
  if (!l.contains(w - section))
    throw internal_error("split_section: section does not match w modulo L");
  return section;
}

EmbedResult embed_extension(const FinCodimSubalgebra& l, const Character& chi) {
  if (l.is_full())
    throw domain_error("the full algebra has no one-dimensional extensions");
  std::vector<WittElement> gens = l.generators();
  std::vector<Rational> lambdas;
  lambdas.reserve(gens.size());
  for (const WittElement& u : gens) lambdas.push_back(chi.lambda_of(u));

  std::vector<long> qexp = l.quotient_exponents();
  const Eigen::Index q = static_cast<Eigen::Index>(qexp.size());
  QMatrix stacked(q * static_cast<Eigen::Index>(gens.size()), q);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    QMatrix au = action_matrix(l, qexp, gens[gi]);
    for (Eigen::Index i = 0; i < q; ++i) au(i, i) -= lambdas[gi];
    stacked.block(static_cast<Eigen::Index>(gi) * q, 0, q, q) = au;
  }
  QMatrix kernel = kernel_basis(stacked);
  if (kernel.cols() == 0)
    throw domain_error(
        "split: section exists (no non-split extension carries this "
        "character)");

  WittElement witness = lift_quotient_vector(l, qexp, kernel.col(0));
  if (auto section = split_section(l, witness, lambdas))
    throw domain_error("split: section exists");

  EmbedResult out;
  out.witness = witness;
  out.unique_mod_l = kernel.cols() == 1;
  return out;
}

namespace {

struct EigenLine {
  QVector vec;
  std::vector<Rational> lambdas;
};

std::optional<QVector> coords_in(const RowEchelon& space, const QVector& v) {
  QVector c(space.mat.rows());
  for (Eigen::Index r = 0; r < space.mat.rows(); ++r)
    c(r) = v(space.pivots[static_cast<std::size_t>(r)]);
  QVector check = space.mat.transpose() * c;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (check(i) != v(i)) return std::nullopt;
  return c;
}

void collect_eigenlines(const std::vector<QMatrix>& actions, std::size_t gi,
                        const RowEchelon& space, std::vector<Rational> prefix,
                        std::vector<EigenLine>& out) {
  if (space.mat.rows() == 0) return;
  if (gi == actions.size()) {
    for (Eigen::Index r = 0; r < space.mat.rows(); ++r)
      out.push_back({space.mat.row(r).transpose(), prefix});
    return;
  }
  const QMatrix& b = actions[gi];

  // Largest b-invariant subspace of `space`; common eigenvectors survive.
  RowEchelon x = space;
  for (;;) {
    RowEchelon next = intersect(x, preimage(b, x));
    if (next.mat.rows() == x.mat.rows()) break;
    x = std::move(next);
  }
  if (x.mat.rows() == 0) return;

  // Restriction of b to the invariant subspace, in its echelon coordinates.
  const Eigen::Index k = x.mat.rows();
  QMatrix c(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    auto coords = coords_in(x, b * x.mat.row(r).transpose());
    if (!coords) throw internal_error("invariant subspace is not invariant");
    c.col(r) = *coords;
  }

  Poly charpoly;
  {
    auto coeffs = char_poly_coeffs(c);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) charpoly.set_coeff(static_cast<long>(i), coeffs[i]);
  }
  for (const auto& [mu, mult] : rational_roots(charpoly)) {
    QMatrix shifted = c;
    for (Eigen::Index i = 0; i < k; ++i) shifted(i, i) -= mu;
    QMatrix eig = kernel_basis(shifted);
    if (eig.cols() == 0) continue;
    QMatrix rows(eig.cols(), x.mat.cols());
    for (Eigen::Index col = 0; col < eig.cols(); ++col)
      rows.row(col) = (x.mat.transpose() * eig.col(col)).transpose();
    std::vector<Rational> next_prefix = prefix;
    next_prefix.push_back(mu);
    collect_eigenlines(actions, gi + 1, row_space(rows), std::move(next_prefix),
                       out);
  }
}

}  // namespace

ExtensionChain extension_chain(const FinCodimSubalgebra& l) {
  ExtensionChain chain;
  chain.base = l;
  FinCodimSubalgebra current = l;
  while (!current.is_full()) {
    std::vector<long> qexp = current.quotient_exponents();
    std::vector<WittElement> gens = current.generators();
    // Filtration-compatible processing order: lowest degree first.
    std::sort(gens.begin(), gens.end(),
              [](const WittElement& a, const WittElement& b) {
                return a.degree() < b.degree();
              });

    std::vector<QMatrix> actions;
    actions.reserve(gens.size());
    for (const WittElement& u : gens)
      actions.push_back(action_matrix(current, qexp, u));

    std::vector<EigenLine> lines;
    collect_eigenlines(actions, 0, row_space(QMatrix::Identity(
                                       static_cast<Eigen::Index>(qexp.size()),
                                       static_cast<Eigen::Index>(qexp.size()))),
                       {}, lines);
    if (lines.empty())
      throw domain_error(
          "anomaly: no rational one-dimensional submodule of the quotient; "
          "cannot build a rational chain step");

    // Canonical pick: the line reaching the highest exponent.
    auto top_exp = [&](const EigenLine& line) {
      long best = -1;
      for (std::size_t i = 0; i < qexp.size(); ++i)
        if (line.vec(static_cast<Eigen::Index>(i)) != 0) best = qexp[i];
      return best;
    };
    const EigenLine* pick = &lines.front();
    for (const EigenLine& line : lines)
      if (top_exp(line) > top_exp(*pick)) pick = &line;

    WittElement witness = lift_quotient_vector(current, qexp, pick->vec);
    if (split_section(current, witness, pick->lambdas))
      throw internal_error("extension_chain: step unexpectedly split");

    std::vector<WittElement> extras = current.coset_basis();
    extras.push_back(witness);
    FinCodimSubalgebra next =
        canonicalize_known(current.kind(), current.conductor(), extras);
    if (next.codim() != current.codim() - 1)
      throw internal_error("extension_chain: step did not drop codimension by 1");

    ChainStep step;
    step.algebra = next;
    step.witness = witness;
    step.action = pick->lambdas;
    step.nonsplit_certified = true;
    chain.steps.push_back(step);
    current = next;
  }
  return chain;
}

}  // namespace witt
