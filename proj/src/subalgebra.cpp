#include "witt/subalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "witt/errors.hpp"
#include "witt/parse.hpp"

namespace witt {

namespace {

// ---- coefficient <-> vector helpers over exponent coordinates [0, n) ----

QVector vec_of_poly(const Poly& p, long n) {
  QVector v = QVector::Zero(n);
  for (const auto& [e, c] : p.coeffs()) {
    if (e >= n) throw internal_error("vec_of_poly: exponent out of range");
    v(e) = c;
  }
  return v;
}

Poly poly_of_vec(const QVector& v) {
  Poly p;
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    if (v(i) != 0) p.set_coeff(i, v(i));
  return p;
}

// Multiplication by t on k[t]/(f), f monic of degree n.
QMatrix companion(const Poly& f) {
  long n = f.degree();
  QMatrix m = QMatrix::Zero(n, n);
  for (long j = 0; j + 1 < n; ++j) m(j + 1, j) = Rational(1);
  for (long i = 0; i < n; ++i) m(i, n - 1) = -f.coeff(i);
  return m;
}

// Inverse of t modulo f; requires f(0) != 0.
Poly t_inverse_mod(const Poly& f) {
  Rational a0 = f.coeff(0);
  if (a0 == 0) throw internal_error("t not invertible modulo f");
  Poly shifted;  // (f - a0) / t
  for (const auto& [e, c] : f.coeffs())
    if (e > 0) shifted.set_coeff(e - 1, c);
  return shifted * (Rational(-1) / a0);
}

// Canonical reduced echelon basis of coset representatives: pivot on the
// highest exponent, pivot coefficient 1, sorted by ascending pivot degree.
std::vector<Poly> coset_echelon(const std::vector<Poly>& reps, long n) {
  std::vector<Poly> rows;
  for (const Poly& raw : reps) {
    Poly r = raw;
    for (const Poly& row : rows) {
      Rational c = r.coeff(row.degree());
      if (c != 0) r -= c * row;
    }
    if (r.is_zero()) continue;
    if (r.degree() >= n) throw internal_error("coset representative too large");
    r = r.monic();
    for (Poly& row : rows) {
      Rational c = row.coeff(r.degree());
      if (c != 0) row -= c * r;
    }
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(),
            [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  return rows;
}

// Incremental reduced echelon over exponent coordinates, used by the
// generator-closure sweep. Pivot = lowest nonzero coordinate.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(long dim) : dim_(dim) {}

  QVector residual(QVector v) const {
    for (const auto& [pivot, row] : rows_) {
      if (v(pivot) == 0) continue;
      Rational c = v(pivot);
      for (long i = pivot; i < dim_; ++i) v(i) -= c * row(i);
    }
    return v;
  }

  // Returns true when v added a new direction.
  bool insert(const QVector& v) {
    QVector r = residual(v);
    long pivot = -1;
    for (long i = 0; i < dim_; ++i)
      if (r(i) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    Rational inv = Rational(1) / r(pivot);
    for (long i = pivot; i < dim_; ++i) r(i) *= inv;
    for (auto& [p, row] : rows_) {
      Rational c = row(pivot);
      if (c == 0) continue;
      for (long i = pivot; i < dim_; ++i) row(i) -= c * r(i);
    }
    rows_.emplace_back(pivot, std::move(r));
    return true;
  }

  bool contains(const QVector& v) const {
    QVector r = residual(v);
    for (long i = 0; i < dim_; ++i)
      if (r(i) != 0) return false;
    return true;
  }

  std::vector<long> nonpivot_coords() const {
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim_), false);
    for (const auto& [p, row] : rows_) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<long> out;
    for (long i = 0; i < dim_; ++i)
      if (!is_pivot[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
  }

  const std::vector<std::pair<long, QVector>>& rows() const { return rows_; }
  long rank() const { return static_cast<long>(rows_.size()); }

 private:
  long dim_;
  std::vector<std::pair<long, QVector>> rows_;
};

std::vector<long> seed_exponents(long conductor_degree, AlgebraKind kind) {
  long k0 = std::max(conductor_degree - 1, 3L);
  std::vector<long> ks;
  long lo = kind == AlgebraKind::OneSided ? 0 : -k0;
  for (long k = lo; k <= k0; ++k) ks.push_back(k);
  return ks;
}

WittElement module_generator(const Poly& f, long k, AlgebraKind kind) {
  return WittElement(LaurentPoly(f) * LaurentPoly::monomial(k), kind);
}

}  // namespace

Poly reduce_mod_conductor(const LaurentPoly& c, const Poly& f, AlgebraKind kind) {
  long n = f.degree();
  if (n <= 0) return Poly();
  if (c.is_zero()) return Poly();
  if (kind == AlgebraKind::OneSided || c.is_polynomial())
    return divmod(c.to_poly(), f).remainder;
  auto [shift, p] = c.split_unit();  // shift < 0 here
  Poly r = divmod(p, f).remainder;
  Poly u = t_inverse_mod(f);
  for (long i = 0; i < -shift; ++i) r = divmod(r * u, f).remainder;
  return r;
}

namespace {

// Exact division of a Laurent coefficient by the (normalised) conductor.
LaurentPoly laurent_exact_div(const LaurentPoly& num, const Poly& f,
                              AlgebraKind kind) {
  if (num.is_zero()) return LaurentPoly();
  if (kind == AlgebraKind::OneSided) return LaurentPoly(exact_div(num.to_poly(), f));
  auto [shift, p] = num.split_unit();
  Poly q = exact_div(p, f);
  return LaurentPoly(q) * LaurentPoly::monomial(shift);
}

}  // namespace

FinCodimSubalgebra::FinCodimSubalgebra()
    : kind_(AlgebraKind::OneSided), conductor_(Rational(1)) {
  cert_ = {true, true, true};
}

FinCodimSubalgebra FinCodimSubalgebra::submodule(const Poly& f, AlgebraKind kind) {
  FinCodimSubalgebra l;
  l.kind_ = kind;
  l.conductor_ = normalize_conductor(f, kind);
  l.cert_ = {true, true, true};
  return l;
}

FinCodimSubalgebra FinCodimSubalgebra::full(AlgebraKind kind) {
  return submodule(Poly(Rational(1)), kind);
}

std::optional<Decomposition> FinCodimSubalgebra::decompose(const WittElement& w) const {
  if (w.kind() != kind_) throw domain_error("algebra kind mismatch");
  Decomposition out;
  out.coset_coords.assign(coset_.size(), Rational(0));
  if (w.is_zero()) {
    out.quotient = LaurentPoly();
    return out;
  }
  Poly r = reduce_mod_conductor(w.coeff(), conductor_, kind_);
  LaurentPoly used;
  for (std::size_t i = 0; i < coset_.size(); ++i) {
    const Poly rep = coset_[i].coeff().to_poly();
    Rational a = r.coeff(rep.degree());
    if (a != 0) {
      r -= a * rep;
      used += LaurentPoly(rep) * a;
      out.coset_coords[i] = a;
    }
  }
  if (!r.is_zero()) return std::nullopt;
  out.quotient = laurent_exact_div(w.coeff() - used, conductor_, kind_);
  return out;
}

bool FinCodimSubalgebra::contains(const WittElement& w) const {
  return decompose(w).has_value();
}

WittElement FinCodimSubalgebra::reduce(const WittElement& w) const {
  if (w.kind() != kind_) throw domain_error("algebra kind mismatch");
  if (w.is_zero()) return w;
  Poly r = reduce_mod_conductor(w.coeff(), conductor_, kind_);
  for (const WittElement& rep : coset_) {
    const Poly rp = rep.coeff().to_poly();
    Rational a = r.coeff(rp.degree());
    if (a != 0) r -= a * rp;
  }
  return WittElement(LaurentPoly(r), kind_);
}

std::vector<long> FinCodimSubalgebra::quotient_exponents() const {
  std::set<long> pivots;
  for (const WittElement& rep : coset_) pivots.insert(rep.coeff().top_exponent());
  std::vector<long> out;
  for (long e = 0; e < conductor_.degree(); ++e)
    if (!pivots.count(e)) out.push_back(e);
  return out;
}

std::vector<WittElement> FinCodimSubalgebra::generators() const {
  std::vector<WittElement> gens;
  for (long k : seed_exponents(conductor_.degree(), kind_))
    gens.push_back(module_generator(conductor_, k, kind_));
  for (const WittElement& rep : coset_) gens.push_back(rep);
  return gens;
}

long FinCodimSubalgebra::min_degree() const {
  if (kind_ != AlgebraKind::OneSided)
    throw domain_error("min_degree is a one-sided notion");
  if (!coset_.empty()) return coset_.front().degree();
  return conductor_.degree() - 1;
}

DegreeSet FinCodimSubalgebra::degree_set() const {
  if (kind_ != AlgebraKind::OneSided)
    throw domain_error("degree_set is a one-sided notion");
  DegreeSet out;
  out.threshold = conductor_.degree() - 1;
  for (const WittElement& rep : coset_) out.sporadic.push_back(rep.degree());
  std::sort(out.sporadic.begin(), out.sporadic.end());
  while (!out.sporadic.empty() && out.sporadic.back() == out.threshold - 1) {
    out.threshold -= 1;
    out.sporadic.pop_back();
  }
  return out;
}

FinCodimSubalgebra canonicalize_known(AlgebraKind kind, const Poly& known_multiple,
                                      const std::vector<WittElement>& extras) {
  Poly g0 = normalize_conductor(known_multiple, kind);
  long n = g0.degree();
  if (n == 0) return FinCodimSubalgebra::full(kind);

  // Coset span V of the input modulo W(g0).
  QMatrix rows(static_cast<Eigen::Index>(extras.size()), n);
  for (std::size_t i = 0; i < extras.size(); ++i)
    rows.row(static_cast<Eigen::Index>(i)) =
        vec_of_poly(reduce_mod_conductor(extras[i].coeff(), g0, kind), n).transpose();
  RowEchelon v = row_space(rows);

  // Conductor ideal: the largest t-invariant subspace of k[t]/(g0) inside V,
  // together with g0, generates {p : p W ⊆ L}; its gcd is the conductor.
  QMatrix m = companion(g0);
  RowEchelon x = v;
  for (;;) {
    RowEchelon next = intersect(x, preimage(m, x));
    if (next.mat.rows() == x.mat.rows()) break;
    x = std::move(next);
  }
  Poly f = g0;
  for (Eigen::Index r = 0; r < x.mat.rows(); ++r)
    f = gcd(f, poly_of_vec(x.mat.row(r).transpose()));
  f = normalize_conductor(f, kind);
  long d = f.degree();
  if (d == 0) return FinCodimSubalgebra::full(kind);

  // Coset basis of L / W(f): the extras plus enough of W(g0) mod W(f).
  std::vector<Poly> reps;
  for (const WittElement& e : extras)
    reps.push_back(reduce_mod_conductor(e.coeff(), f, kind));
  long klo = kind == AlgebraKind::OneSided ? 0 : -d;
  for (long k = klo; k <= d; ++k)
    reps.push_back(
        reduce_mod_conductor(LaurentPoly(g0) * LaurentPoly::monomial(k), f, kind));

  FinCodimSubalgebra l;
  l.kind_ = kind;
  l.conductor_ = f;
  for (Poly& rep : coset_echelon(reps, d))
    l.coset_.emplace_back(LaurentPoly(rep), kind);

  l.cert_.conductor = true;
  Poly rad = squarefree_part(f);
  l.cert_.sandwich = true;
  for (const WittElement& rep : l.coset_)
    if (!submodule_membership(rep, rad)) l.cert_.sandwich = false;
  l.cert_.closure = true;
  if (l.cert_.sandwich) {
    for (std::size_t i = 0; i < l.coset_.size() && l.cert_.closure; ++i)
      for (std::size_t j = i + 1; j < l.coset_.size(); ++j)
        if (!l.contains(bracket(l.coset_[i], l.coset_[j]))) {
          l.cert_.closure = false;
          break;
        }
  } else {
    l.cert_.closure = false;
  }
  return l;
}

namespace {

void require_certified(const FinCodimSubalgebra& l, const char* context) {
  const SubalgebraCertificate& c = l.certificate();
  if (!c.sandwich || !c.closure || !c.conductor)
    throw internal_error(std::string("certificate failure in ") + context);
}

}  // namespace

GradedWindow default_window(const std::vector<WittElement>& gens) {
  long span = 1;
  AlgebraKind kind = AlgebraKind::OneSided;
  for (const WittElement& g : gens) {
    kind = g.kind();
    if (g.is_zero()) continue;
    span = std::max({span, std::abs(g.coeff().top_exponent()),
                     std::abs(g.coeff().bottom_exponent())});
  }
  long hi = 2 * span + 12;
  return {kind == AlgebraKind::OneSided ? -1 : -hi, hi};
}

FinCodimSubalgebra from_generators(const std::vector<WittElement>& gens,
                                   std::optional<GradedWindow> window) {
  if (gens.empty()) throw domain_error("from_generators: no generators");
  AlgebraKind kind = gens.front().kind();
  std::vector<WittElement> live;
  for (const WittElement& g : gens) {
    if (g.kind() != kind) throw domain_error("from_generators: mixed algebra kinds");
    if (!g.is_zero()) live.push_back(g);
  }
  if (live.empty()) throw domain_error("from_generators: all generators are zero");

  GradedWindow w = window ? *window : default_window(live);
  const long elo = kind == AlgebraKind::OneSided ? 0 : w.lo + 1;
  const long ehi = w.hi + 1;
  if (ehi - elo < 8)
    throw window_error("from_generators: window too small", w.lo - 8, w.hi + 8);
  const long dim = ehi - elo + 1;
  auto index_of = [elo](long e) { return e - elo; };

  auto in_range = [&](const LaurentPoly& p) {
    return p.is_zero() ||
           (p.bottom_exponent() >= elo && p.top_exponent() <= ehi);
  };
  auto vec_of = [&](const LaurentPoly& p) {
    QVector v = QVector::Zero(dim);
    for (const auto& [e, c] : p.coeffs()) v(index_of(e)) = c;
    return v;
  };

  for (const WittElement& g : live)
    if (!in_range(g.coeff()))
      throw window_error("from_generators: generator outside window",
                         std::min(w.lo, g.coeff().bottom_exponent() - 1) - 4,
                         std::max(w.hi, g.coeff().top_exponent() - 1) + 4);

  // Bracket closure inside the window. Discarded out-of-range brackets only
  // affect completeness; the certificates below establish exactness.
  EchelonBuilder span(dim);
  std::vector<LaurentPoly> elems;
  auto push = [&](const LaurentPoly& p) {
    if (span.insert(vec_of(p))) elems.push_back(p);
  };
  for (const WittElement& g : live) push(g.coeff());
  for (std::size_t j = 1; j < elems.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const LaurentPoly& a = elems[i];
      const LaurentPoly& b = elems[j];
      // Quick reject: with distinct degrees the bracket's top exponent is
      // exactly top(a)+top(b)-1.
      if (a.top_exponent() != b.top_exponent() &&
          a.top_exponent() + b.top_exponent() - 1 > ehi)
        continue;
      LaurentPoly br = a * b.derivative() - a.derivative() * b;
      if (br.is_zero()) continue;
      if (!in_range(br)) continue;
      push(br);
    }
  }

  // Degree triage (one-sided): a finite-codimension algebra fills every top
  // exponent near the window roof; an arithmetic-progression pattern instead
  // signals a k[f]-shaped algebra of infinite codimension.
  if (kind == AlgebraKind::OneSided) {
    std::set<long> tops;
    {
      std::vector<Poly> polys;
      polys.reserve(elems.size());
      for (const LaurentPoly& p : elems) polys.push_back(p.to_poly());
      // leading-exponent echelon just for the achieved-top analysis
      for (const Poly& p : coset_echelon(polys, ehi + 1)) tops.insert(p.degree());
    }
    bool roof_filled = true;
    for (long e = ehi - 5; e <= ehi; ++e)
      if (!tops.count(e)) roof_filled = false;
    if (!roof_filled) {
      std::vector<long> upper(tops.begin(), tops.end());
      long g = 0;
      for (std::size_t i = 1; i < upper.size(); ++i)
        if (upper[i] > ehi / 2)
          g = std::gcd(g, upper[i] - upper[i - 1]);
      if (g >= 2)
        throw domain_error(
            "generated subalgebra looks like it has infinite codimension "
            "(degree set follows an arithmetic progression); try the L(f,g) "
            "tools instead");
      throw window_error("from_generators: degree set did not stabilise",
                         w.lo, 2 * w.hi);
    }
  }

  // Conductor candidate: least-degree monic p with p t^k d inside the span
  // for every k the window can see, then a window-free seed certificate.
  std::vector<long> nonpivot = span.nonpivot_coords();
  auto residual_coords = [&](const LaurentPoly& p) {
    QVector r = span.residual(vec_of(p));
    QVector out = QVector::Zero(static_cast<Eigen::Index>(nonpivot.size()));
    for (std::size_t i = 0; i < nonpivot.size(); ++i)
      out(static_cast<Eigen::Index>(i)) = r(nonpivot[i]);
    return out;
  };

  std::optional<Poly> conductor;
  for (long d = 1; d <= (ehi - elo) / 2 && !conductor; ++d) {
    std::vector<long> ks;
    for (long k = elo; k + d <= ehi; ++k) ks.push_back(k);
    if (static_cast<long>(ks.size()) < d + 4) break;
    const Eigen::Index rows_per_k = static_cast<Eigen::Index>(nonpivot.size());
    QMatrix a(rows_per_k * static_cast<Eigen::Index>(ks.size()), d);
    QVector rhs(rows_per_k * static_cast<Eigen::Index>(ks.size()));
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
      for (long i = 0; i < d; ++i)
        a.block(rows_per_k * static_cast<Eigen::Index>(ki), i, rows_per_k, 1) =
            residual_coords(LaurentPoly::monomial(ks[ki] + i));
      rhs.segment(rows_per_k * static_cast<Eigen::Index>(ki), rows_per_k) =
          -residual_coords(LaurentPoly::monomial(ks[ki] + d));
    }
    auto sol = solve_linear(a, rhs);
    if (!sol) continue;
    Poly candidate = Poly::monomial(d);
    for (long i = 0; i < d; ++i)
      if ((*sol)(i) != 0) candidate.set_coeff(i, (*sol)(i));
    candidate = normalize_conductor(candidate, kind);

    // Seed certificate: candidate * t^k lies in the computed span for the
    // whole bootstrap range, which generates W(candidate) as a Lie algebra.
    bool seeded = true;
    for (long k : seed_exponents(candidate.degree(), kind)) {
      LaurentPoly gen = LaurentPoly(candidate) * LaurentPoly::monomial(k);
      if (!in_range(gen)) {
        seeded = false;
        break;
      }
      if (!span.contains(vec_of(gen))) {
        seeded = false;
        break;
      }
    }
    if (seeded) conductor = candidate;
  }
  if (!conductor)
    throw window_error("from_generators: no certified conductor in window",
                       kind == AlgebraKind::OneSided ? -1 : 2 * w.lo, 2 * w.hi);

  std::vector<WittElement> extras;
  extras.reserve(elems.size());
  for (const LaurentPoly& p : elems) extras.emplace_back(p, kind);
  FinCodimSubalgebra l = canonicalize_known(kind, *conductor, extras);
  if (!l.certificate().sandwich || !l.certificate().closure)
    throw window_error("from_generators: closure did not stabilise in window",
                       kind == AlgebraKind::OneSided ? -1 : 2 * w.lo, 2 * w.hi);
  for (const WittElement& g : live)
    if (!l.contains(g))
      throw internal_error("from_generators: generator escaped canonical form");
  return l;
}

Poly minimal_conductor(const FinCodimSubalgebra& l) { return l.conductor(); }

MembershipResult membership(const FinCodimSubalgebra& l, const WittElement& w) {
  MembershipResult out;
  auto d = l.decompose(w);
  out.member = d.has_value();
  out.decomposition = std::move(d);
  return out;
}

namespace {

// Canonical form of the linear span of [a, b], without requiring the span to
// be a subalgebra. Public callers add the closure requirement.
FinCodimSubalgebra bracket_span(const FinCodimSubalgebra& a,
                                const FinCodimSubalgebra& b);

}  // namespace

FinCodimSubalgebra bracket_subalgebra(const FinCodimSubalgebra& a,
                                      const FinCodimSubalgebra& b) {
  FinCodimSubalgebra out = bracket_span(a, b);
  require_certified(out, "bracket_subalgebra");
  return out;
}

namespace {

FinCodimSubalgebra bracket_span(const FinCodimSubalgebra& a,
                                const FinCodimSubalgebra& b) {
  if (a.kind() != b.kind()) throw domain_error("algebra kind mismatch");
  const AlgebraKind kind = a.kind();
  const Poly& f1 = a.conductor();
  const Poly& f2 = b.conductor();
  // [W(f1), W(f2)] = W(gcd(f1 f2, f1 f2' - f1' f2)) exactly: the span of the
  // bracket coefficients is the ideal sum (f1 f2) + (f1 f2' - f1' f2).
  Poly m0 = gcd(f1 * f2, f1 * f2.derivative() - f1.derivative() * f2);
  m0 = normalize_conductor(m0, kind);
  if (m0.degree() == 0) return FinCodimSubalgebra::full(kind);

  std::vector<WittElement> extras;
  // Sequences [c, f t^k d] stabilise after 2 deg(m0) steps: their residues
  // mod m0 are linear images of a Krylov chain in a 2 deg(m0)-dimensional
  // joint space.
  const long kmax = 2 * m0.degree() + 2;
  const long kmin = kind == AlgebraKind::OneSided ? 0 : -kmax;
  for (const WittElement& c : a.coset_basis())
    for (long k = kmin; k <= kmax; ++k)
      extras.push_back(bracket(c, module_generator(f2, k, kind)));
  for (const WittElement& d : b.coset_basis())
    for (long k = kmin; k <= kmax; ++k)
      extras.push_back(bracket(module_generator(f1, k, kind), d));
  for (const WittElement& c : a.coset_basis())
    for (const WittElement& d : b.coset_basis()) extras.push_back(bracket(c, d));

  return canonicalize_known(kind, m0, extras);
}

}  // namespace

FinCodimSubalgebra derived_series_term(const FinCodimSubalgebra& l, unsigned n,
                                       std::optional<GradedWindow>) {
  FinCodimSubalgebra d = l;
  for (unsigned i = 0; i < n; ++i) d = bracket_subalgebra(d, d);
  return d;
}

FinCodimSubalgebra lower_central_term(const FinCodimSubalgebra& l, unsigned n,
                                      std::optional<GradedWindow>) {
  FinCodimSubalgebra b = l;
  for (unsigned i = 0; i < n; ++i) b = bracket_subalgebra(l, b);
  return b;
}

FinCodimSubalgebra normalizer(const FinCodimSubalgebra& l) {
  const AlgebraKind kind = l.kind();
  const Poly& f = l.conductor();
  if (l.is_full()) return l;
  Poly rad = squarefree_part(f);
  long m = f.degree() - rad.degree();
  if (m == 0) return l;  // f reduced: L = W(f) = W(rad f) is self-normalising

  // Spanning representatives of W(rad f) / W(f).
  std::vector<Poly> rep_polys;
  long klo = kind == AlgebraKind::OneSided ? 0 : -f.degree();
  for (long k = klo; k <= f.degree(); ++k)
    rep_polys.push_back(
        reduce_mod_conductor(LaurentPoly(rad) * LaurentPoly::monomial(k), f, kind));
  std::vector<Poly> basis = coset_echelon(rep_polys, f.degree());
  if (static_cast<long>(basis.size()) != m)
    throw internal_error("normalizer: quotient dimension mismatch");

  std::vector<WittElement> witnesses;
  if (l.coset_basis().empty()) {
    for (const Poly& b : basis) witnesses.emplace_back(LaurentPoly(b), kind);
  } else {
    // Solve [w, c_i] in L over the quotient coordinates; brackets with W(f)
    // are already inside because W(f) is an ideal of W(rad f).
    const auto& cosets = l.coset_basis();
    std::vector<long> quotient = l.quotient_exponents();
    const Eigen::Index rows_per_c = static_cast<Eigen::Index>(quotient.size());
    QMatrix a(rows_per_c * static_cast<Eigen::Index>(cosets.size()),
              static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      WittElement bj(LaurentPoly(basis[j]), kind);
      for (std::size_t i = 0; i < cosets.size(); ++i) {
        WittElement res = l.reduce(bracket(bj, cosets[i]));
        for (Eigen::Index q = 0; q < rows_per_c; ++q)
          a(rows_per_c * static_cast<Eigen::Index>(i) + q,
            static_cast<Eigen::Index>(j)) =
              res.coeff().coeff(quotient[static_cast<std::size_t>(q)]);
      }
    }
    QMatrix ker = kernel_basis(a);
    for (Eigen::Index col = 0; col < ker.cols(); ++col) {
      Poly w;
      for (std::size_t j = 0; j < basis.size(); ++j)
        w += basis[j] * ker(static_cast<Eigen::Index>(j), col);
      witnesses.emplace_back(LaurentPoly(w), kind);
    }
  }

  FinCodimSubalgebra n = canonicalize_known(kind, f, witnesses);
  require_certified(n, "normalizer");
  if (!subalgebra_contains(n, l))
    throw internal_error("normalizer does not contain the algebra");
  return n;
}

long abelianisation_dim(const FinCodimSubalgebra& l, std::optional<GradedWindow>) {
  FinCodimSubalgebra derived = bracket_subalgebra(l, l);
  return derived.codim() - l.codim();
}

SubmoduleCheck is_submodule_check(const FinCodimSubalgebra& l,
                                  std::optional<GradedWindow> window) {
  SubmoduleCheck out{true, false};
  const LaurentPoly t = LaurentPoly::monomial(1);
  for (const WittElement& c : l.coset_basis()) {
    if (!l.contains(WittElement(t * c.coeff(), l.kind()))) out.direct = false;
    if (l.kind() == AlgebraKind::TwoSided &&
        !l.contains(WittElement(LaurentPoly::monomial(-1) * c.coeff(), l.kind())))
      out.direct = false;
  }
  out.criterion = abelianisation_dim(l, window) == l.codim();
  return out;
}

long solvable_quotient_depth(const FinCodimSubalgebra& l,
                             const FinCodimSubalgebra& i,
                             std::optional<GradedWindow>) {
  if (!subalgebra_contains(l, i))
    throw domain_error("solvable_quotient_depth: I is not contained in L");
  FinCodimSubalgebra lie_bracket = bracket_span(l, i);
  if (!subalgebra_contains(i, lie_bracket))
    throw domain_error("solvable_quotient_depth: I is not an ideal of L");

  // Proof bound: D^m(L) ⊆ W(rad(f)^{2^m}) and g | rad(f)^n forces m <= ceil(log2 n).
  Poly rad = squarefree_part(l.conductor());
  long n = -1;
  Poly power(Rational(1));
  for (long e = 1; e <= i.conductor().degree() + 1; ++e) {
    power *= rad;
    if (divides(i.conductor(), power)) {
      n = e;
      break;
    }
  }
  if (n < 0)
    throw domain_error("solvable_quotient_depth: rad mismatch between L and I");
  long bound = 1;
  long m_cap = 0;
  while (bound < n) {
    bound *= 2;
    ++m_cap;
  }

  FinCodimSubalgebra d = l;
  long m = 0;
  while (!subalgebra_contains(i, d)) {
    d = bracket_subalgebra(d, d);
    ++m;
    if (m > m_cap + 1)
      throw internal_error("solvable_quotient_depth exceeded its proof bound");
  }
  return m;
}

bool subalgebra_contains(const FinCodimSubalgebra& outer,
                         const FinCodimSubalgebra& inner) {
  if (outer.kind() != inner.kind()) throw domain_error("algebra kind mismatch");
  if (!divides(outer.conductor(), inner.conductor())) return false;
  for (const WittElement& c : inner.coset_basis())
    if (!outer.contains(c)) return false;
  return true;
}

FinCodimSubalgebra parse_subalgebra(const std::string& text, AlgebraKind kind) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);

  auto parse_w = [&](const std::string& part) {
    if (part.size() < 4 || part.substr(0, 2) != "W(" || part.back() != ')')
      throw parse_error("expected W(<poly>)", 0);
    return parse_poly(part.substr(2, part.size() - 3));
  };

  if (s.rfind("span{", 0) == 0) {
    auto close = s.find('}');
    if (close == std::string::npos) throw parse_error("missing '}'", s.size());
    std::string inner = s.substr(5, close - 5);
    if (close + 1 >= s.size() || s[close + 1] != '+')
      throw parse_error("expected '+ W(f)' after span{...}", close);
    Poly f = parse_w(s.substr(close + 2));

    std::vector<WittElement> gens;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t p = 0; p <= inner.size(); ++p) {
      if (p == inner.size() || (inner[p] == ',' && depth == 0)) {
        if (p > start) gens.push_back(parse_witt(inner.substr(start, p - start), kind));
        start = p + 1;
      } else if (inner[p] == '(' || inner[p] == '{') {
        ++depth;
      } else if (inner[p] == ')' || inner[p] == '}') {
        --depth;
      }
    }
    for (long k : seed_exponents(f.degree(), kind))
      gens.push_back(module_generator(normalize_conductor(f, kind), k, kind));
    return from_generators(gens);
  }
  return FinCodimSubalgebra::submodule(parse_w(s), kind);
}

std::string format_subalgebra(const FinCodimSubalgebra& l) {
  std::ostringstream out;
  if (!l.coset_basis().empty()) {
    out << "span{";
    bool first = true;
    for (const WittElement& c : l.coset_basis()) {
      if (!first) out << ", ";
      out << format_witt(c);
      first = false;
    }
    out << "} + ";
  }
  out << "W(" << format_poly(l.conductor()) << ")";
  return out.str();
}

}  // namespace witt
