#include "witt/linalg.hpp"

#include "witt/errors.hpp"

namespace witt {

namespace {

// Pivot row in column `col` among rows >= row, by smallest operand size.
Eigen::Index pick_pivot(const QMatrix& m, Eigen::Index row, Eigen::Index col) {
  Eigen::Index best = -1;
  std::size_t best_size = 0;
  for (Eigen::Index r = row; r < m.rows(); ++r) {
    if (m(r, col) == 0) continue;
    std::size_t size = rational_bit_size(m(r, col));
    if (best < 0 || size < best_size) {
      best = r;
      best_size = size;
    }
  }
  return best;
}

}  // namespace

RowEchelon reduced_row_echelon(QMatrix m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = pick_pivot(m, row, col);
    if (p < 0) continue;
    m.row(row).swap(m.row(p));
    Rational inv = Rational(1) / m(row, col);
    for (Eigen::Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  RowEchelon result;
  result.mat = m.topRows(row);
  result.pivots = std::move(pivots);
  return result;
}

Eigen::Index rank(const QMatrix& m) {
  return reduced_row_echelon(m).mat.rows();
}

QMatrix kernel_basis(const QMatrix& m) {
  RowEchelon re = reduced_row_echelon(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Eigen::Index p : re.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  QMatrix basis = QMatrix::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    Eigen::Index fc = free_cols[j];
    basis(fc, static_cast<Eigen::Index>(j)) = Rational(1);
    for (Eigen::Index r = 0; r < re.mat.rows(); ++r)
      basis(re.pivots[static_cast<std::size_t>(r)],
            static_cast<Eigen::Index>(j)) = -re.mat(r, fc);
  }
  return basis;
}

std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.rows()) throw domain_error("solve_linear: shape mismatch");
  QMatrix augmented(a.rows(), a.cols() + 1);
  augmented.leftCols(a.cols()) = a;
  augmented.col(a.cols()) = b;
  RowEchelon re = reduced_row_echelon(std::move(augmented));
  QVector x = QVector::Zero(a.cols());
  for (Eigen::Index r = 0; r < re.mat.rows(); ++r) {
    if (re.pivots[static_cast<std::size_t>(r)] == a.cols())
      return std::nullopt;  // row (0 ... 0 | 1): inconsistent
    x(re.pivots[static_cast<std::size_t>(r)]) = re.mat(r, a.cols());
  }
  return x;
}

std::vector<Rational> char_poly_coeffs(const QMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("char_poly: square matrix required");
  const Eigen::Index n = m.rows();
  // Faddeev-LeVerrier: M_1 = m, c_{n-k} = -tr(M_k)/k, M_{k+1} = m (M_k + c I).
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(n)] = Rational(1);
  QMatrix mk = m;
  for (Eigen::Index k = 1; k <= n; ++k) {
    Rational c = -mk.trace() / Rational(k);
    coeffs[static_cast<std::size_t>(n - k)] = c;
    if (k < n) {
      QMatrix shifted = mk;
      for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) += c;
      mk = m * shifted;
    }
  }
  return coeffs;
}

RowEchelon row_space(const QMatrix& rows) { return reduced_row_echelon(rows); }

QVector reduce_against(const RowEchelon& space, QVector v) {
  for (Eigen::Index r = 0; r < space.mat.rows(); ++r) {
    Eigen::Index p = space.pivots[static_cast<std::size_t>(r)];
    if (v(p) == 0) continue;
    Rational factor = v(p);
    for (Eigen::Index c = 0; c < v.rows(); ++c) v(c) -= factor * space.mat(r, c);
  }
  return v;
}

bool in_row_space(const RowEchelon& space, const QVector& v) {
  QVector r = reduce_against(space, v);
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    if (r(i) != 0) return false;
  return true;
}

RowEchelon intersect(const RowEchelon& a, const RowEchelon& b) {
  if (a.mat.rows() == 0) return a;
  if (b.mat.rows() == 0) return b;
  if (a.mat.cols() != b.mat.cols())
    throw domain_error("intersect: dimension mismatch");
  // x = a^T u = b^T v; kernel of [a^T | -b^T] yields the common vectors.
  QMatrix stacked(a.mat.cols(), a.mat.rows() + b.mat.rows());
  stacked.leftCols(a.mat.rows()) = a.mat.transpose();
  stacked.rightCols(b.mat.rows()) = -b.mat.transpose();
  QMatrix ker = kernel_basis(stacked);
  QMatrix rows(ker.cols(), a.mat.cols());
  for (Eigen::Index j = 0; j < ker.cols(); ++j)
    rows.row(j) = (a.mat.transpose() * ker.col(j).topRows(a.mat.rows())).transpose();
  return reduced_row_echelon(std::move(rows));
}

RowEchelon preimage(const QMatrix& m, const RowEchelon& space) {
  if (m.rows() != space.mat.cols())
    throw domain_error("preimage: dimension mismatch");
  // Residual-of-reduction is linear in v; its kernel is the preimage.
  QMatrix residuals(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    residuals.col(j) = reduce_against(space, m.col(j));
  QMatrix ker = kernel_basis(residuals);
  return reduced_row_echelon(ker.transpose());
}

}  // namespace witt
