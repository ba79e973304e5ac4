#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct RowEchelon {
  QMatrix mat;                       ///< reduced row echelon form, zero rows dropped
  std::vector<Eigen::Index> pivots;  ///< pivot column of each row, strictly increasing
};

/// Exact Gauss-Jordan elimination. Pivots are chosen among the candidates of
/// each column by smallest operand size; this affects cost only, never values.
RowEchelon reduced_row_echelon(QMatrix m);

Eigen::Index rank(const QMatrix& m);

/// Exact kernel basis, returned as the columns of a matrix in reduced
/// column-echelon form. Column count equals cols - rank.
QMatrix kernel_basis(const QMatrix& m);

/// One exact solution of a x = b, if the system is consistent.
std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b);

/// Coefficients of det(t I - m), ascending in t (Faddeev-LeVerrier).
std::vector<Rational> char_poly_coeffs(const QMatrix& m);

/// Row space utilities, all exact. A subspace is represented by a RowEchelon
/// of spanning rows.
RowEchelon row_space(const QMatrix& rows);

/// Residual of v after reduction against the echelon rows; zero iff v lies in
/// the row space.
QVector reduce_against(const RowEchelon& space, QVector v);

bool in_row_space(const RowEchelon& space, const QVector& v);

/// Intersection of two row spaces over the same coordinate space.
RowEchelon intersect(const RowEchelon& a, const RowEchelon& b);

/// {x : m x in space}, as a row space (x are column vectors of size m.cols()).
RowEchelon preimage(const QMatrix& m, const RowEchelon& space);

}  // namespace witt
