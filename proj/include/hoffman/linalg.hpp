#pragma once

#include "hoffman/types.hpp"

namespace hoffman {

/// Orthonormal basis of a linear subspace of R^ambient_dim, stored as the
/// columns of `basis`. An empty basis (0 columns) represents {0}.
struct SubspaceBasis {
  Index ambient_dim = 0;
  Matrix basis;  // ambient_dim x rank, orthonormal columns

  Index rank() const { return basis.cols(); }
};

double norm(const Vector& v, NormTag tag);

/// Orthonormal basis of the column space of M. Singular values below
/// rank_tol times the largest are treated as zero.
SubspaceBasis colspace_basis(const Matrix& M, double rank_tol = kRankTol);

/// Orthonormal basis of the null space of M (all of R^cols when M has no rows).
SubspaceBasis nullspace_basis(const Matrix& M, double rank_tol = kRankTol);

/// Orthogonal projection of v onto span(S).
Vector project(const Vector& v, const SubspaceBasis& S);

/// Smallest singular value exceeding rank_tol times the largest; 0 if M = 0.
double smallest_positive_singular_value(const Matrix& M, double rank_tol = kRankTol);

/// Rows of M selected by J in ascending order; empty J gives a 0 x cols matrix.
Matrix submatrix_rows(const Matrix& M, const IndexSet& J);

/// Largest dual-of-domain norm over the rows of M (0 for an empty matrix).
/// Used to put surjectivity thresholds on a relative scale.
double max_row_norm(const Matrix& M, NormTag tag);

}  // namespace hoffman
