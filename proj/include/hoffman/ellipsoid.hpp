#pragma once

#include "hoffman/polylp.hpp"
#include "hoffman/types.hpp"

namespace hoffman {

/// Minimizer of f(x,s) = -log(1 - |x|_2^2) - sum_j log s_j over Ax = 0,
/// C_J x + s = 0, together with the closed-form Hessian blocks of f there:
/// the x-block is hess_a * I + hess_b * x x', the s-block diag(1/s^2).
struct BarrierCenter {
  Vector x_bar;
  Vector s_bar;
  double hess_a = 2.0;
  double hess_b = 4.0;
};

/// Two-sided bracket for the Euclidean distance from the origin to the
/// relative boundary of D = {(Ax, C_J x + s): |x|_2 <= 1, s in R^J_+},
/// which equals 1/H_J(A;C) under L2 norms.
struct DikinBounds {
  double sigma = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  Index p = 0;  // rows of C; the bracket ratio is 4p + 9
};

/// Equality-constrained Newton solve of the barrier minimization. Throws
/// InfeasibleError when [A,C,J] is not relatively surjective (the origin is
/// not in the relative interior of D) and NumericalError on non-convergence.
BarrierCenter barrier_center(const Matrix& A, const Matrix& C, const IndexSet& J);

/// M = [A 0; C_J I] hess_f(center)^{-1} [A 0; C_J I]'.
Matrix dikin_matrix(const Matrix& A, const Matrix& C, const IndexSet& J,
                    const BarrierCenter& center);

/// sigma = smallest positive singular value of M^{1/2} restricted to
/// (A R^n) x R^J; bounds are [sigma, (4p+9) sigma].
DikinBounds dikin_bounds(const Matrix& A, const Matrix& C, const IndexSet& J);

}  // namespace hoffman
