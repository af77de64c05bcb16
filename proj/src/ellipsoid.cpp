#include "hoffman/ellipsoid.hpp"

#include "hoffman/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace hoffman {

namespace {

struct ReducedBarrier {
  // Objective in reduced coordinates w with x = N w:
  //   g(w) = -log(1 - |Nw|^2) - sum_j log((-C_J N w)_j)
  Matrix N;    // n x q, orthonormal null-space basis of A
  Matrix MC;   // |J| x q, C_J N

  Vector slack(const Vector& w) const { return -(MC * w); }

  bool interior(const Vector& w) const {
    if (w.squaredNorm() >= 1.0) return false;
    const Vector s = slack(w);
    for (Index j = 0; j < s.size(); ++j)
      if (s(j) <= 0.0) return false;
    return true;
  }

  double value(const Vector& w) const {
    double val = -std::log1p(-w.squaredNorm());
    const Vector s = slack(w);
    for (Index j = 0; j < s.size(); ++j) val -= std::log(s(j));
    return val;
  }

  Vector gradient(const Vector& w) const {
    const double u = 1.0 - w.squaredNorm();
    Vector g = (2.0 / u) * w;
    const Vector s = slack(w);
    for (Index j = 0; j < s.size(); ++j) g += MC.row(j).transpose() / s(j);
    return g;
  }

  Matrix hessian(const Vector& w) const {
    const double u = 1.0 - w.squaredNorm();
    const Index q = w.size();
    Matrix H = (2.0 / u) * Matrix::Identity(q, q) + (4.0 / (u * u)) * (w * w.transpose());
    const Vector s = slack(w);
    for (Index j = 0; j < s.size(); ++j)
      H += (MC.row(j).transpose() * MC.row(j)) / (s(j) * s(j));
    return H;
  }

  // Largest fraction of the step to the domain boundary.
  double max_step(const Vector& w, const Vector& d) const {
    double tmax = kInf;
    const double a = d.squaredNorm();
    if (a > 0.0) {
      const double b = 2.0 * w.dot(d);
      const double c = w.squaredNorm() - 1.0;
      const double disc = b * b - 4.0 * a * c;
      if (disc >= 0.0) {
        const double root = (-b + std::sqrt(disc)) / (2.0 * a);
        if (root > 0.0) tmax = std::min(tmax, root);
      }
    }
    const Vector s = slack(w);
    const Vector ds = MC * d;  // slack moves by -t * ds
    for (Index j = 0; j < s.size(); ++j)
      if (ds(j) > 0.0) tmax = std::min(tmax, s(j) / ds(j));
    return tmax;
  }
};

// Exact (bisection) line search on the convex 1-D restriction.
double line_search(const ReducedBarrier& rb, const Vector& w, const Vector& d) {
  const double bound = rb.max_step(w, d);
  double hi = std::isfinite(bound) ? 0.999 * bound : 1.0;
  if (!std::isfinite(bound)) {
    // Expand until the derivative turns positive or the step stops helping.
    while (rb.gradient(w + hi * d).dot(d) < 0.0 && hi < 1e12) hi *= 2.0;
  }
  auto dphi = [&](double t) { return rb.gradient(w + t * d).dot(d); };
  if (dphi(hi) <= 0.0) return hi;
  double lo = 0.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (dphi(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Vector interior_start(const Matrix& A, const Matrix& CJ, const ReducedBarrier& rb) {
  const Index n = rb.N.rows();
  const Index q = rb.N.cols();
  if (CJ.rows() == 0) return Vector::Zero(q);

  // Phase 1: any x with Ax = 0 and C_J x <= -1, then pulled into the ball.
  LPBuilder b;
  std::vector<Index> xv(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) xv[static_cast<std::size_t>(c)] = b.add_var(-kInf, kInf);
  for (Index i = 0; i < A.rows(); ++i) {
    std::vector<double> cs(static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) cs[static_cast<std::size_t>(c)] = A(i, c);
    b.add_eq(xv, cs, 0.0);
  }
  for (Index i = 0; i < CJ.rows(); ++i) {
    std::vector<double> cs(static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) cs[static_cast<std::size_t>(c)] = CJ(i, c);
    b.add_le(xv, cs, -1.0);
  }
  // Keep the phase-1 point bounded.
  for (Index c = 0; c < n; ++c) {
    b.add_le({xv[static_cast<std::size_t>(c)]}, {1.0}, 1e6);
    b.add_le({xv[static_cast<std::size_t>(c)]}, {-1.0}, 1e6);
  }
  LPOutcome lp = solve_lp(b.build());
  if (lp.status != LPStatus::Optimal)
    throw NumericalError("barrier_center: interior phase-1 LP failed (" +
                         to_string(lp.status) + ")");
  Vector x(n);
  for (Index c = 0; c < n; ++c) x(c) = lp.primal(xv[static_cast<std::size_t>(c)]);
  Vector w = rb.N.transpose() * x;
  const double nw = w.norm();
  if (nw > 0.9) w *= 0.9 / nw;
  if (!rb.interior(w)) throw NumericalError("barrier_center: interior start not strictly feasible");
  return w;
}

}  // namespace

BarrierCenter barrier_center(const Matrix& A, const Matrix& C, const IndexSet& J) {
  const SurjectivityOutcome detect = min_relsurj_detect(A, C, J);
  if (!detect.surjective)
    throw InfeasibleError(
        "barrier_center: [A,C,J] is not relatively surjective; certificate {" +
        detect.support.to_string() + "}");

  const Index n = C.rows() > 0 ? C.cols() : A.cols();
  const Matrix Aeff = A.rows() > 0 ? A : Matrix(0, n);
  const Matrix CJ = submatrix_rows(C.rows() > 0 ? C : Matrix(0, n), J);

  ReducedBarrier rb;
  rb.N = nullspace_basis(Aeff).basis;
  rb.MC = CJ.rows() > 0 ? Matrix(CJ * rb.N) : Matrix(0, rb.N.cols());

  Vector w;
  if (J.is_empty()) {
    w = Vector::Zero(rb.N.cols());
  } else {
    w = interior_start(Aeff, CJ, rb);
    // Damped Newton with exact line search; the objective is a
    // self-concordant barrier so this converges from any interior point.
    const int max_newton = 200;
    bool converged = false;
    for (int it = 0; it < max_newton; ++it) {
      const Vector g = rb.gradient(w);
      const Matrix H = rb.hessian(w);
      const Vector d = H.ldlt().solve(-g);
      const double decrement2 = -g.dot(d);
      if (g.norm() <= 1e-10 && decrement2 <= 1e-20) {
        converged = true;
        break;
      }
      const double t = line_search(rb, w, d);
      const Vector wn = w + t * d;
      if (!rb.interior(wn)) break;
      w = wn;
    }
    if (!converged && rb.gradient(w).norm() > 1e-10)
      throw NumericalError("barrier_center: Newton did not reach the requested tolerance");
  }

  BarrierCenter out;
  out.x_bar = rb.N * w;
  out.s_bar = CJ.rows() > 0 ? Vector(-(CJ * out.x_bar)) : Vector(0);
  const double u = 1.0 - out.x_bar.squaredNorm();
  out.hess_a = 2.0 / u;
  out.hess_b = 4.0 / (u * u);
  return out;
}

Matrix dikin_matrix(const Matrix& A, const Matrix& C, const IndexSet& J,
                    const BarrierCenter& center) {
  const Index n = C.rows() > 0 ? C.cols() : A.cols();
  const Index m = A.rows();
  const Matrix CJ = submatrix_rows(C.rows() > 0 ? C : Matrix(0, n), J);
  const Index nj = CJ.rows();

  // Inverse Hessian in closed form: Sherman-Morrison on the x-block,
  // diag(s^2) on the slack block.
  const Vector& x = center.x_bar;
  const double a = center.hess_a;
  const double bb = center.hess_b;
  Matrix Hinv_x = Matrix::Identity(n, n) / a -
                  (bb / (a * (a + bb * x.squaredNorm()))) * (x * x.transpose());

  Matrix B = Matrix::Zero(m + nj, n + nj);
  if (m > 0) B.topLeftCorner(m, n) = A;
  if (nj > 0) {
    B.bottomLeftCorner(nj, n) = CJ;
    B.bottomRightCorner(nj, nj) = Matrix::Identity(nj, nj);
  }
  Matrix Hinv = Matrix::Zero(n + nj, n + nj);
  Hinv.topLeftCorner(n, n) = Hinv_x;
  for (Index j = 0; j < nj; ++j) Hinv(n + j, n + j) = center.s_bar(j) * center.s_bar(j);
  return B * Hinv * B.transpose();
}

DikinBounds dikin_bounds(const Matrix& A, const Matrix& C, const IndexSet& J) {
  const BarrierCenter center = barrier_center(A, C, J);
  const Matrix M = dikin_matrix(A, C, J, center);
  const Index m = A.rows();
  const Index nj = J.size();

  // Restrict to (A R^n) x R^J before taking the square root.
  const SubspaceBasis BA = colspace_basis(A);
  const Index r = BA.rank();
  Matrix Q = Matrix::Zero(m + nj, r + nj);
  if (r > 0) Q.topLeftCorner(m, r) = BA.basis;
  if (nj > 0) Q.bottomRightCorner(nj, nj) = Matrix::Identity(nj, nj);
  const Matrix Mres = Q.transpose() * M * Q;

  DikinBounds out;
  out.p = C.rows();
  if (Mres.rows() == 0) return out;

  Eigen::SelfAdjointEigenSolver<Matrix> es(Mres);
  Vector lam = es.eigenvalues().cwiseMax(0.0);
  Matrix Mhalf = es.eigenvectors() * lam.cwiseSqrt().asDiagonal() *
                 es.eigenvectors().transpose();
  out.sigma = smallest_positive_singular_value(Mhalf);
  out.lower = out.sigma;
  out.upper = static_cast<double>(4 * out.p + 9) * out.sigma;
  return out;
}

}  // namespace hoffman
