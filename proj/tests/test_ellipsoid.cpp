#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/ellipsoid.hpp"
#include "hoffman/linalg.hpp"
#include "hoffman/rng.hpp"
#include "oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace hoffman;

namespace {

// Membership of (y, w) in D = {(Ax, C_J x + s): |x|_2 <= 1, s >= 0}: the
// exact least-norm feasible x must fit in the unit ball.
bool in_domain(const Matrix& A, const Matrix& CJ, const Vector& y, const Vector& w,
               double tol = 1e-9) {
  const auto g = oracle::min_norm_l2(A, y, CJ, w);
  return g.has_value() && *g <= 1.0 + tol;
}

// Bisection along direction d for the exit radius of D; cap at t_hi.
double exit_radius(const Matrix& A, const Matrix& CJ, const Vector& d, Index m, double t_hi) {
  const Vector y_dir = d.head(m);
  const Vector w_dir = d.tail(d.size() - m);
  if (in_domain(A, CJ, Vector(t_hi * y_dir), Vector(t_hi * w_dir))) return t_hi;
  double lo = 0.0, hi = t_hi;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (in_domain(A, CJ, Vector(mid * y_dir), Vector(mid * w_dir)))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct Instance {
  Matrix A;
  Matrix C;
  IndexSet J;
};

// Random instances kept only when [A,C,J] is relatively surjective; roughly
// half use a strict subset J.
std::vector<Instance> random_instances(int count, Rng& rng, Index max_p = 4) {
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    const Index m = static_cast<Index>(rng.next_u64() % 3);       // 0..2 equations
    const Index p = 1 + static_cast<Index>(rng.next_u64() % max_p);
    const Index n = 2 + static_cast<Index>(rng.next_u64() % 3);   // 2..4 variables
    Instance inst;
    inst.A = rng.gaussian_matrix(m, n);
    inst.C = rng.gaussian_matrix(p, n);
    if (rng.uniform() < 0.5 && p > 1) {
      std::vector<int> members;
      for (int j = 1; j <= static_cast<int>(p); ++j)
        if (rng.uniform() < 0.6) members.push_back(j);
      if (members.empty()) members.push_back(1);
      inst.J = IndexSet(p, std::move(members));
    } else {
      inst.J = IndexSet::full(p);
    }
    if (min_relsurj_detect(inst.A, inst.C, inst.J).surjective) out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace

TEST_CASE("barrier center hand instance") {
  Matrix A(0, 1);
  Matrix C(1, 1);
  C << -1;
  const auto bc = barrier_center(A, C, IndexSet::full(1));
  CHECK(bc.x_bar(0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
  CHECK(bc.s_bar(0) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
  // u = 1 - x^2 = 2/3, so the x-block Hessian is 3 + 9 * x^2 = 6.
  CHECK(bc.hess_a == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(bc.hess_a + bc.hess_b * bc.x_bar.squaredNorm() == doctest::Approx(6.0).epsilon(1e-8));
}

TEST_CASE("barrier center trivial and degenerate cases") {
  SUBCASE("equations force the origin") {
    Matrix A(1, 1);
    A << 1;
    const auto bc = barrier_center(A, Matrix(0, 1), IndexSet::empty(0));
    CHECK(bc.x_bar.cwiseAbs().maxCoeff() == 0.0);
    CHECK(bc.s_bar.size() == 0);
    CHECK(bc.hess_a == doctest::Approx(2.0));
  }
  SUBCASE("halfline domain fails the precondition") {
    Matrix A(1, 1);
    A << 1;
    Matrix C(1, 1);
    C << 1;
    CHECK_THROWS_AS(barrier_center(A, C, IndexSet::full(1)), InfeasibleError);
  }
  SUBCASE("random feasible instance satisfies the center invariants") {
    Rng rng(118);
    const auto insts = random_instances(5, rng);
    for (const auto& inst : insts) {
      const auto bc = barrier_center(inst.A, inst.C, inst.J);
      if (inst.A.rows() > 0)
        CHECK((inst.A * bc.x_bar).cwiseAbs().maxCoeff() <= 1e-10);
      const Matrix CJ = submatrix_rows(inst.C, inst.J);
      CHECK((CJ * bc.x_bar + bc.s_bar).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(bc.x_bar.norm() < 1.0);
      for (Index j = 0; j < bc.s_bar.size(); ++j) CHECK(bc.s_bar(j) > 0.0);
    }
  }
}

TEST_CASE("dikin bounds hand instances") {
  SUBCASE("one inequality row") {
    Matrix A(0, 1);
    Matrix C(1, 1);
    C << -1;
    const auto db = dikin_bounds(A, C, IndexSet::full(1));
    CHECK(db.sigma == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(db.lower == db.sigma);
    CHECK(db.upper == 13.0 * db.sigma);
    CHECK(db.p == 1);
    // The true boundary distance of D = [-1, inf) is 1.
    CHECK(db.lower <= 1.0);
    CHECK(db.upper >= 1.0);
  }
  SUBCASE("one equation row") {
    Matrix A(1, 1);
    A << 1;
    const auto db = dikin_bounds(A, Matrix(0, 1), IndexSet::empty(0));
    CHECK(db.sigma == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(db.upper == 9.0 * db.sigma);
    CHECK(db.lower <= 1.0);
    CHECK(db.upper >= 1.0);
  }
}

TEST_CASE("bracket ratio is exactly 4p+9") {
  Rng rng(119);
  const auto insts = random_instances(10, rng);
  for (const auto& inst : insts) {
    const auto db = dikin_bounds(inst.A, inst.C, inst.J);
    CHECK(db.upper == static_cast<double>(4 * db.p + 9) * db.lower);
    CHECK(db.p == inst.C.rows());
  }
}

TEST_CASE("Dikin ellipsoid sits inside the domain") {
  Rng rng(121);
  const auto insts = random_instances(6, rng);
  for (const auto& inst : insts) {
    const Index m = inst.A.rows();
    const Index nj = inst.J.size();
    const Index n = inst.C.cols();
    const auto bc = barrier_center(inst.A, inst.C, inst.J);
    const Matrix M = dikin_matrix(inst.A, inst.C, inst.J, bc);
    const Matrix CJ = submatrix_rows(inst.C, inst.J);

    // Restricted square root of M.
    const SubspaceBasis BA = colspace_basis(inst.A);
    Matrix Q = Matrix::Zero(m + nj, BA.rank() + nj);
    if (BA.rank() > 0) Q.topLeftCorner(m, BA.rank()) = BA.basis;
    if (nj > 0) Q.bottomRightCorner(nj, nj) = Matrix::Identity(nj, nj);
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Q.transpose() * M * Q));
    const Matrix Mhalf_res = es.eigenvectors() *
                             es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                             es.eigenvectors().transpose();

    for (int it = 0; it < 200; ++it) {
      Vector dres = rng.gaussian_vector(Q.cols());
      if (dres.norm() == 0.0) continue;
      dres /= dres.norm();
      const Vector point = Q * (Mhalf_res * dres);  // boundary point of the ellipsoid
      const Vector y = point.head(m);
      const Vector w = point.tail(nj);

      // Outer polyhedral check: box relaxation of the unit ball must admit it.
      {
        LPBuilder b;
        std::vector<Index> xv;
        for (Index c = 0; c < n; ++c) xv.push_back(b.add_var(-1.0, 1.0));
        std::vector<Index> sv;
        for (Index j = 0; j < nj; ++j) sv.push_back(b.add_var(0.0, kInf));
        for (Index i = 0; i < m; ++i) {
          std::vector<double> cs;
          for (Index c = 0; c < n; ++c) cs.push_back(inst.A(i, c));
          b.add_eq(xv, cs, y(i));
        }
        for (Index j = 0; j < nj; ++j) {
          std::vector<Index> vars = xv;
          std::vector<double> cs;
          for (Index c = 0; c < n; ++c) cs.push_back(CJ(j, c));
          vars.push_back(sv[static_cast<std::size_t>(j)]);
          cs.push_back(1.0);
          b.add_eq(vars, cs, w(j));
        }
        CHECK(solve_lp(b.build()).status == LPStatus::Optimal);
      }
      // Exact quadratic check through the least-norm preimage.
      CHECK(in_domain(inst.A, CJ, y, w, 1e-7));
    }
  }
}

TEST_CASE("ray-search boundary estimate lies inside the bracket") {
  Rng rng(127);
  const auto insts = random_instances(8, rng);
  for (const auto& inst : insts) {
    const Index m = inst.A.rows();
    const Index nj = inst.J.size();
    const auto db = dikin_bounds(inst.A, inst.C, inst.J);
    const auto bc = barrier_center(inst.A, inst.C, inst.J);
    const Matrix M = dikin_matrix(inst.A, inst.C, inst.J, bc);
    const Matrix CJ = submatrix_rows(inst.C, inst.J);

    const SubspaceBasis BA = colspace_basis(inst.A);
    Matrix Q = Matrix::Zero(m + nj, BA.rank() + nj);
    if (BA.rank() > 0) Q.topLeftCorner(m, BA.rank()) = BA.basis;
    if (nj > 0) Q.bottomRightCorner(nj, nj) = Matrix::Identity(nj, nj);
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(Q.transpose() * M * Q));

    // Directions: the eigenvector of the smallest positive eigenvalue in
    // both signs (this pins the estimate under the upper bound), plus a
    // random sample of the subspace.
    std::vector<Vector> dirs;
    {
      const Vector lam = es.eigenvalues();
      const double top = lam.cwiseAbs().maxCoeff();
      Index kmin = -1;
      for (Index k = 0; k < lam.size(); ++k)
        if (lam(k) > kRankTol * top && (kmin < 0 || lam(k) < lam(kmin))) kmin = k;
      if (kmin >= 0) {
        const Vector d = Q * es.eigenvectors().col(kmin);
        dirs.push_back(d);
        dirs.push_back(-d);
      }
    }
    for (int it = 0; it < 60; ++it) {
      Vector dres = rng.gaussian_vector(Q.cols());
      if (dres.norm() == 0.0) continue;
      dirs.push_back(Q * (dres / dres.norm()));
    }

    const double cap = 10.0 * db.upper + 1.0;
    double estimate = kInf;
    for (const Vector& d : dirs)
      estimate = std::min(estimate, exit_radius(inst.A, CJ, d, m, cap));
    CHECK(estimate >= db.lower - 1e-6);
    CHECK(estimate <= db.upper + 1e-6);
  }
}
