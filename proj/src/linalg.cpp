#include "hoffman/linalg.hpp"

#include <Eigen/SVD>

#include <stdexcept>

namespace hoffman {

double norm(const Vector& v, NormTag tag) {
  switch (tag) {
    case NormTag::L1:
      return v.lpNorm<1>();
    case NormTag::L2:
      return v.norm();
    default:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
}

namespace {

Eigen::JacobiSVD<Matrix> full_svd(const Matrix& M) {
  return Eigen::JacobiSVD<Matrix>(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

Index numerical_rank(const Eigen::JacobiSVD<Matrix>& svd, double rank_tol) {
  if (svd.singularValues().size() == 0) return 0;
  const double top = svd.singularValues()(0);
  if (top <= 0.0) return 0;
  Index r = 0;
  for (Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > rank_tol * top) ++r;
  return r;
}

}  // namespace

SubspaceBasis colspace_basis(const Matrix& M, double rank_tol) {
  SubspaceBasis out;
  out.ambient_dim = M.rows();
  if (M.rows() == 0 || M.cols() == 0) {
    out.basis = Matrix(M.rows(), 0);
    return out;
  }
  auto svd = full_svd(M);
  const Index r = numerical_rank(svd, rank_tol);
  out.basis = svd.matrixU().leftCols(r);
  return out;
}

SubspaceBasis nullspace_basis(const Matrix& M, double rank_tol) {
  SubspaceBasis out;
  out.ambient_dim = M.cols();
  if (M.rows() == 0 || M.cols() == 0) {
    out.basis = Matrix::Identity(M.cols(), M.cols());
    return out;
  }
  auto svd = full_svd(M);
  const Index r = numerical_rank(svd, rank_tol);
  out.basis = svd.matrixV().rightCols(M.cols() - r);
  return out;
}

Vector project(const Vector& v, const SubspaceBasis& S) {
  if (v.size() != S.ambient_dim)
    throw std::invalid_argument("project: dimension mismatch");
  if (S.rank() == 0) return Vector::Zero(v.size());
  return S.basis * (S.basis.transpose() * v);
}

double smallest_positive_singular_value(const Matrix& M, double rank_tol) {
  if (M.rows() == 0 || M.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0.0;
  const double top = sv(0);
  if (top <= 0.0) return 0.0;
  double smallest = 0.0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * top) smallest = sv(i);
  return smallest;
}

Matrix submatrix_rows(const Matrix& M, const IndexSet& J) {
  if (J.universe_size() != M.rows())
    throw std::invalid_argument("submatrix_rows: index set universe does not match rows");
  Matrix out(J.size(), M.cols());
  Index r = 0;
  for (Index i : J.zero_based()) out.row(r++) = M.row(i);
  return out;
}

double max_row_norm(const Matrix& M, NormTag tag) {
  double best = 0.0;
  for (Index i = 0; i < M.rows(); ++i)
    best = std::max(best, norm(M.row(i).transpose(), tag));
  return best;
}

}  // namespace hoffman
