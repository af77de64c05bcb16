#include "hoffman/polylp.hpp"

#include <Eigen/QR>

#include <cmath>
#include <functional>

namespace hoffman {

namespace {

struct LinExpr {
  std::vector<Index> vars;
  std::vector<double> coeffs;
  double constant = 0.0;
};

// Adds epigraph variables so that the LP objective equals ||exprs|| under
// `tag` (L1 or LInf only).
void set_norm_objective(LPBuilder& b, const std::vector<LinExpr>& exprs, NormTag tag) {
  if (tag == NormTag::L2) throw UnsupportedNormError("L2 objective is not LP-representable");
  Index shared_t = -1;
  if (tag == NormTag::LInf) shared_t = b.add_var(0.0, kInf, 1.0);
  for (const LinExpr& e : exprs) {
    const Index t = tag == NormTag::LInf ? shared_t : b.add_var(0.0, kInf, 1.0);
    std::vector<Index> vars = e.vars;
    std::vector<double> pos = e.coeffs;
    vars.push_back(t);
    pos.push_back(-1.0);
    b.add_le(vars, pos, -e.constant);
    std::vector<double> neg;
    neg.reserve(pos.size());
    for (double c : e.coeffs) neg.push_back(-c);
    neg.push_back(-1.0);
    b.add_le(vars, neg, e.constant);
  }
}

double support_tol(const Vector& v) {
  return 1e-9 * std::max(1.0, v.size() > 0 ? v.cwiseAbs().maxCoeff() : 0.0);
}

IndexSet positive_support(const Vector& full, Index universe) {
  std::vector<int> members;
  const double tol = support_tol(full);
  for (Index k = 0; k < full.size(); ++k)
    if (full(k) > tol) members.push_back(static_cast<int>(k) + 1);
  return IndexSet(universe, std::move(members));
}

double data_scale(const Matrix& A, NormTag row_tag) {
  return std::max(1.0, max_row_norm(A, row_tag));
}

LPOutcome solve_or_throw(const LPProblem& p, const char* what) {
  LPOutcome out = solve_lp(p);
  if (out.status == LPStatus::IterationLimit)
    throw NumericalError(std::string("LP did not converge in ") + what);
  return out;
}

}  // namespace

double surjectivity_threshold(const Matrix& A, NormTag domain) {
  return kSurjTol * data_scale(A, dual(domain));
}

SurjectivityOutcome min_conic_image_norm(const Matrix& A, const IndexSet& J,
                                         const NormConfig& cfg) {
  return min_conic_image_norm_restricted(A, J, IndexSet::full(A.rows()), cfg);
}

SurjectivityOutcome min_conic_image_norm_restricted(const Matrix& A, const IndexSet& J,
                                                    const IndexSet& L, const NormConfig& cfg) {
  if (J.universe_size() != A.rows() || L.universe_size() != A.rows())
    throw std::invalid_argument("min_conic_image_norm: index universe mismatch");
  if (cfg.codomain == NormTag::L2 || cfg.domain == NormTag::L2)
    throw UnsupportedNormError("min_conic_image_norm: exact path needs L1/LInf norms");

  const Index m = A.rows();
  const NormTag obj_tag = dual(cfg.domain);
  SurjectivityOutcome out;
  out.support = IndexSet::empty(m);
  out.witness_v = Vector::Zero(m);

  const IndexSet JL = J.intersect(L);
  if (JL.is_empty()) {
    // Nothing to normalize: value +inf by convention.
    out.value = kInf;
    out.surjective = true;
    return out;
  }

  const double eps = surjectivity_threshold(A, cfg.domain);

  // A zero row inside the normalized block defeats surjectivity by itself.
  const double zero_row_tol = 1e-14 * data_scale(A, obj_tag);
  for (int i : JL.members()) {
    if (norm(A.row(i - 1).transpose(), obj_tag) <= zero_row_tol) {
      out.value = 0.0;
      out.surjective = false;
      out.support = IndexSet::of({i}, static_cast<Index>(m));
      out.witness_v(i - 1) = 1.0;
      return out;
    }
  }

  const Matrix AJ = submatrix_rows(A, J);
  const Index nj = J.size();
  const Index n = A.cols();
  const auto rows = J.members();

  // LInf codomain: one LP with sum(v_{J∩L}) = 1. L1 codomain: one LP per
  // j in J∩L fixing v_j >= 1 (equivalent to v_j = 1, v <= 1 after scaling).
  std::vector<int> fixed_list;
  if (cfg.codomain == NormTag::LInf) {
    fixed_list.push_back(-1);
  } else {
    for (int j : JL.members()) fixed_list.push_back(j);
  }

  double best = kInf;
  Vector best_v;
  for (int fixed : fixed_list) {
    LPBuilder b;
    std::vector<Index> vvar(static_cast<std::size_t>(nj));
    for (Index k = 0; k < nj; ++k) {
      const bool fix = fixed >= 0 && rows[static_cast<std::size_t>(k)] == fixed;
      vvar[static_cast<std::size_t>(k)] = b.add_var(fix ? 1.0 : 0.0, kInf);
    }
    if (fixed < 0) {
      std::vector<Index> vars;
      std::vector<double> ones;
      for (Index k = 0; k < nj; ++k) {
        if (L.contains(rows[static_cast<std::size_t>(k)])) {
          vars.push_back(vvar[static_cast<std::size_t>(k)]);
          ones.push_back(1.0);
        }
      }
      b.add_eq(vars, ones, 1.0);
    }
    std::vector<LinExpr> exprs(static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) {
      LinExpr& e = exprs[static_cast<std::size_t>(c)];
      for (Index k = 0; k < nj; ++k) {
        e.vars.push_back(vvar[static_cast<std::size_t>(k)]);
        e.coeffs.push_back(AJ(k, c));
      }
    }
    set_norm_objective(b, exprs, obj_tag);
    LPOutcome lp = solve_or_throw(b.build(), "min_conic_image_norm");
    if (lp.status != LPStatus::Optimal) continue;
    if (lp.value < best) {
      best = lp.value;
      best_v = Vector::Zero(m);
      for (Index k = 0; k < nj; ++k)
        best_v(rows[static_cast<std::size_t>(k)] - 1) =
            lp.primal(vvar[static_cast<std::size_t>(k)]);
    }
  }

  out.value = best;
  if (best == kInf) {
    out.surjective = true;
    return out;
  }
  const double wn = norm(best_v, dual(cfg.codomain));
  if (wn > 0.0) best_v /= wn;
  out.witness_v = best_v;
  out.surjective = best > eps;
  if (!out.surjective) {
    out.support = positive_support(best_v, m);
    if (out.support.is_empty()) out.support = J;  // never report an empty certificate
  }
  return out;
}

SurjectivityOutcome min_relsurj_detect(const Matrix& A, const Matrix& C, const IndexSet& J) {
  const Index p = C.rows();
  const Index m = A.rows();
  const Index n = C.cols() > 0 ? C.cols() : A.cols();
  if (m > 0 && p > 0 && A.cols() != C.cols())
    throw std::invalid_argument("min_relsurj_detect: column mismatch between A and C");
  if (J.universe_size() != p) throw std::invalid_argument("min_relsurj_detect: bad universe");

  SurjectivityOutcome out;
  out.support = IndexSet::empty(p);
  out.witness_v = Vector::Zero(m + p);
  if (J.is_empty()) {
    out.value = kInf;
    out.surjective = true;
    return out;
  }

  double scale = 1.0;
  if (A.size() > 0) scale = std::max(scale, A.cwiseAbs().maxCoeff());
  if (C.size() > 0) scale = std::max(scale, C.cwiseAbs().maxCoeff());
  const double eps = kSurjTol * scale;

  for (int i : J.members()) {
    if (C.row(i - 1).cwiseAbs().maxCoeff() <= 1e-14 * scale) {
      out.value = 0.0;
      out.surjective = false;
      out.support = IndexSet::of({i}, p);
      out.witness_v(m + i - 1) = 1.0;
      return out;
    }
  }

  const SubspaceBasis BA = colspace_basis(A);
  const Index r = BA.rank();
  const Matrix G = (m > 0 && r > 0) ? Matrix(A.transpose() * BA.basis) : Matrix(n, 0);
  const Matrix CJ = submatrix_rows(C, J);
  const Index nj = J.size();
  const auto rows = J.members();
  const Index gr = G.cols();

  LPBuilder b;
  std::vector<Index> avar(static_cast<std::size_t>(gr));
  for (Index k = 0; k < gr; ++k) avar[static_cast<std::size_t>(k)] = b.add_var(-kInf, kInf);
  std::vector<Index> zvar(static_cast<std::size_t>(nj));
  for (Index k = 0; k < nj; ++k) zvar[static_cast<std::size_t>(k)] = b.add_var(0.0, kInf);
  {
    std::vector<double> ones(static_cast<std::size_t>(nj), 1.0);
    b.add_eq(zvar, ones, 1.0);
  }
  std::vector<LinExpr> exprs(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) {
    LinExpr& e = exprs[static_cast<std::size_t>(c)];
    for (Index k = 0; k < gr; ++k) {
      e.vars.push_back(avar[static_cast<std::size_t>(k)]);
      e.coeffs.push_back(G(c, k));
    }
    for (Index k = 0; k < nj; ++k) {
      e.vars.push_back(zvar[static_cast<std::size_t>(k)]);
      e.coeffs.push_back(CJ(k, c));
    }
  }
  // Detection is norm-independent; a fixed LInf objective keeps it one LP.
  set_norm_objective(b, exprs, NormTag::LInf);
  LPOutcome lp = solve_or_throw(b.build(), "min_relsurj_detect");
  if (lp.status != LPStatus::Optimal)
    throw NumericalError("min_relsurj_detect: unexpected LP status " + to_string(lp.status));

  out.value = lp.value;
  out.surjective = lp.value > eps;
  Vector v = Vector::Zero(m);
  for (Index k = 0; k < gr; ++k)
    v += BA.basis.col(k) * lp.primal(avar[static_cast<std::size_t>(k)]);
  Vector z = Vector::Zero(p);
  for (Index k = 0; k < nj; ++k)
    z(rows[static_cast<std::size_t>(k)] - 1) = lp.primal(zvar[static_cast<std::size_t>(k)]);
  out.witness_v << v, z;
  if (!out.surjective) {
    out.support = positive_support(z, p);
    if (out.support.is_empty()) out.support = J;
  }
  return out;
}

namespace {

// Shared worker for the mixed, easy-constraint and facial value problems:
// minimize the dual-domain norm of A'v + C_J'z over v in span(VB) and
// z in R^J_+, one LP per normalization subproblem, overall minimum wins.
struct ValueProblem {
  const Matrix* A = nullptr;    // m x n block whose transpose hits v
  const Matrix* C = nullptr;    // p x n
  const IndexSet* J = nullptr;  // subset of {1..p}
  SubspaceBasis VB;             // subspace carrying v
  std::vector<Vector> norm_gs;  // subproblems <v,g> >= 1
  std::vector<int> norm_zs;     // subproblems z_j >= 1
  bool z_sum_one = false;       // single subproblem sum(z) = 1
  NormTag obj_tag = NormTag::L1;
};

struct ValueResult {
  double value = kInf;
  Vector v;
  Vector z;
  bool any_feasible = false;
};

ValueResult solve_value_problem(const ValueProblem& vp) {
  const Matrix& A = *vp.A;
  const Matrix& C = *vp.C;
  const IndexSet& J = *vp.J;
  const Index m = A.rows();
  const Index p = C.rows();
  const Index n = std::max(A.cols(), C.cols());
  const Index r = vp.VB.rank();
  const Index nj = J.size();
  const Matrix G = (m > 0 && r > 0) ? Matrix(A.transpose() * vp.VB.basis) : Matrix(n, 0);
  const Index gr = G.cols();
  const Matrix CJ = submatrix_rows(C, J);
  const auto rows = J.members();

  struct Sub {
    const Vector* g = nullptr;
    int zfix = -1;
    bool sum = false;
  };
  std::vector<Sub> subs;
  for (const Vector& g : vp.norm_gs) subs.push_back({&g, -1, false});
  for (int j : vp.norm_zs) subs.push_back({nullptr, j, false});
  if (vp.z_sum_one && nj > 0) subs.push_back({nullptr, -1, true});

  ValueResult res;
  res.v = Vector::Zero(m);
  res.z = Vector::Zero(p);
  for (const Sub& sub : subs) {
    LPBuilder b;
    std::vector<Index> avar(static_cast<std::size_t>(gr));
    for (Index k = 0; k < gr; ++k) avar[static_cast<std::size_t>(k)] = b.add_var(-kInf, kInf);
    std::vector<Index> zvar(static_cast<std::size_t>(nj));
    for (Index k = 0; k < nj; ++k) {
      const bool fix = sub.zfix >= 0 && rows[static_cast<std::size_t>(k)] == sub.zfix;
      zvar[static_cast<std::size_t>(k)] = b.add_var(fix ? 1.0 : 0.0, kInf);
    }
    if (sub.sum) {
      std::vector<double> ones(static_cast<std::size_t>(nj), 1.0);
      b.add_eq(zvar, ones, 1.0);
    }
    if (sub.g != nullptr) {
      if (gr == 0) continue;  // no v directions to normalize against
      Vector coef = vp.VB.basis.transpose() * (*sub.g);
      std::vector<double> cs;
      cs.reserve(static_cast<std::size_t>(gr));
      for (Index k = 0; k < gr; ++k) cs.push_back(-coef(k));
      b.add_le(avar, cs, -1.0);
    }
    std::vector<LinExpr> exprs(static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) {
      LinExpr& e = exprs[static_cast<std::size_t>(c)];
      for (Index k = 0; k < gr; ++k) {
        e.vars.push_back(avar[static_cast<std::size_t>(k)]);
        e.coeffs.push_back(G(c, k));
      }
      for (Index k = 0; k < nj; ++k) {
        e.vars.push_back(zvar[static_cast<std::size_t>(k)]);
        e.coeffs.push_back(CJ(k, c));
      }
    }
    set_norm_objective(b, exprs, vp.obj_tag);
    LPOutcome lp = solve_or_throw(b.build(), "surjectivity value problem");
    if (lp.status != LPStatus::Optimal) continue;
    res.any_feasible = true;
    if (lp.value < res.value) {
      res.value = lp.value;
      res.v = Vector::Zero(m);
      for (Index k = 0; k < gr; ++k)
        res.v += vp.VB.basis.col(k) * lp.primal(avar[static_cast<std::size_t>(k)]);
      res.z = Vector::Zero(p);
      for (Index k = 0; k < nj; ++k)
        res.z(rows[static_cast<std::size_t>(k)] - 1) =
            lp.primal(zvar[static_cast<std::size_t>(k)]);
    }
  }
  return res;
}

}  // namespace

SurjectivityOutcome min_relsurj_value(const Matrix& A, const Matrix& C, const IndexSet& J,
                                      const NormConfig& cfg, Normalization block) {
  const Index m = A.rows();
  const Index p = C.rows();
  if (J.universe_size() != p) throw std::invalid_argument("min_relsurj_value: bad universe");
  if (cfg.domain == NormTag::L2 || cfg.codomain == NormTag::L2)
    throw UnsupportedNormError("min_relsurj_value: exact path needs L1/LInf norms");
  if (block != Normalization::InequalityMultipliers && cfg.codomain != NormTag::L1 && m > 0)
    throw UnsupportedNormError(
        "min_relsurj_value: free equation multipliers need the L1 codomain norm");

  ValueProblem vp;
  vp.A = &A;
  vp.C = &C;
  vp.J = &J;
  vp.obj_tag = dual(cfg.domain);
  vp.VB = colspace_basis(A);

  const bool norm_v = block != Normalization::InequalityMultipliers;
  const bool norm_z = block != Normalization::EquationMultipliers;
  if (norm_v) vp.norm_gs = l1_section_extremes(vp.VB);
  if (norm_z) {
    if (cfg.codomain == NormTag::LInf) {
      vp.z_sum_one = true;
    } else {
      vp.norm_zs = J.members();
    }
  }

  ValueResult res = solve_value_problem(vp);

  SurjectivityOutcome out;
  out.witness_v = Vector::Zero(m + p);
  out.support = IndexSet::empty(p);
  if (!res.any_feasible) {
    out.value = kInf;
    out.surjective = true;
    return out;
  }
  out.value = res.value;
  out.witness_v << res.v, res.z;
  double scale = 1.0;
  if (A.size() > 0) scale = std::max(scale, A.cwiseAbs().maxCoeff());
  if (C.size() > 0) scale = std::max(scale, C.cwiseAbs().maxCoeff());
  out.surjective = res.value > kSurjTol * scale;
  if (!out.surjective) {
    out.support = positive_support(res.z, p);
    if (out.support.is_empty()) out.support = J;
  }
  return out;
}

SurjectivityOutcome min_facial_value(const Matrix& A, const IndexSet& J, const NormConfig& cfg) {
  const Index m = A.rows();
  const Index n = A.cols();
  if (J.universe_size() != n) throw std::invalid_argument("min_facial_value: bad universe");
  if (cfg.domain == NormTag::L2 || cfg.codomain != NormTag::L1)
    throw UnsupportedNormError("min_facial_value: exact path needs the L1 codomain norm");

  Matrix At(m + 1, n);
  At.topRows(m) = A;
  At.row(m).setOnes();
  const Matrix C = -Matrix::Identity(n, n);

  // L_A = {Ax : 1'x = 0}.
  Matrix ones(1, n);
  ones.setOnes();
  const SubspaceBasis N1 = nullspace_basis(ones);
  const SubspaceBasis LA =
      colspace_basis(m > 0 ? Matrix(A * N1.basis) : Matrix(0, N1.rank()));

  ValueProblem vp;
  vp.A = &At;  // At'(v,t) = A'v + t*1
  vp.C = &C;
  vp.J = &J;
  vp.obj_tag = dual(cfg.domain);
  vp.VB = colspace_basis(At);

  // The normalization acts on the R^m block through the projection onto
  // L_A; lift each extreme direction of the L_A section by a zero t-slot.
  std::vector<Vector> gs = l1_section_extremes(LA);
  vp.norm_gs.reserve(gs.size());
  for (const Vector& g : gs) {
    Vector lifted = Vector::Zero(m + 1);
    lifted.head(m) = g;
    vp.norm_gs.push_back(std::move(lifted));
  }

  ValueResult res = solve_value_problem(vp);

  SurjectivityOutcome out;
  out.witness_v = Vector::Zero(m + 1 + n);
  out.support = IndexSet::empty(n);
  if (!res.any_feasible) {
    out.value = kInf;
    out.surjective = true;
    return out;
  }
  out.value = res.value;
  out.witness_v << res.v, res.z;
  out.surjective = res.value > surjectivity_threshold(At, cfg.domain);
  return out;
}

std::pair<double, Vector> distance_to_polyhedron(const Vector& u, const Matrix& A,
                                                 const Vector& b, const Matrix* eqA,
                                                 const Vector* eqb, NormTag domain_norm) {
  const Index n = u.size();
  if (A.rows() != b.size() || (A.rows() > 0 && A.cols() != n))
    throw std::invalid_argument("distance_to_polyhedron: dimension mismatch");
  if (domain_norm == NormTag::L2)
    throw UnsupportedNormError("distance_to_polyhedron: L2 distance is not an LP");

  LPBuilder bld;
  std::vector<Index> xvar(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) xvar[static_cast<std::size_t>(c)] = bld.add_var(-kInf, kInf);
  for (Index i = 0; i < A.rows(); ++i) {
    std::vector<double> cs(static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) cs[static_cast<std::size_t>(c)] = A(i, c);
    bld.add_le(xvar, cs, b(i));
  }
  if (eqA != nullptr) {
    if (eqb == nullptr || eqA->rows() != eqb->size() || eqA->cols() != n)
      throw std::invalid_argument("distance_to_polyhedron: bad equality block");
    for (Index i = 0; i < eqA->rows(); ++i) {
      std::vector<double> cs(static_cast<std::size_t>(n));
      for (Index c = 0; c < n; ++c) cs[static_cast<std::size_t>(c)] = (*eqA)(i, c);
      bld.add_eq(xvar, cs, (*eqb)(i));
    }
  }
  std::vector<LinExpr> exprs(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) {
    LinExpr& e = exprs[static_cast<std::size_t>(c)];
    e.vars = {xvar[static_cast<std::size_t>(c)]};
    e.coeffs = {-1.0};
    e.constant = u(c);
  }
  set_norm_objective(bld, exprs, domain_norm);
  LPOutcome lp = solve_lp(bld.build());
  if (lp.status == LPStatus::Infeasible)
    throw InfeasibleError("distance_to_polyhedron: empty polyhedron");
  if (lp.status != LPStatus::Optimal)
    throw NumericalError("distance_to_polyhedron: unexpected LP status");
  Vector x(n);
  for (Index c = 0; c < n; ++c) x(c) = lp.primal(xvar[static_cast<std::size_t>(c)]);
  return {lp.value, x};
}

std::pair<double, Vector> min_norm_solution(const Matrix& A, const IndexSet& J, const Vector& y,
                                            NormTag domain_norm) {
  if (J.universe_size() != A.rows() || y.size() != A.rows())
    throw std::invalid_argument("min_norm_solution: dimension mismatch");
  if (domain_norm == NormTag::L2)
    throw UnsupportedNormError("min_norm_solution: L2 norm is not an LP");
  const Index n = A.cols();

  LPBuilder bld;
  std::vector<Index> xvar(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) xvar[static_cast<std::size_t>(c)] = bld.add_var(-kInf, kInf);
  for (Index i : J.zero_based()) {
    std::vector<double> cs(static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) cs[static_cast<std::size_t>(c)] = A(i, c);
    bld.add_le(xvar, cs, y(i));
  }
  std::vector<LinExpr> exprs(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) {
    LinExpr& e = exprs[static_cast<std::size_t>(c)];
    e.vars = {xvar[static_cast<std::size_t>(c)]};
    e.coeffs = {1.0};
  }
  set_norm_objective(bld, exprs, domain_norm);
  LPOutcome lp = solve_lp(bld.build());
  if (lp.status == LPStatus::Infeasible)
    throw InfeasibleError("min_norm_solution: infeasible system");
  if (lp.status != LPStatus::Optimal)
    throw NumericalError("min_norm_solution: unexpected LP status");
  Vector x(n);
  for (Index c = 0; c < n; ++c) x(c) = lp.primal(xvar[static_cast<std::size_t>(c)]);
  return {lp.value, x};
}

std::vector<Vector> l1_section_extremes(const SubspaceBasis& W) {
  const Index m = W.ambient_dim;
  const Index r = W.rank();
  std::vector<Vector> out;
  if (r == 0) return out;
  if (r == m) {
    for (Index i = 0; i < m; ++i) {
      Vector e = Vector::Zero(m);
      e(i) = 1.0;
      out.push_back(e);
      out.push_back(-e);
    }
    return out;
  }
  if (m > 16)
    throw std::length_error("l1_section_extremes: ambient dimension too large for enumeration");

  const Matrix P = Matrix::Identity(m, m) - W.basis * W.basis.transpose();
  const Index max_support = m - r + 1;
  std::vector<Vector> found;

  // Each extreme point of the section is the transversal intersection of the
  // subspace with the affine hull of a cross-polytope face: fix a support and
  // sign pattern (first sign positive, the mirror image comes for free) and
  // solve for the unique convex combination lying in the subspace.
  auto process_support = [&](const std::vector<int>& S) {
    const Index k = static_cast<Index>(S.size());
    const std::uint64_t signs = k > 1 ? (std::uint64_t{1} << (k - 1)) : 1;
    for (std::uint64_t bits = 0; bits < signs; ++bits) {
      Matrix Q(m + 1, k);
      for (Index c = 0; c < k; ++c) {
        const double sgn = (c > 0 && (bits & (std::uint64_t{1} << (c - 1)))) ? -1.0 : 1.0;
        Q.col(c).head(m) = P.col(S[static_cast<std::size_t>(c)]) * sgn;
        Q(m, c) = 1.0;
      }
      Vector rhs = Vector::Zero(m + 1);
      rhs(m) = 1.0;
      Eigen::ColPivHouseholderQR<Matrix> qr(Q);
      if (qr.rank() < k) continue;  // non-transversal; endpoints appear at smaller supports
      Vector lam = qr.solve(rhs);
      if ((Q * lam - rhs).cwiseAbs().maxCoeff() > 1e-9) continue;
      bool ok = true;
      for (Index c = 0; c < k; ++c)
        if (lam(c) < -1e-10) ok = false;
      if (!ok) continue;
      Vector y = Vector::Zero(m);
      for (Index c = 0; c < k; ++c) {
        const double sgn = (c > 0 && (bits & (std::uint64_t{1} << (c - 1)))) ? -1.0 : 1.0;
        y(S[static_cast<std::size_t>(c)]) += sgn * lam(c);
      }
      bool dup = false;
      for (const Vector& f : found)
        if ((f - y).cwiseAbs().maxCoeff() < 1e-9 || (f + y).cwiseAbs().maxCoeff() < 1e-9)
          dup = true;
      if (!dup) found.push_back(y);
    }
  };

  std::vector<int> S;
  std::function<void(int, Index)> rec = [&](int start, Index remaining) {
    if (!S.empty()) process_support(S);
    if (remaining == 0) return;
    for (int i = start; i < static_cast<int>(m); ++i) {
      S.push_back(i);
      rec(i + 1, remaining - 1);
      S.pop_back();
    }
  };
  rec(0, max_support);

  for (const Vector& y : found) {
    out.push_back(y);
    out.push_back(-y);
  }
  return out;
}

}  // namespace hoffman
