#include "hoffman/simplex.hpp"

#include <Eigen/LU>

#include <cmath>
#include <stdexcept>

namespace hoffman {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kRatioTieTol = 1e-9;

enum class VarStatus : std::uint8_t { Basic, AtLower, AtUpper, FreeZero };

struct Tableau {
  Matrix E;   // k x N
  Vector f;   // k
  Vector c;   // N, current phase cost
  Vector lo, up;
  Vector x;
  std::vector<Index> basis;       // size k, column indices
  std::vector<VarStatus> status;  // size N
};

// Runs the simplex loop on the current basis until optimality, unboundedness,
// or the iteration cap. Basic values are recomputed from the factorization at
// every iteration, so rounding in the updates cannot accumulate.
LPStatus run_simplex(Tableau& t, Index max_iter) {
  const Index k = t.E.rows();
  const Index n = t.E.cols();
  Matrix B(k, k);

  for (Index iter = 0; iter < max_iter; ++iter) {
    for (Index i = 0; i < k; ++i) B.col(i) = t.E.col(t.basis[i]);
    Eigen::PartialPivLU<Matrix> lu(B);

    Vector en_xn = Vector::Zero(k);
    for (Index j = 0; j < n; ++j)
      if (t.status[j] != VarStatus::Basic && t.x(j) != 0.0) en_xn += t.E.col(j) * t.x(j);
    const Vector xB = lu.solve(t.f - en_xn);
    for (Index i = 0; i < k; ++i) t.x(t.basis[i]) = xB(i);

    Vector cB(k);
    for (Index i = 0; i < k; ++i) cB(i) = t.c(t.basis[i]);
    const Vector y = lu.transpose().solve(cB);

    // Bland: smallest eligible index enters.
    Index enter = -1;
    double sigma = 0.0;  // +1 entering increases, -1 decreases
    for (Index j = 0; j < n; ++j) {
      if (t.status[j] == VarStatus::Basic) continue;
      const double d = t.c(j) - y.dot(t.E.col(j));
      if (t.status[j] == VarStatus::AtLower && d < -kPivotTol) {
        enter = j;
        sigma = +1.0;
        break;
      }
      if (t.status[j] == VarStatus::AtUpper && d > kPivotTol) {
        enter = j;
        sigma = -1.0;
        break;
      }
      if (t.status[j] == VarStatus::FreeZero && std::abs(d) > kPivotTol) {
        enter = j;
        sigma = d < 0.0 ? +1.0 : -1.0;
        break;
      }
    }
    if (enter < 0) return LPStatus::Optimal;

    const Vector w = lu.solve(t.E.col(enter));

    // Ratio test over the basic variables, Bland tie-break on variable index.
    double step = kInf;
    Index leave_pos = -1;
    int leave_to = 0;
    for (Index i = 0; i < k; ++i) {
      const double delta = sigma * w(i);  // x_basis[i] moves by -delta per unit step
      const Index bj = t.basis[i];
      double room;
      int to;
      if (delta > kPivotTol) {
        if (t.lo(bj) == -kInf) continue;
        room = (t.x(bj) - t.lo(bj)) / delta;
        to = -1;
      } else if (delta < -kPivotTol) {
        if (t.up(bj) == kInf) continue;
        room = (t.up(bj) - t.x(bj)) / (-delta);
        to = +1;
      } else {
        continue;
      }
      if (room < 0.0) room = 0.0;
      if (room < step - kRatioTieTol) {
        step = room;
        leave_pos = i;
        leave_to = to;
      } else if (room < step + kRatioTieTol && leave_pos >= 0 && bj < t.basis[leave_pos]) {
        step = std::min(step, room);
        leave_pos = i;
        leave_to = to;
      }
    }

    double own_range = kInf;
    if (sigma > 0.0 && t.up(enter) != kInf) own_range = t.up(enter) - t.x(enter);
    if (sigma < 0.0 && t.lo(enter) != -kInf) own_range = t.x(enter) - t.lo(enter);

    if (own_range <= step + kRatioTieTol) {
      if (own_range == kInf) return LPStatus::Unbounded;
      // Bound flip, basis unchanged.
      for (Index i = 0; i < k; ++i) t.x(t.basis[i]) -= sigma * w(i) * own_range;
      t.x(enter) += sigma * own_range;
      t.status[enter] = sigma > 0.0 ? VarStatus::AtUpper : VarStatus::AtLower;
      continue;
    }
    if (leave_pos < 0) return LPStatus::Unbounded;

    const Index leave = t.basis[leave_pos];
    for (Index i = 0; i < k; ++i) t.x(t.basis[i]) -= sigma * w(i) * step;
    t.x(enter) += sigma * step;
    t.x(leave) = leave_to < 0 ? t.lo(leave) : t.up(leave);
    t.status[leave] = leave_to < 0 ? VarStatus::AtLower : VarStatus::AtUpper;
    t.basis[leave_pos] = enter;
    t.status[enter] = VarStatus::Basic;
  }
  return LPStatus::IterationLimit;
}

}  // namespace

LPOutcome solve_lp(const LPProblem& p) {
  const Index n = p.num_vars();
  const Index k = p.num_rows();
  if (p.equality_lhs.cols() != n || p.equality_rhs.size() != k || p.lower.size() != n ||
      p.upper.size() != n)
    throw std::invalid_argument("solve_lp: inconsistent dimensions");
  for (Index j = 0; j < n; ++j)
    if (p.lower(j) > p.upper(j)) throw std::invalid_argument("solve_lp: lower > upper");

  LPOutcome out;
  if (k == 0) {
    // Pure bound minimization.
    out.status = LPStatus::Optimal;
    out.primal = Vector::Zero(n);
    out.dual = Vector(0);
    for (Index j = 0; j < n; ++j) {
      const double c = p.objective(j);
      if (c > 0.0) {
        if (p.lower(j) == -kInf) return LPOutcome{LPStatus::Unbounded, 0.0, {}, {}};
        out.primal(j) = p.lower(j);
      } else if (c < 0.0) {
        if (p.upper(j) == kInf) return LPOutcome{LPStatus::Unbounded, 0.0, {}, {}};
        out.primal(j) = p.upper(j);
      } else {
        out.primal(j) = p.lower(j) != -kInf ? p.lower(j) : (p.upper(j) != kInf ? p.upper(j) : 0.0);
      }
    }
    out.value = p.objective.dot(out.primal);
    return out;
  }

  Tableau t;
  const Index total = n + k;
  t.E = Matrix::Zero(k, total);
  t.E.leftCols(n) = p.equality_lhs;
  t.f = p.equality_rhs;
  t.lo = Vector(total);
  t.up = Vector(total);
  t.x = Vector::Zero(total);
  t.status.assign(static_cast<std::size_t>(total), VarStatus::AtLower);

  for (Index j = 0; j < n; ++j) {
    t.lo(j) = p.lower(j);
    t.up(j) = p.upper(j);
    if (p.lower(j) != -kInf) {
      t.x(j) = p.lower(j);
      t.status[j] = VarStatus::AtLower;
    } else if (p.upper(j) != kInf) {
      t.x(j) = p.upper(j);
      t.status[j] = VarStatus::AtUpper;
    } else {
      t.x(j) = 0.0;
      t.status[j] = VarStatus::FreeZero;
    }
  }

  // Artificial variables carry the initial residual with nonnegative values.
  Vector r = p.equality_rhs - t.E.leftCols(n) * t.x.head(n);
  t.basis.resize(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) {
    const Index aj = n + i;
    t.E(i, aj) = r(i) >= 0.0 ? 1.0 : -1.0;
    t.lo(aj) = 0.0;
    t.up(aj) = kInf;
    t.x(aj) = std::abs(r(i));
    t.status[aj] = VarStatus::Basic;
    t.basis[static_cast<std::size_t>(i)] = aj;
  }

  const Index max_iter = 1000 + 200 * total;

  // Phase 1: minimize the artificial mass.
  t.c = Vector::Zero(total);
  t.c.tail(k).setOnes();
  LPStatus s1 = run_simplex(t, max_iter);
  if (s1 == LPStatus::Unbounded) s1 = LPStatus::IterationLimit;
  if (s1 == LPStatus::IterationLimit) {
    out.status = LPStatus::IterationLimit;
    return out;
  }
  const double scale = 1.0 + p.equality_rhs.cwiseAbs().maxCoeff();
  double art_mass = 0.0;
  for (Index i = 0; i < k; ++i) art_mass += std::abs(t.x(n + i));
  if (art_mass > kFeasTol * scale) {
    out.status = LPStatus::Infeasible;
    return out;
  }

  // Phase 2: pin artificials at zero and optimize the real objective.
  for (Index i = 0; i < k; ++i) t.up(n + i) = 0.0;
  t.c.setZero();
  t.c.head(n) = p.objective;
  const LPStatus s2 = run_simplex(t, max_iter);
  if (s2 == LPStatus::IterationLimit) {
    out.status = LPStatus::IterationLimit;
    return out;
  }
  if (s2 == LPStatus::Unbounded) {
    out.status = LPStatus::Unbounded;
    return out;
  }

  out.primal = t.x.head(n);
  out.value = p.objective.dot(out.primal);

  // Duals from the final basis.
  Matrix B(k, k);
  for (Index i = 0; i < k; ++i) B.col(i) = t.E.col(t.basis[i]);
  Vector cB(k);
  for (Index i = 0; i < k; ++i) cB(i) = t.c(t.basis[i]);
  Eigen::PartialPivLU<Matrix> lu(B);
  out.dual = lu.transpose().solve(cB);

  // Validate the certificate pair; a violation is reported, never hidden.
  const double feas_resid =
      (p.equality_lhs * out.primal - p.equality_rhs).cwiseAbs().maxCoeff();
  double dual_value = out.dual.dot(p.equality_rhs);
  for (Index j = 0; j < n; ++j) {
    if (t.status[j] == VarStatus::Basic) continue;
    const double d = p.objective(j) - out.dual.dot(t.E.col(j).head(k));
    if (t.status[j] == VarStatus::AtLower)
      dual_value += d * p.lower(j);
    else if (t.status[j] == VarStatus::AtUpper)
      dual_value += d * p.upper(j);
  }
  const double obj_scale = 1.0 + std::abs(out.value);
  if (feas_resid > kFeasTol * scale || std::abs(dual_value - out.value) > kGapTol * obj_scale) {
    out.status = LPStatus::IterationLimit;
    return out;
  }

  out.status = LPStatus::Optimal;
  return out;
}

Index LPBuilder::add_var(double lo, double up, double cost) {
  lo_.push_back(lo);
  up_.push_back(up);
  cost_.push_back(cost);
  return static_cast<Index>(lo_.size()) - 1;
}

void LPBuilder::add_eq(const std::vector<Index>& vars, const std::vector<double>& coeffs,
                       double rhs) {
  if (vars.size() != coeffs.size()) throw std::invalid_argument("LPBuilder: row size mismatch");
  rows_.push_back(Row{vars, coeffs, rhs});
}

void LPBuilder::add_le(const std::vector<Index>& vars, const std::vector<double>& coeffs,
                       double rhs) {
  Row row{vars, coeffs, rhs};
  row.vars.push_back(add_var(0.0, kInf));
  row.coeffs.push_back(1.0);
  rows_.push_back(std::move(row));
}

void LPBuilder::set_cost(Index var, double cost) { cost_.at(static_cast<std::size_t>(var)) = cost; }

LPProblem LPBuilder::build() const {
  LPProblem p;
  const Index n = num_vars();
  const Index k = static_cast<Index>(rows_.size());
  p.objective = Eigen::Map<const Vector>(cost_.data(), n);
  p.lower = Eigen::Map<const Vector>(lo_.data(), n);
  p.upper = Eigen::Map<const Vector>(up_.data(), n);
  p.equality_lhs = Matrix::Zero(k, n);
  p.equality_rhs = Vector::Zero(k);
  for (Index i = 0; i < k; ++i) {
    const Row& row = rows_[static_cast<std::size_t>(i)];
    for (std::size_t m = 0; m < row.vars.size(); ++m)
      p.equality_lhs(i, row.vars[m]) += row.coeffs[m];
    p.equality_rhs(i) = row.rhs;
  }
  return p;
}

}  // namespace hoffman
