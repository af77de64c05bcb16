#pragma once

#include "hoffman/types.hpp"

#include <limits>

namespace hoffman {

/// min c'x  subject to  E x = f,  lower <= x <= upper.
/// Bounds may be -inf / +inf; a variable with both infinite is free.
struct LPProblem {
  Vector objective;
  Matrix equality_lhs;
  Vector equality_rhs;
  Vector lower;
  Vector upper;

  Index num_vars() const { return objective.size(); }
  Index num_rows() const { return equality_lhs.rows(); }
};

enum class LPStatus : std::uint8_t { Optimal, Infeasible, Unbounded, IterationLimit };

inline std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal:
      return "optimal";
    case LPStatus::Infeasible:
      return "infeasible";
    case LPStatus::Unbounded:
      return "unbounded";
    default:
      return "iteration-limit";
  }
}

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  double value = 0.0;
  Vector primal;  // length num_vars when Optimal
  Vector dual;    // simplex multipliers, length num_rows when Optimal
};

/// Bounded-variable two-phase primal simplex with Bland's anti-cycling rule.
/// Deterministic: identical inputs produce bitwise-identical outcomes.
/// Numerical breakdown surfaces as LPStatus::IterationLimit, never silently.
LPOutcome solve_lp(const LPProblem& p);

/// Convenience builder for LPs assembled row by row; inequality rows get
/// internally added slack variables.
class LPBuilder {
 public:
  /// Returns the index of a new variable.
  Index add_var(double lo, double up, double cost = 0.0);

  /// sum_k coeffs[k] * x[vars[k]]  = rhs
  void add_eq(const std::vector<Index>& vars, const std::vector<double>& coeffs, double rhs);
  /// sum_k coeffs[k] * x[vars[k]] <= rhs
  void add_le(const std::vector<Index>& vars, const std::vector<double>& coeffs, double rhs);

  void set_cost(Index var, double cost);

  LPProblem build() const;

  Index num_vars() const { return static_cast<Index>(lo_.size()); }

 private:
  struct Row {
    std::vector<Index> vars;
    std::vector<double> coeffs;
    double rhs;
  };
  std::vector<double> lo_, up_, cost_;
  std::vector<Row> rows_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace hoffman
