#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace acload {

enum class Relation { LessEq, GreaterEq, Equal };

struct ConstraintRow {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEq;
  double rhs = 0.0;
};

/// Per-variable bounds; an unset side is unbounded.
struct VariableBounds {
  std::optional<double> lower;
  std::optional<double> upper;
};

/// Dense minimization LP:  min c.x  s.t. rows, bounds.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<ConstraintRow> rows;
  std::vector<VariableBounds> bounds;  // size must equal objective size

  std::size_t num_vars() const { return objective.size(); }
  void validate() const;  // throws InputError on dimension mismatch or lower > upper
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;         // populated iff Optimal
  double objective_value = 0.0;  // valid iff Optimal
};

/// Two-phase primal simplex on a dense tableau with Bland's rule, so
/// degenerate optima resolve deterministically. Feasibility and reduced-cost
/// tolerance 1e-9 after row scaling, pivot threshold 1e-10.
LpSolution solve(const LinearProgram& lp);

}  // namespace acload
