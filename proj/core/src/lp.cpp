#include "acload/lp.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <stdexcept>

#include "acload/errors.hpp"

namespace acload {

namespace {

constexpr double kCostTol = 1e-9;    // reduced-cost / feasibility tolerance
constexpr double kPivotTol = 1e-10;  // smallest acceptable pivot element

// Dense tableau in canonical form. `a` holds m rows of (n_total + 1) entries,
// the trailing entry being the rhs. `cost` holds the reduced-cost row with
// -objective in its trailing entry.
struct Tableau {
  std::size_t m = 0;
  std::size_t n_total = 0;
  std::vector<double> a;
  std::vector<double> cost;
  std::vector<std::size_t> basis;

  double& at(std::size_t i, std::size_t j) { return a[i * (n_total + 1) + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * (n_total + 1) + j]; }
  double& rhs(std::size_t i) { return a[i * (n_total + 1) + n_total]; }
  double rhs(std::size_t i) const { return a[i * (n_total + 1) + n_total]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const std::size_t w = n_total + 1;
    const double p = at(pr, pc);
    for (std::size_t j = 0; j < w; ++j) a[pr * w + j] /= p;
    at(pr, pc) = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr) continue;
      const double f = at(i, pc);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) a[i * w + j] -= f * a[pr * w + j];
      at(i, pc) = 0.0;
    }
    const double fc = cost[pc];
    if (fc != 0.0) {
      for (std::size_t j = 0; j < w; ++j) cost[j] -= fc * a[pr * w + j];
      cost[pc] = 0.0;
    }
    basis[pr] = pc;
  }
};

enum class IterateResult { Optimal, Unbounded };

// Bland's rule: lowest-index entering column with negative reduced cost;
// among minimum-ratio rows, the one whose basic variable has lowest index.
IterateResult run_simplex(Tableau& t, std::size_t n_active) {
  for (;;) {
    std::size_t enter = n_active;
    for (std::size_t j = 0; j < n_active; ++j) {
      if (t.cost[j] < -kCostTol) {
        enter = j;
        break;
      }
    }
    if (enter == n_active) return IterateResult::Optimal;

    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.m; ++i) {
      const double aij = t.at(i, enter);
      if (aij <= kPivotTol) continue;
      best_ratio = std::min(best_ratio, t.rhs(i) / aij);
    }
    if (!std::isfinite(best_ratio)) return IterateResult::Unbounded;

    const double tie = 1e-12 * (1.0 + std::abs(best_ratio));
    std::size_t leave = t.m;
    for (std::size_t i = 0; i < t.m; ++i) {
      const double aij = t.at(i, enter);
      if (aij <= kPivotTol) continue;
      if (t.rhs(i) / aij > best_ratio + tie) continue;
      if (leave == t.m || t.basis[i] < t.basis[leave]) leave = i;
    }
    t.pivot(leave, enter);
  }
}

// How each original variable maps onto the non-negative transformed columns.
struct VarMap {
  enum class Kind { Shifted, Mirrored, Split } kind;
  std::size_t col = 0;    // primary column
  std::size_t col2 = 0;   // negative part for Split
  double offset = 0.0;    // l for Shifted, u for Mirrored
};

void require_finite_or_unset(const std::optional<double>& v, const char* side,
                             std::size_t j) {
  if (v && !std::isfinite(*v)) {
    throw InputError(fmt::format("variable {} has non-finite {} bound", j, side));
  }
}

}  // namespace

void LinearProgram::validate() const {
  const std::size_t n = objective.size();
  if (bounds.size() != n) {
    throw InputError(fmt::format("bounds count {} does not match variable count {}",
                                 bounds.size(), n));
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw InputError("objective has non-finite coefficient");
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].coeffs.size() != n) {
      throw InputError(fmt::format("row {} has {} coefficients, expected {}", r,
                                   rows[r].coeffs.size(), n));
    }
    for (double c : rows[r].coeffs) {
      if (!std::isfinite(c)) {
        throw InputError(fmt::format("row {} has non-finite coefficient", r));
      }
    }
    if (!std::isfinite(rows[r].rhs)) {
      throw InputError(fmt::format("row {} has non-finite rhs", r));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    require_finite_or_unset(bounds[j].lower, "lower", j);
    require_finite_or_unset(bounds[j].upper, "upper", j);
    if (bounds[j].lower && bounds[j].upper && *bounds[j].lower > *bounds[j].upper) {
      throw InputError(fmt::format("variable {} has lower bound {} above upper bound {}",
                                   j, *bounds[j].lower, *bounds[j].upper));
    }
  }
}

LpSolution solve(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n_orig = lp.num_vars();

  // Shift/mirror/split every variable onto x' >= 0.
  std::vector<VarMap> vmap(n_orig);
  std::size_t n_struct = 0;
  for (std::size_t j = 0; j < n_orig; ++j) {
    const auto& b = lp.bounds[j];
    if (b.lower) {
      vmap[j] = {VarMap::Kind::Shifted, n_struct++, 0, *b.lower};
    } else if (b.upper) {
      vmap[j] = {VarMap::Kind::Mirrored, n_struct++, 0, *b.upper};
    } else {
      vmap[j] = {VarMap::Kind::Split, n_struct, n_struct + 1, 0.0};
      n_struct += 2;
    }
  }

  // Transformed rows: the original constraints plus one x' <= u - l row per
  // doubly-bounded variable.
  struct WorkRow {
    std::vector<double> coeffs;
    Relation relation;
    double rhs;
  };
  std::vector<WorkRow> work;
  work.reserve(lp.rows.size() + n_orig);
  for (const auto& row : lp.rows) {
    WorkRow w{std::vector<double>(n_struct, 0.0), row.relation, row.rhs};
    for (std::size_t j = 0; j < n_orig; ++j) {
      const double aj = row.coeffs[j];
      if (aj == 0.0) continue;
      switch (vmap[j].kind) {
        case VarMap::Kind::Shifted:
          w.coeffs[vmap[j].col] += aj;
          w.rhs -= aj * vmap[j].offset;
          break;
        case VarMap::Kind::Mirrored:
          w.coeffs[vmap[j].col] -= aj;
          w.rhs -= aj * vmap[j].offset;
          break;
        case VarMap::Kind::Split:
          w.coeffs[vmap[j].col] += aj;
          w.coeffs[vmap[j].col2] -= aj;
          break;
      }
    }
    work.push_back(std::move(w));
  }
  for (std::size_t j = 0; j < n_orig; ++j) {
    if (lp.bounds[j].lower && lp.bounds[j].upper) {
      WorkRow w{std::vector<double>(n_struct, 0.0), Relation::LessEq,
                *lp.bounds[j].upper - *lp.bounds[j].lower};
      w.coeffs[vmap[j].col] = 1.0;
      work.push_back(std::move(w));
    }
  }

  // Scale every row to unit max coefficient and orient it so rhs >= 0.
  for (auto& w : work) {
    double scale = 0.0;
    for (double c : w.coeffs) scale = std::max(scale, std::abs(c));
    if (scale > 0.0) {
      for (double& c : w.coeffs) c /= scale;
      w.rhs /= scale;
    }
    if (w.rhs < 0.0) {
      for (double& c : w.coeffs) c = -c;
      w.rhs = -w.rhs;
      if (w.relation == Relation::LessEq) {
        w.relation = Relation::GreaterEq;
      } else if (w.relation == Relation::GreaterEq) {
        w.relation = Relation::LessEq;
      }
    }
  }

  const std::size_t m = work.size();
  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (const auto& w : work) {
    if (w.relation != Relation::Equal) ++n_slack;
    if (w.relation != Relation::LessEq) ++n_art;
  }

  Tableau t;
  t.m = m;
  t.n_total = n_struct + n_slack + n_art;
  t.a.assign(m * (t.n_total + 1), 0.0);
  t.cost.assign(t.n_total + 1, 0.0);
  t.basis.assign(m, 0);

  const std::size_t first_art = n_struct + n_slack;
  std::size_t slack_col = n_struct;
  std::size_t art_col = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n_struct; ++j) t.at(i, j) = work[i].coeffs[j];
    t.rhs(i) = work[i].rhs;
    switch (work[i].relation) {
      case Relation::LessEq:
        t.at(i, slack_col) = 1.0;
        t.basis[i] = slack_col++;
        break;
      case Relation::GreaterEq:
        t.at(i, slack_col) = -1.0;
        ++slack_col;
        t.at(i, art_col) = 1.0;
        t.basis[i] = art_col++;
        break;
      case Relation::Equal:
        t.at(i, art_col) = 1.0;
        t.basis[i] = art_col++;
        break;
    }
  }

  // Phase 1: minimize the artificial total, canonicalizing the cost row
  // against the starting basis.
  if (n_art > 0) {
    for (std::size_t j = first_art; j < t.n_total; ++j) t.cost[j] = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < first_art) continue;
      for (std::size_t j = 0; j <= t.n_total; ++j) t.cost[j] -= t.a[i * (t.n_total + 1) + j];
    }
    // Entering columns exclude the artificials themselves: once one leaves
    // the basis it stays out.
    if (run_simplex(t, first_art) == IterateResult::Unbounded) {
      throw std::logic_error("phase-1 objective is bounded below by zero");
    }
    const double art_total = -t.cost[t.n_total];
    if (art_total > kCostTol) {
      return LpSolution{LpStatus::Infeasible, {}, 0.0};
    }
    // Pivot leftover artificials out of the basis; a row that offers no pivot
    // is redundant and is dropped.
    for (std::size_t i = 0; i < t.m;) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t piv = first_art;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (std::abs(t.at(i, j)) > kPivotTol) {
          piv = j;
          break;
        }
      }
      if (piv < first_art) {
        t.pivot(i, piv);
        ++i;
      } else {
        const std::size_t w = t.n_total + 1;
        t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i * w),
                  t.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * w));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        --t.m;
      }
    }
  }

  // Phase 2 over the structural and slack columns only.
  std::fill(t.cost.begin(), t.cost.end(), 0.0);
  for (std::size_t j = 0; j < n_orig; ++j) {
    const double cj = lp.objective[j];
    switch (vmap[j].kind) {
      case VarMap::Kind::Shifted:
        t.cost[vmap[j].col] += cj;
        break;
      case VarMap::Kind::Mirrored:
        t.cost[vmap[j].col] -= cj;
        break;
      case VarMap::Kind::Split:
        t.cost[vmap[j].col] += cj;
        t.cost[vmap[j].col2] -= cj;
        break;
    }
  }
  for (std::size_t i = 0; i < t.m; ++i) {
    const double cb = t.cost[t.basis[i]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j <= t.n_total; ++j) {
      t.cost[j] -= cb * t.a[i * (t.n_total + 1) + j];
    }
    t.cost[t.basis[i]] = 0.0;
  }
  if (run_simplex(t, first_art) == IterateResult::Unbounded) {
    return LpSolution{LpStatus::Unbounded, {}, 0.0};
  }

  std::vector<double> xprime(first_art, 0.0);
  for (std::size_t i = 0; i < t.m; ++i) {
    if (t.basis[i] < first_art) xprime[t.basis[i]] = std::max(0.0, t.rhs(i));
  }

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.resize(n_orig);
  for (std::size_t j = 0; j < n_orig; ++j) {
    switch (vmap[j].kind) {
      case VarMap::Kind::Shifted:
        sol.x[j] = vmap[j].offset + xprime[vmap[j].col];
        break;
      case VarMap::Kind::Mirrored:
        sol.x[j] = vmap[j].offset - xprime[vmap[j].col];
        break;
      case VarMap::Kind::Split:
        sol.x[j] = xprime[vmap[j].col] - xprime[vmap[j].col2];
        break;
    }
    // Squash bound overshoot from pivot round-off.
    const auto& b = lp.bounds[j];
    if (b.lower && sol.x[j] < *b.lower) sol.x[j] = *b.lower;
    if (b.upper && sol.x[j] > *b.upper) sol.x[j] = *b.upper;
  }
  double obj = 0.0;
  for (std::size_t j = 0; j < n_orig; ++j) obj += lp.objective[j] * sol.x[j];
  sol.objective_value = obj;

  // Internal guard: an Optimal answer must actually satisfy the program.
  for (std::size_t r = 0; r < lp.rows.size(); ++r) {
    const auto& row = lp.rows[r];
    double lhs = 0.0;
    double norm = 1.0;
    for (std::size_t j = 0; j < n_orig; ++j) {
      lhs += row.coeffs[j] * sol.x[j];
      norm = std::max(norm, std::abs(row.coeffs[j]));
    }
    const double slack = lhs - row.rhs;
    const bool ok = (row.relation == Relation::LessEq && slack <= 1e-6 * norm) ||
                    (row.relation == Relation::GreaterEq && slack >= -1e-6 * norm) ||
                    (row.relation == Relation::Equal && std::abs(slack) <= 1e-6 * norm);
    if (!ok) {
      throw std::logic_error(
          fmt::format("simplex returned an infeasible point: row {} residual {}", r, slack));
    }
  }
  return sol;
}

}  // namespace acload
