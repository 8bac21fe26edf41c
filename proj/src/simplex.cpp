#include "ptcomp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ptcomp/simd/kernels.hpp"

namespace ptcomp::lp {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

namespace {

constexpr double kPivotTolerance = 1e-9;
constexpr double kTieTolerance = 1e-12;
// Consecutive degenerate pivots before pricing falls back to Bland's rule.
constexpr std::size_t kDegenerateLimit = 50;

// Tableau in "dictionary" form: for row r, basic[r] = beta[r] - sum_c T[r][c] * (x_c - value_c)
// relative to the current nonbasic values. Column c holds nonbasic variable colvar[c].
class Tableau {
 public:
  Tableau(const LinearProgram& program, const SimplexOptions& options) : options_(options) {
    const std::size_t n = program.variable_count();
    const std::size_t m = program.rows.size();
    rows_ = m;

    lower_.assign(n, 0.0);
    upper_ = program.upper;

    // Normalise every row so the starting basis (slack or artificial) is
    // feasible at x = 0, and count the surplus columns needed.
    struct Shape {
      double sign;
      bool artificial;
      bool surplus;
    };
    std::vector<Shape> shapes(m);
    std::size_t surplus_count = 0;
    for (std::size_t r = 0; r < m; ++r) {
      const auto& row = program.rows[r];
      Shape s{1.0, false, false};
      switch (row.sense) {
        case Sense::LessEqual:
          if (row.rhs >= 0) s = {1.0, false, false};
          else s = {-1.0, true, true};  // -a x >= -rhs > 0
          break;
        case Sense::GreaterEqual:
          if (row.rhs <= 0) s = {-1.0, false, false};  // -a x <= -rhs
          else s = {1.0, true, true};
          break;
        case Sense::Equal:
          s = {row.rhs >= 0 ? 1.0 : -1.0, true, false};
          break;
      }
      shapes[r] = s;
      if (s.surplus) ++surplus_count;
    }

    cols_ = n + surplus_count;
    table_.assign(rows_ * cols_, 0.0);
    colvar_.resize(cols_);
    for (std::size_t j = 0; j < n; ++j) colvar_[j] = j;
    basic_.resize(rows_);
    beta_.resize(rows_);

    // Variable ids: structurals [0,n), one logical per row [n, n+m), then
    // artificials. Logicals of artificial rows are surplus variables.
    const std::size_t logical_base = n;
    const std::size_t artificial_base = n + m;
    lower_.resize(artificial_base, 0.0);
    upper_.resize(artificial_base, kInfinity);
    std::size_t surplus_col = n;
    for (std::size_t r = 0; r < m; ++r) {
      const auto& row = program.rows[r];
      const Shape& s = shapes[r];
      double* t = &table_[r * cols_];
      for (const Term& term : row.terms) t[term.var] += s.sign * term.coef;
      beta_[r] = s.sign * row.rhs;
      if (!s.artificial) {
        basic_[r] = logical_base + r;
        continue;
      }
      const std::size_t art = lower_.size();
      lower_.push_back(0.0);
      upper_.push_back(kInfinity);
      basic_[r] = art;
      artificial_.push_back(art);
      if (s.surplus) {
        // a x - s = rhs  =>  art = rhs - a x + s
        t[surplus_col] = -1.0;
        colvar_[surplus_col++] = logical_base + r;
      } else {
        upper_[logical_base + r] = 0.0;  // equality rows have no slack
      }
    }
    at_upper_.assign(lower_.size(), 0);
    is_artificial_.assign(lower_.size(), 0);
    for (std::size_t a : artificial_) is_artificial_[a] = 1;
    reduced_.assign(cols_, 0.0);
  }

  SimplexResult solve(const LinearProgram& program) {
    SimplexResult result;
    const std::size_t n = program.variable_count();

    if (!artificial_.empty()) {
      std::vector<double> phase1(lower_.size(), 0.0);
      for (std::size_t a : artificial_) phase1[a] = 1.0;
      price(phase1);
      const auto status = iterate(result.iterations);
      if (status != SolveStatus::Optimal) {
        result.status = status;
        return result;
      }
      double infeasibility = 0.0;
      for (std::size_t r = 0; r < rows_; ++r)
        if (is_artificial_[basic_[r]]) infeasibility += beta_[r];
      if (infeasibility > options_.tolerance) {
        result.status = SolveStatus::Infeasible;
        return result;
      }
      // Artificials may stay basic at zero but can never move again.
      for (std::size_t a : artificial_) upper_[a] = 0.0;
    }

    std::vector<double> phase2(lower_.size(), 0.0);
    std::copy(program.cost.begin(), program.cost.end(), phase2.begin());
    price(phase2);
    result.status = iterate(result.iterations);
    if (result.status != SolveStatus::Optimal) return result;

    std::vector<double> value(lower_.size(), 0.0);
    for (std::size_t c = 0; c < cols_; ++c) value[colvar_[c]] = nonbasic_value(colvar_[c]);
    for (std::size_t r = 0; r < rows_; ++r) value[basic_[r]] = beta_[r];
    result.x.assign(value.begin(), value.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t j = 0; j < n; ++j) result.x[j] = std::clamp(result.x[j], lower_[j], upper_[j]);
    result.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) result.objective += program.cost[j] * result.x[j];
    return result;
  }

 private:
  double nonbasic_value(std::size_t var) const { return at_upper_[var] ? upper_[var] : lower_[var]; }

  // Reduced costs d_c = cost(colvar_c) - sum_r cost(basic_r) * T[r][c].
  void price(const std::vector<double>& cost) {
    for (std::size_t c = 0; c < cols_; ++c) reduced_[c] = cost[colvar_[c]];
    for (std::size_t r = 0; r < rows_; ++r) {
      const double cb = cost[basic_[r]];
      if (cb == 0.0) continue;
      simd::axpy(-cb, std::span<const double>(&table_[r * cols_], cols_), reduced_);
    }
  }

  SolveStatus iterate(std::size_t& iterations) {
    const double tol = options_.tolerance;
    while (true) {
      if (iterations >= options_.max_iterations) return SolveStatus::IterationLimit;

      // Dantzig picks the largest improving reduced cost; Bland picks the
      // eligible variable with the smallest id and cannot cycle.
      const bool bland = options_.pricing == Pricing::Bland || degenerate_run_ >= kDegenerateLimit;
      std::size_t entering = cols_;
      std::size_t entering_var = SIZE_MAX;
      double best = 0.0;
      for (std::size_t c = 0; c < cols_; ++c) {
        const std::size_t var = colvar_[c];
        if (upper_[var] - lower_[var] <= 0.0) continue;
        const double gain = at_upper_[var] ? reduced_[c] : -reduced_[c];
        if (gain <= tol) continue;
        if (bland ? var < entering_var : (gain > best || (gain == best && var < entering_var))) {
          entering = c;
          entering_var = var;
          best = gain;
        }
      }
      if (entering == cols_) return SolveStatus::Optimal;
      ++iterations;

      const double dir = at_upper_[entering_var] ? -1.0 : 1.0;
      double step = upper_[entering_var] - lower_[entering_var];
      std::size_t leave_row = rows_;
      std::size_t leave_var = SIZE_MAX;
      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = table_[r * cols_ + entering];
        if (std::abs(a) <= kPivotTolerance) continue;
        const double delta = -a * dir;  // change of basic r per unit step
        const std::size_t var = basic_[r];
        double limit;
        if (delta < 0) {
          limit = (beta_[r] - lower_[var]) / -delta;
        } else {
          if (upper_[var] == kInfinity) continue;
          limit = (upper_[var] - beta_[r]) / delta;
        }
        limit = std::max(limit, 0.0);
        if (limit < step - kTieTolerance || (leave_row != rows_ && limit <= step + kTieTolerance && var < leave_var)) {
          step = limit;
          leave_row = r;
          leave_var = var;
        }
      }
      if (step == kInfinity) return SolveStatus::Unbounded;
      degenerate_run_ = step <= kTieTolerance ? degenerate_run_ + 1 : 0;

      for (std::size_t r = 0; r < rows_; ++r) {
        const double a = table_[r * cols_ + entering];
        if (a != 0.0) beta_[r] -= a * dir * step;
      }

      if (leave_row == rows_) {
        at_upper_[entering_var] = at_upper_[entering_var] ? 0 : 1;
        continue;
      }

      const double delta_leave = -table_[leave_row * cols_ + entering] * dir;
      at_upper_[leave_var] = delta_leave > 0 ? 1 : 0;
      const double entering_value = nonbasic_value(entering_var) + dir * step;
      pivot(leave_row, entering);
      beta_[leave_row] = entering_value;
      basic_[leave_row] = entering_var;
      colvar_[entering] = leave_var;
      at_upper_[entering_var] = 0;
    }
  }

  // Exchanges basic row p with nonbasic column q in the coefficient block and
  // the reduced-cost row.
  void pivot(std::size_t p, std::size_t q) {
    double* prow = &table_[p * cols_];
    const double piv = prow[q];
    const double inv = 1.0 / piv;
    for (std::size_t c = 0; c < cols_; ++c) prow[c] *= inv;
    prow[q] = inv;

    // Restrict the row updates to the pivot row's nonzero span.
    std::size_t lo = 0, hi = cols_;
    while (lo < hi && prow[lo] == 0.0) ++lo;
    while (hi > lo && prow[hi - 1] == 0.0) --hi;
    const std::span<const double> pivot_span(prow + lo, hi - lo);

    auto eliminate = [&](double* row) {
      const double f = row[q];
      if (f == 0.0) return;
      simd::axpy(-f, pivot_span, std::span<double>(row + lo, hi - lo));
      row[q] = -f * inv;
    };
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != p) eliminate(&table_[r * cols_]);
    eliminate(reduced_.data());
  }

  SimplexOptions options_;
  std::size_t degenerate_run_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> table_;
  std::vector<double> reduced_;
  std::vector<double> beta_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> colvar_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::uint8_t> at_upper_;
  std::vector<std::uint8_t> is_artificial_;
  std::vector<std::size_t> artificial_;
};

}  // namespace

SimplexResult solve_simplex(const LinearProgram& program, const SimplexOptions& options) {
  Tableau tableau(program, options);
  return tableau.solve(program);
}

double max_violation(const LinearProgram& program, std::span<const double> x) {
  double worst = 0.0;
  for (std::size_t j = 0; j < program.variable_count(); ++j) {
    worst = std::max(worst, -x[j]);
    worst = std::max(worst, x[j] - program.upper[j]);
  }
  for (const auto& row : program.rows) {
    double lhs = 0.0;
    for (const Term& t : row.terms) lhs += t.coef * x[t.var];
    switch (row.sense) {
      case Sense::LessEqual: worst = std::max(worst, lhs - row.rhs); break;
      case Sense::GreaterEqual: worst = std::max(worst, row.rhs - lhs); break;
      case Sense::Equal: worst = std::max(worst, std::abs(lhs - row.rhs)); break;
    }
  }
  return worst;
}

}  // namespace ptcomp::lp
