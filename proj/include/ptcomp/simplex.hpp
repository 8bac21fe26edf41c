#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace ptcomp::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Term {
  std::size_t var;
  double coef;
};

struct Constraint {
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;
};

// minimize cost·x subject to rows, 0 <= x <= upper.
struct LinearProgram {
  std::vector<double> cost;
  std::vector<double> upper;
  std::vector<Constraint> rows;

  std::size_t variable_count() const noexcept { return cost.size(); }
  std::size_t add_variable(double objective, double upper_bound) {
    cost.push_back(objective);
    upper.push_back(upper_bound);
    return cost.size() - 1;
  }
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

std::string to_string(SolveStatus status);

// Dantzig prices by the largest reduced cost and switches to Bland's rule
// after a run of degenerate pivots; Bland uses the smallest-index rule
// throughout.
enum class Pricing { Dantzig, Bland };

struct SimplexOptions {
  double tolerance = 1e-7;
  Pricing pricing = Pricing::Dantzig;
  std::size_t max_iterations = 10'000'000;
};

struct SimplexResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
  std::size_t iterations = 0;
};

// Two-phase bounded-variable primal simplex on a dense tableau. Ties in the
// ratio test go to the smallest variable id. Upper bounds are handled
// implicitly (nonbasic variables sit at either bound), so only the
// constraint rows occupy tableau rows. Deterministic for a fixed input.
SimplexResult solve_simplex(const LinearProgram& program, const SimplexOptions& options = {});

// Largest amount by which x violates any row or bound of program.
double max_violation(const LinearProgram& program, std::span<const double> x);

}  // namespace ptcomp::lp
