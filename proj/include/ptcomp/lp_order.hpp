#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ptcomp/graph.hpp"
#include "ptcomp/ordering.hpp"
#include "ptcomp/proportion.hpp"
#include "ptcomp/simplex.hpp"

namespace ptcomp {

// Size guards for building the relaxed program. Path variables grow as
// |V| b^t, so the program is only practical on small graphs.
struct LpLimits {
  std::size_t max_edges = 5000;
  unsigned max_t = 3;
  std::size_t max_paths = 3000;  // the dense tableau grows quadratically in this
};

// One f_w variable: a simple path of length <= t joining the endpoints of
// an edge.
struct PathVariable {
  std::size_t endpoints;               // index of the edge whose endpoints the path joins
  std::vector<VertexId> vertices;      // path vertex sequence
  std::vector<std::size_t> on_path;    // indices of the edges the path uses
  std::size_t length() const noexcept { return on_path.size(); }
};

enum class RowKind { PathUsesEdge, OnePathPerEdge, NeighborhoodLevel };

// The relaxed neighborhood-preservation program:
//   minimize   sum_e x_e
//   subject to f_w <= x_e                       for every path w and edge e on w
//              sum_{w joins u,v} f_w <= 1        for every edge uv
//              sum_{v in N(u)} sum_{|w| <= i} f_w >= p(i)|N(u)|
//                                               for every non-isolated u, i = 1..t
//              0 <= x, f <= 1
// Variables 0..|E|-1 are the x_e (in canonical edge order); the f_w follow.
struct LpModel {
  std::vector<Edge> edges;
  std::vector<PathVariable> paths;
  std::vector<RowKind> row_kinds;
  std::vector<std::pair<VertexId, unsigned>> level_rows;  // (u, i) for each NeighborhoodLevel row, in order
  lp::LinearProgram program;
  unsigned t = 1;

  std::size_t edge_variable(std::size_t edge) const noexcept { return edge; }
  std::size_t path_variable(std::size_t path) const noexcept { return edges.size() + path; }
  std::size_t row_count(RowKind kind) const noexcept;
};

struct LpSolution {
  lp::SolveStatus status = lp::SolveStatus::Infeasible;
  std::vector<double> edge_values;  // x_e, canonical edge order
  std::vector<double> values;       // every variable
  double objective = 0.0;
  std::size_t iterations = 0;
};

// Throws SizeError when |E| or t exceeds limits.
LpModel build_lp(const Graph& g, const ProportionFunction& pf, const LpLimits& limits = {});

// Solves the relaxation. Never throws on infeasibility; check status.
LpSolution solve_lp(const LpModel& model);

// Edges by descending x_e, ties by canonical edge. Throws SizeError from
// build_lp or SolverError if the relaxation is not solved to optimality.
EdgeOrdering lp_order(const Graph& g, const ProportionFunction& pf, const LpLimits& limits = {});

// CPLEX-style LP text (Minimize / Subject To / Bounds / End), with x<e> and
// f<k> variable names and row names path<k>_e<e>, once<e>, nbr<u>_<i>.
void write_lp_text(std::ostream& out, const LpModel& model);

}  // namespace ptcomp
