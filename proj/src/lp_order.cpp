#include "ptcomp/lp_order.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ptcomp/error.hpp"
#include "ptcomp/traversal.hpp"

namespace ptcomp {

namespace {

using lp::Constraint;
using lp::Sense;
using lp::Term;

// All-ones edges with every direct path carrying flow is always feasible
// when p <= 1; anything else means the model was built wrong.
void assert_feasibility_witness(const LpModel& model) {
  std::vector<double> witness(model.program.variable_count(), 0.0);
  for (std::size_t e = 0; e < model.edges.size(); ++e) witness[model.edge_variable(e)] = 1.0;
  for (std::size_t k = 0; k < model.paths.size(); ++k)
    if (model.paths[k].length() == 1) witness[model.path_variable(k)] = 1.0;
  if (lp::max_violation(model.program, witness) > 1e-9)
    throw std::logic_error("LP model rejects the all-edges witness");
}

}  // namespace

std::size_t LpModel::row_count(RowKind kind) const noexcept {
  return static_cast<std::size_t>(std::count(row_kinds.begin(), row_kinds.end(), kind));
}

LpModel build_lp(const Graph& g, const ProportionFunction& pf, const LpLimits& limits) {
  if (g.edge_count() > limits.max_edges)
    throw SizeError("LP ordering supports at most " + std::to_string(limits.max_edges) + " edges (graph has " +
                    std::to_string(g.edge_count()) + "); use the ec or random ordering instead");
  if (pf.t() > limits.max_t)
    throw SizeError("LP ordering supports t <= " + std::to_string(limits.max_t) +
                    "; use the ec or random ordering instead");

  LpModel model;
  model.t = pf.t();
  model.edges = g.edges();
  const std::size_t m = model.edges.size();

  SimplePathEnumerator enumerator(g.vertex_count());
  std::vector<std::vector<std::size_t>> paths_of_edge(m);
  for (std::size_t e = 0; e < m; ++e) {
    const Edge uv = model.edges[e];
    enumerator.visit(g, uv.u, uv.v, pf.t(), [&](std::span<const VertexId> p) {
      PathVariable var;
      var.endpoints = e;
      var.vertices.assign(p.begin(), p.end());
      for (std::size_t i = 0; i + 1 < p.size(); ++i) var.on_path.push_back(index_of(model.edges, Edge::of(p[i], p[i + 1])));
      paths_of_edge[e].push_back(model.paths.size());
      model.paths.push_back(std::move(var));
    });
    if (model.paths.size() > limits.max_paths)
      throw SizeError("LP relaxation needs more than " + std::to_string(limits.max_paths) +
                      " path variables; use the ec or random ordering instead");
  }

  auto& program = model.program;
  for (std::size_t e = 0; e < m; ++e) program.add_variable(1.0, 1.0);
  for (std::size_t k = 0; k < model.paths.size(); ++k) program.add_variable(0.0, 1.0);

  // f_w <= x_e for each edge on each path.
  for (std::size_t k = 0; k < model.paths.size(); ++k) {
    for (std::size_t e : model.paths[k].on_path) {
      program.rows.push_back(
          Constraint{{Term{model.path_variable(k), 1.0}, Term{model.edge_variable(e), -1.0}}, Sense::LessEqual, 0.0});
      model.row_kinds.push_back(RowKind::PathUsesEdge);
    }
  }
  // At most one path per edge carries flow.
  for (std::size_t e = 0; e < m; ++e) {
    Constraint row{{}, Sense::LessEqual, 1.0};
    for (std::size_t k : paths_of_edge[e]) row.terms.push_back({model.path_variable(k), 1.0});
    program.rows.push_back(std::move(row));
    model.row_kinds.push_back(RowKind::OnePathPerEdge);
  }
  // Neighborhood levels.
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const std::size_t deg = g.degree(u);
    if (deg == 0) continue;
    for (unsigned level = 1; level <= pf.t(); ++level) {
      Constraint row{{}, Sense::GreaterEqual, pf.at(level).to_double() * static_cast<double>(deg)};
      for (VertexId v : g.neighbors(u)) {
        const std::size_t e = index_of(model.edges, Edge::of(u, v));
        for (std::size_t k : paths_of_edge[e])
          if (model.paths[k].length() <= level) row.terms.push_back({model.path_variable(k), 1.0});
      }
      program.rows.push_back(std::move(row));
      model.row_kinds.push_back(RowKind::NeighborhoodLevel);
      model.level_rows.emplace_back(u, level);
    }
  }

  assert_feasibility_witness(model);
  return model;
}

LpSolution solve_lp(const LpModel& model) {
  const auto result = lp::solve_simplex(model.program);
  LpSolution solution;
  solution.status = result.status;
  solution.iterations = result.iterations;
  if (result.status != lp::SolveStatus::Optimal) return solution;
  solution.values = result.x;
  solution.edge_values.assign(result.x.begin(), result.x.begin() + static_cast<std::ptrdiff_t>(model.edges.size()));
  solution.objective = result.objective;
  return solution;
}

EdgeOrdering lp_order(const Graph& g, const ProportionFunction& pf, const LpLimits& limits) {
  const LpModel model = build_lp(g, pf, limits);
  const LpSolution solution = solve_lp(model);
  if (solution.status != lp::SolveStatus::Optimal)
    throw SolverError("LP relaxation not solved: " + lp::to_string(solution.status));

  // Quantise to the solver tolerance so that numerically equal scores tie
  // and fall back to the canonical edge order.
  std::vector<std::pair<long long, std::size_t>> keyed(model.edges.size());
  for (std::size_t e = 0; e < keyed.size(); ++e) keyed[e] = {std::llround(solution.edge_values[e] * 1e7), e};
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  EdgeOrdering order;
  order.kind = OrderingKind::Lp;
  order.edges.reserve(keyed.size());
  for (const auto& [key, e] : keyed) order.edges.push_back(model.edges[e]);
  return order;
}

void write_lp_text(std::ostream& out, const LpModel& model) {
  auto name = [&](std::size_t var) {
    return var < model.edges.size() ? "x" + std::to_string(var) : "f" + std::to_string(var - model.edges.size());
  };
  auto write_terms = [&](const std::vector<Term>& terms) {
    if (terms.empty()) {
      out << " 0 x0";
      return;
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const double c = terms[i].coef;
      if (i > 0 && i % 8 == 0) out << "\n  ";
      out << (c < 0 ? " - " : (i == 0 ? " " : " + "));
      if (std::abs(c) != 1.0) out << std::abs(c) << ' ';
      out << name(terms[i].var);
    }
  };

  const auto& program = model.program;
  out << "\\ neighborhood-preserving compression LP relaxation: " << model.edges.size() << " edges, "
      << model.paths.size() << " paths, t=" << model.t << "\n";
  for (std::size_t e = 0; e < model.edges.size(); ++e)
    out << "\\ x" << e << " = edge " << model.edges[e].u << ' ' << model.edges[e].v << "\n";
  out << "Minimize\n obj:";
  std::vector<Term> objective;
  for (std::size_t j = 0; j < program.variable_count(); ++j)
    if (program.cost[j] != 0.0) objective.push_back({j, program.cost[j]});
  write_terms(objective);
  out << "\nSubject To\n";

  std::size_t edge_row = 0, level_row = 0;
  std::size_t current_path = 0, within_path = 0;
  for (std::size_t r = 0; r < program.rows.size(); ++r) {
    const auto& row = program.rows[r];
    switch (model.row_kinds[r]) {
      case RowKind::PathUsesEdge: {
        while (within_path >= model.paths[current_path].on_path.size()) {
          ++current_path;
          within_path = 0;
        }
        out << " path" << current_path << "_e" << model.paths[current_path].on_path[within_path++] << ':';
        break;
      }
      case RowKind::OnePathPerEdge: out << " once" << edge_row++ << ':'; break;
      case RowKind::NeighborhoodLevel: {
        const auto [u, level] = model.level_rows[level_row++];
        out << " nbr" << u << '_' << level << ':';
        break;
      }
    }
    write_terms(row.terms);
    out << (row.sense == Sense::LessEqual ? " <= " : row.sense == Sense::GreaterEqual ? " >= " : " = ") << row.rhs
        << '\n';
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < program.variable_count(); ++j) out << " 0 <= " << name(j) << " <= " << program.upper[j] << '\n';
  out << "End\n";
}

}  // namespace ptcomp
