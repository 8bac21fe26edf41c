#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "ptcomp/compressor.hpp"
#include "ptcomp/datagen.hpp"
#include "ptcomp/error.hpp"
#include "ptcomp/eval.hpp"
#include "ptcomp/lp_order.hpp"
#include "ptcomp/random.hpp"

using namespace ptcomp;

namespace {

ProportionFunction pf_of(std::initializer_list<Rational> values) { return ProportionFunction(std::vector<Rational>(values)); }

const Graph kSingle = Graph::from_edges(2, std::vector<Edge>{{0, 1}});

}  // namespace

TEST_CASE("model sizes") {
  SUBCASE("single edge") {
    auto m = build_lp(kSingle, pf_of({Rational(1)}));
    CHECK(m.program.variable_count() == 2);
    CHECK(m.paths.size() == 1);
    CHECK(m.row_count(RowKind::PathUsesEdge) == 1);
    CHECK(m.row_count(RowKind::OnePathPerEdge) == 1);
    CHECK(m.row_count(RowKind::NeighborhoodLevel) == 2);
    CHECK(m.program.upper == std::vector<double>{1, 1});
  }
  SUBCASE("triangle with t = 2") {
    auto m = build_lp(builtin("triangle"), pf_of({Rational(0), Rational(1)}));
    CHECK(m.edges.size() == 3);
    CHECK(m.paths.size() == 6);
    // 3 direct paths use one edge each, 3 detours use two.
    CHECK(m.row_count(RowKind::PathUsesEdge) == 9);
    CHECK(m.row_count(RowKind::OnePathPerEdge) == 3);
    CHECK(m.row_count(RowKind::NeighborhoodLevel) == 6);
  }
  SUBCASE("path with t = 1") {
    auto m = build_lp(builtin("path3"), pf_of({Rational(1)}));
    CHECK(m.edges.size() == 2);
    CHECK(m.paths.size() == 2);
    CHECK(m.row_count(RowKind::NeighborhoodLevel) == 3);
  }
  SUBCASE("isolated vertices contribute no level rows") {
    auto m = build_lp(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), pf_of({Rational(1)}));
    CHECK(m.row_count(RowKind::NeighborhoodLevel) == 2);
  }
  SUBCASE("size guards") {
    LpLimits tight;
    tight.max_edges = 2;
    CHECK_THROWS_AS(build_lp(builtin("triangle"), pf_of({Rational(1)}), tight), SizeError);
    CHECK_THROWS_AS(build_lp(kSingle, pf_of({Rational(0), Rational(0), Rational(0), Rational(1)})), SizeError);
    LpLimits few_paths;
    few_paths.max_paths = 5;
    CHECK_THROWS_AS(build_lp(builtin("triangle"), pf_of({Rational(0), Rational(1)}), few_paths), SizeError);
    CHECK_NOTHROW(build_lp(builtin("triangle"), pf_of({Rational(1)}), few_paths));
  }
}

TEST_CASE("path variables agree with enumeration") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(7, 0.5, rng);
    auto m = build_lp(g, pf_of({Rational(1, 2), Rational(1)}));
    std::size_t expected = 0;
    for (const Edge& e : g.edges()) expected += enumerate_simple_paths(g, e.u, e.v, 2).size();
    CHECK(m.paths.size() == expected);
    std::size_t uses = 0;
    for (const auto& p : m.paths) uses += p.length();
    CHECK(m.row_count(RowKind::PathUsesEdge) == uses);
  }
}

TEST_CASE("solve examples") {
  SUBCASE("single edge is forced") {
    auto s = solve_lp(build_lp(kSingle, pf_of({Rational(1)})));
    REQUIRE(s.status == lp::SolveStatus::Optimal);
    CHECK(std::abs(s.edge_values[0] - 1.0) <= 1e-7);
    CHECK(s.objective == doctest::Approx(1));
  }
  SUBCASE("triangle with p(1) = 1") {
    auto s = solve_lp(build_lp(builtin("triangle"), pf_of({Rational(1)})));
    REQUIRE(s.status == lp::SolveStatus::Optimal);
    for (double x : s.edge_values) CHECK(x == doctest::Approx(1));
    CHECK(s.objective == doctest::Approx(3));
    CHECK(lp_order(builtin("triangle"), pf_of({Rational(1)})).edges == builtin("triangle").edges());
  }
  SUBCASE("triangle with p = (0, 1) is bracketed") {
    auto s = solve_lp(build_lp(builtin("triangle"), pf_of({Rational(0), Rational(1)})));
    REQUIRE(s.status == lp::SolveStatus::Optimal);
    CHECK(s.objective <= 2 + 1e-7);
    CHECK(s.objective >= -1e-7);
  }
  SUBCASE("single edge order") {
    auto o = lp_order(kSingle, pf_of({Rational(1, 2)}));
    CHECK(o.edges == std::vector<Edge>{{0, 1}});
    CHECK(o.kind == OrderingKind::Lp);
  }
}

TEST_CASE("relaxation bound on small graphs") {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 4);
    auto g = oracle::random_graph(n, 0.3 + 0.5 * uniform_unit(rng), rng);
    if (g.edge_count() == 0 || g.edge_count() > 10) continue;
    auto pf = oracle::random_pf(1 + static_cast<unsigned>(uniform_below(rng, 3)), rng);
    auto model = build_lp(g, pf);
    auto s = solve_lp(model);
    REQUIRE(s.status == lp::SolveStatus::Optimal);
    CHECK(lp::max_violation(model.program, s.values) <= 1e-7);
    const auto optimum = oracle::min_compression(n, g.edges(), pf);
    CHECK(s.objective <= static_cast<double>(optimum) + 1e-7);
    auto order = lp_order(g, pf);
    auto sorted = order.edges;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == g.edges());
    auto r = compress_basic(g, pf, order);
    CHECK(optimum <= r.kept_count());
    CHECK(verify(g, compressed_graph(g, r), pf).ok);
  }
}

TEST_CASE("lp order follows descending edge values") {
  auto g = builtin("zachary");
  const auto pf = pf_of({Rational(1, 2), Rational(1)});
  auto model = build_lp(g, pf);
  auto s = solve_lp(model);
  REQUIRE(s.status == lp::SolveStatus::Optimal);
  auto order = lp_order(g, pf).edges;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const double x = s.edge_values[index_of(model.edges, order[i])];
    const double y = s.edge_values[index_of(model.edges, order[i + 1])];
    CHECK(x >= y - 1e-7);
  }
}

TEST_CASE("lp text dump") {
  auto model = build_lp(kSingle, pf_of({Rational(1)}));
  std::ostringstream out;
  write_lp_text(out, model);
  const std::string text = out.str();
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("obj: x0") != std::string::npos);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("path0_e0: f0 - x0 <= 0") != std::string::npos);
  CHECK(text.find("once0: f0 <= 1") != std::string::npos);
  CHECK(text.find("nbr0_1: f0 >= 1") != std::string::npos);
  CHECK(text.find("Bounds") != std::string::npos);
  CHECK(text.find("0 <= x0 <= 1") != std::string::npos);
  CHECK(text.rfind("End") != std::string::npos);
}
