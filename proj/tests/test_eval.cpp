#include <doctest.h>

#include "oracles.hpp"
#include "ptcomp/bench.hpp"
#include "ptcomp/compressor.hpp"
#include "ptcomp/datagen.hpp"
#include "ptcomp/error.hpp"
#include "ptcomp/eval.hpp"
#include "ptcomp/orderings.hpp"
#include "ptcomp/random.hpp"

using namespace ptcomp;

namespace {

constexpr VertexId a = 0, b = 1, c = 2;

ProportionFunction pf_of(std::initializer_list<Rational> values) { return ProportionFunction(std::vector<Rational>(values)); }

}  // namespace

TEST_CASE("compression ratio") {
  auto g = builtin("zachary");
  auto edges = g.edges();
  edges.resize(55);
  CHECK(compression_ratio(g, g.with_edges(edges)) == Rational(23, 78));
  CHECK(compression_ratio(g, g) == Rational(0));
  auto big = gen_gnm(30, 100, 2);
  auto sixty = big.edges();
  sixty.resize(60);
  CHECK(compression_ratio(big, big.with_edges(sixty)) == Rational(2, 5));
  CHECK_THROWS_AS(compression_ratio(Graph::from_edges(3, {}), Graph::from_edges(3, {})), InvalidInput);
}

TEST_CASE("shortest path histograms") {
  auto tri = sp_histogram(builtin("triangle"));
  CHECK(tri.counts == std::map<std::uint32_t, std::uint64_t>{{1, 3}});
  CHECK(tri.disconnected == 0);
  auto path = sp_histogram(builtin("path3"));
  CHECK(path.counts == std::map<std::uint32_t, std::uint64_t>{{1, 2}, {2, 1}});
  auto pair = sp_histogram(Graph::from_edges(2, {}));
  CHECK(pair.counts.empty());
  CHECK(pair.disconnected == 1);

  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(15, 0.15, rng);
    auto h = sp_histogram(g);
    CHECK(h.total_pairs() == 15 * 14 / 2);
    const auto dist = oracle::floyd_warshall(15, g.edges());
    std::map<std::uint32_t, std::uint64_t> expected;
    std::uint64_t disconnected = 0;
    for (std::size_t u = 0; u < 15; ++u)
      for (std::size_t v = u + 1; v < 15; ++v) {
        if (dist[u][v] >= oracle::kInf) ++disconnected;
        else ++expected[static_cast<std::uint32_t>(dist[u][v])];
      }
    CHECK(h.counts == expected);
    CHECK(h.disconnected == disconnected);
  }
}

TEST_CASE("stretch checks") {
  auto g = builtin("triangle");
  auto two = stretch_check(g, g.with_edges(std::vector<Edge>{{a, b}, {a, c}}), 2);
  CHECK(two.ok);
  CHECK(two.max_stretch == std::uint32_t{2});
  auto broken = stretch_check(g, g.with_edges(std::vector<Edge>{{a, b}}), 2);
  CHECK_FALSE(broken.ok);
  CHECK_FALSE(broken.max_stretch.has_value());
  auto same = stretch_check(g, g, 2);
  CHECK(same.ok);
  CHECK(same.max_stretch == std::uint32_t{1});
  CHECK_FALSE(stretch_check(g, g.with_edges(std::vector<Edge>{{a, b}, {a, c}}), 1).ok);
  CHECK(all_pairs_max_stretch(g, g) == Rational(1));
  CHECK(all_pairs_max_stretch(g, g.with_edges(std::vector<Edge>{{a, b}, {a, c}})) == Rational(2));
  CHECK_FALSE(all_pairs_max_stretch(g, g.with_edges(std::vector<Edge>{{a, b}})).has_value());
}

TEST_CASE("distances never shrink and full reachability keeps components") {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = oracle::random_graph(14, 0.2, rng);
    const unsigned t = 1 + static_cast<unsigned>(uniform_below(rng, 3));
    auto pf = oracle::random_pf(t, rng);
    // Force p(t) = 1 so every neighbor stays reachable.
    std::vector<Rational> values(pf.values().begin(), pf.values().end());
    values.back() = Rational(1);
    pf = ProportionFunction(values);
    auto r = compress_basic(g, pf, random_order(g, trial));
    const auto dg = oracle::floyd_warshall(14, g.edges());
    const auto dc = oracle::floyd_warshall(14, r.kept);
    for (std::size_t u = 0; u < 14; ++u)
      for (std::size_t v = 0; v < 14; ++v) {
        CHECK(dc[u][v] >= dg[u][v]);
        CHECK((dg[u][v] < oracle::kInf) == (dc[u][v] < oracle::kInf));
      }
  }
}

TEST_CASE("spanner proportions give bounded all-pairs stretch") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned t = 2 + static_cast<unsigned>(uniform_below(rng, 2));
    auto g = oracle::random_graph(16, 0.3, rng);
    auto gc = compressed_graph(g, compress_basic(g, ProportionFunction::spanner(t), random_order(g, trial)));
    auto stretch = all_pairs_max_stretch(g, gc);
    REQUIRE(stretch.has_value());
    CHECK(*stretch <= Rational(t));
    CHECK(stretch_check(g, gc, t).ok);
  }
}

TEST_CASE("exhaustive optimum") {
  auto diamond = brute_force_optimal(builtin("diamond"), pf_of({Rational(1, 2), Rational(1)}));
  CHECK(diamond.optimum == 3);
  CHECK(diamond.witness.size() == 3);
  CHECK(verify(builtin("diamond"), builtin("diamond").with_edges(diamond.witness), pf_of({Rational(1, 2), Rational(1)})).ok);
  CHECK(brute_force_optimal(builtin("triangle"), pf_of({Rational(0), Rational(1)})).optimum == 2);
  CHECK(brute_force_optimal(builtin("star4"), pf_of({Rational(1)})).optimum == 3);
  CHECK_THROWS_AS(brute_force_optimal(gen_gnm(10, 21, 1), pf_of({Rational(1)})), SizeError);
  CHECK_THROWS_AS(brute_force_optimal(gen_gnm(10, 31, 1), pf_of({Rational(1)}), 40), SizeError);

  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + uniform_below(rng, 4);
    auto g = oracle::random_graph(n, 0.6, rng);
    if (g.edge_count() > 12) continue;
    auto pf = oracle::random_pf(1 + static_cast<unsigned>(uniform_below(rng, 2)), rng);
    auto best = brute_force_optimal(g, pf);
    CHECK(best.optimum == oracle::min_compression(n, g.edges(), pf));
    CHECK(best.optimum <= compress_basic(g, pf, random_order(g, trial)).kept_count());
    CHECK(best.optimum <= compress_basic(g, pf, ec_order(g, pf.t())).kept_count());
  }
}

TEST_CASE("bitset verifier agrees with verify") {
  Rng rng(71);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + uniform_below(rng, 90);  // crosses the 64-bit word boundary
    auto g = oracle::random_graph(n, 0.02 + 0.2 * uniform_unit(rng), rng);
    auto pf = oracle::random_pf(1 + static_cast<unsigned>(uniform_below(rng, 3)), rng);
    BitsetVerifier bits(g, pf);
    for (int s = 0; s < 4; ++s) {
      std::vector<Edge> kept;
      for (const Edge& e : g.edges())
        if (uniform_unit(rng) < 0.7) kept.push_back(e);
      CHECK(bits.accepts(kept) == verify(g, g.with_edges(kept), pf).ok);
    }
  }
}

TEST_CASE("bench reports are deterministic and sound") {
  BenchConfig config;
  config.family = FamilySpec{4, 12, 24, 100};
  config.sa.iterations = 30;
  config.jobs = 2;
  auto first = bench_orderings(config);
  config.jobs = 1;
  auto second = bench_orderings(config);
  CHECK(to_json(first, false).dump() == to_json(second, false).dump());
  REQUIRE(first.results.size() == 4);
  for (const auto& stats : first.results) {
    CHECK(stats.trials == 4);
    CHECK(stats.seeds == std::vector<std::uint64_t>{100, 101, 102, 103});
    CHECK(stats.kept.size() == 4);
  }
  auto json = to_json(first);
  CHECK(json["strategies"][0].contains("mean_ec"));
  CHECK(json["strategies"][0].contains("seed_list"));
  CHECK(json["strategies"][0]["strategy"] == "basic-random");

  BenchConfig single;
  single.family = FamilySpec{1, 2, 1, 0};
  single.strategies = {Strategy::BasicRandom};
  single.pf = pf_of({Rational(1, 2)});
  auto one = bench_orderings(single);
  CHECK(one.results[0].mean_ec == 1.0);
  CHECK(parse_strategy("basic") == Strategy::BasicRandom);
  CHECK_THROWS_AS(parse_strategy("greedy"), InvalidInput);
}

TEST_CASE("all-pairs timing is positive") { CHECK(time_all_pairs_bfs(builtin("zachary"), 2) > 0.0); }
