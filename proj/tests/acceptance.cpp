// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "ptcomp/bench.hpp"
#include "ptcomp/compressor.hpp"
#include "ptcomp/datagen.hpp"
#include "ptcomp/edge_list.hpp"
#include "ptcomp/eval.hpp"
#include "ptcomp/lp_order.hpp"
#include "ptcomp/orderings.hpp"
#include "ptcomp/random.hpp"
#include "ptcomp/simd/kernels.hpp"

using namespace ptcomp;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

ProportionFunction pf_of(std::initializer_list<Rational> values) { return ProportionFunction(std::vector<Rational>(values)); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<ProportionFunction> grid() {
  const Rational half(1, 2);
  return {pf_of({Rational(0), Rational(0)}), pf_of({Rational(0), half}),      pf_of({Rational(0), Rational(1)}),
          pf_of({half, half}),               pf_of({half, Rational(1)}),      pf_of({Rational(1), Rational(1)})};
}

// Every labeled simple graph on n vertices.
std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

std::vector<Graph> small_corpus(std::size_t max_edges, std::size_t random_count) {
  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= 5; ++n)
    for (auto& g : all_graphs(n)) corpus.push_back(std::move(g));
  for (auto name : builtin_names()) {
    auto g = builtin(name);
    if (g.edge_count() <= max_edges) corpus.push_back(std::move(g));
  }
  Rng rng(2718);
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t n = 6 + uniform_below(rng, 3);
    const std::size_t m = 1 + uniform_below(rng, max_edges);
    corpus.push_back(gen_gnm(n, std::min(m, n * (n - 1) / 2), rng()));
  }
  return corpus;
}

std::vector<std::pair<std::string, CompressionResult>> run_all(const Graph& g, const ProportionFunction& pf,
                                                               std::uint64_t seed, std::size_t sa_iterations) {
  SaParams sa;
  sa.iterations = sa_iterations;
  sa.seed = seed;
  std::vector<std::pair<std::string, CompressionResult>> out;
  out.emplace_back("basic-random", compress_basic(g, pf, random_order(g, seed)));
  if (g.edge_count() <= 100) out.emplace_back("lp", compress_basic(g, pf, lp_order(g, pf)));
  out.emplace_back("ec", compress_basic(g, pf, ec_order(g, pf.t())));
  out.emplace_back("sa", sa_compress(g, pf, sa));
  return out;
}

Outcome soundness() {
  Rng rng(1);
  std::size_t runs = 0;
  for (int instance = 0; instance < 200; ++instance) {
    const std::size_t n = 5 + uniform_below(rng, 36);
    const std::size_t m = 1 + uniform_below(rng, std::min(n * (n - 1) / 2, 2 * n));
    const auto g = gen_gnm(n, m, rng());
    const auto pf = oracle::random_pf(1 + static_cast<unsigned>(uniform_below(rng, 3)), rng);
    for (const auto& [name, r] : run_all(g, pf, instance, 100)) {
      ++runs;
      const bool ok = verify(g, compressed_graph(g, r), pf).ok && oracle::valid_compression(n, g.edges(), r.kept, pf);
      if (!ok) return {Verdict::Fail, name + " failed verification on instance " + std::to_string(instance)};
      if (!meets_threshold(r.kept_count(), pf.at(1), g.edge_count()))
        return {Verdict::Fail, name + " broke |E_c| >= p(1)|E| on instance " + std::to_string(instance)};
    }
  }
  return {Verdict::Pass, std::to_string(runs) + " compressions verified"};
}

Outcome spanner() {
  Rng rng(2);
  std::size_t all_pairs_checked = 0;
  for (int instance = 0; instance < 50; ++instance) {
    const unsigned t = 2 + static_cast<unsigned>(uniform_below(rng, 2));
    const std::size_t n = 5 + uniform_below(rng, 36);
    const std::size_t m = 1 + uniform_below(rng, std::min(n * (n - 1) / 2, 3 * n));
    const auto g = gen_gnm(n, m, rng());
    const auto pf = ProportionFunction::spanner(t);
    for (const auto& [name, r] : run_all(g, pf, instance, 100)) {
      const auto dc = oracle::floyd_warshall(n, r.kept);
      for (const Edge& e : g.edges())
        if (dc[e.u][e.v] > static_cast<int>(t))
          return {Verdict::Fail, name + ": removed edge stretched beyond t on instance " + std::to_string(instance)};
      if (n > 30) continue;
      ++all_pairs_checked;
      const auto dg = oracle::floyd_warshall(n, g.edges());
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (dg[u][v] < oracle::kInf && dc[u][v] > static_cast<int>(t) * dg[u][v])
            return {Verdict::Fail, name + ": pair stretch above t on instance " + std::to_string(instance)};
    }
  }
  return {Verdict::Pass, "50 instances, " + std::to_string(all_pairs_checked) + " all-pairs stretch checks"};
}

Outcome oracle_agreement() {
  const auto diamond = brute_force_optimal(builtin("diamond"), pf_of({Rational(1, 2), Rational(1)})).optimum;
  const auto triangle = brute_force_optimal(builtin("triangle"), pf_of({Rational(0), Rational(1)})).optimum;
  if (diamond != 3) return {Verdict::Fail, "diamond optimum " + std::to_string(diamond) + ", expected 3"};
  if (triangle != 2) return {Verdict::Fail, "triangle optimum " + std::to_string(triangle) + ", expected 2"};
  const auto corpus = small_corpus(12, 300);
  const auto pfs = grid();
  std::size_t checks = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& pf : pfs) {
      const auto best = brute_force_optimal(corpus[i], pf, 12).optimum;
      for (const auto& [name, r] : run_all(corpus[i], pf, i, 100)) {
        ++checks;
        if (r.kept_count() < best)
          return {Verdict::Fail, name + " beat the exhaustive optimum on corpus graph " + std::to_string(i)};
      }
    }
  }
  return {Verdict::Pass, "diamond 3, triangle 2; " + std::to_string(corpus.size()) + " graphs x 6 p, " +
                             std::to_string(checks) + " strategy runs >= optimum"};
}

Outcome table2_trend() {
  BenchConfig config;
  config.family = FamilySpec{30, 20, 60, 1};
  config.pf = pf_of({Rational(0), Rational(1, 2)});
  config.sa.iterations = 1000;
  config.sa.initial_temperature = 10;
  config.sa.cooling = 0.99;
  config.jobs = 1;
  const auto report = bench_orderings(config);
  const auto* basic = report.find(Strategy::BasicRandom);
  const auto* lp = report.find(Strategy::Lp);
  const auto* ec = report.find(Strategy::Ec);
  const auto* sa = report.find(Strategy::Sa);
  std::ostringstream detail;
  detail << "mean |E_c| basic " << fmt("%.2f", basic->mean_ec) << ", lp " << fmt("%.2f", lp->mean_ec) << ", ec "
         << fmt("%.2f", ec->mean_ec) << ", sa " << fmt("%.2f", sa->mean_ec) << "; mean s basic "
         << fmt("%.2e", basic->mean_seconds) << ", lp " << fmt("%.2e", lp->mean_seconds) << ", ec "
         << fmt("%.2e", ec->mean_seconds) << ", sa " << fmt("%.2e", sa->mean_seconds);
  std::vector<std::string> problems;
  if (basic->mean_ec < 28 * 0.85 || basic->mean_ec > 28 * 1.15) problems.push_back("basic outside 28 +/- 15%");
  if (ec->mean_ec > basic->mean_ec) problems.push_back("ec above basic");
  if (sa->mean_ec > basic->mean_ec) problems.push_back("sa above basic");
  if (lp->mean_ec > basic->mean_ec) problems.push_back("lp above basic");
  for (const auto* other : {lp, ec, sa})
    if (other->mean_seconds <= basic->mean_seconds) problems.push_back(std::string(to_string(other->strategy)) + " not slower than basic");
  if (problems.empty()) return {Verdict::Pass, detail.str()};
  std::string all;
  for (const auto& p : problems) all += (all.empty() ? "" : ", ") + p;
  return {Verdict::Fail, all + " (" + detail.str() + ")"};
}

Outcome zachary() {
  const auto g = builtin("zachary");
  const auto pf = pf_of({Rational(1, 2), Rational(1)});
  double sum = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    sum += compression_ratio(g, compressed_graph(g, compress_basic(g, pf, random_order(g, seed)))).to_double();
  const double mean = sum / 20;
  const std::string detail = "mean ratio " + fmt("%.4f", mean) + " over seeds 1..20, band [0.20, 0.40]";
  return {mean >= 0.20 && mean <= 0.40 ? Verdict::Pass : Verdict::Fail, detail};
}

Outcome diamond_orders() {
  const auto g = builtin("diamond");
  const auto pf = pf_of({Rational(1, 2), Rational(1)});
  auto order = g.edges();
  std::size_t best = order.size(), count = 0;
  do {
    best = std::min(best, compressed_size(g, pf, order));
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  const std::string detail = "min over " + std::to_string(count) + " orders = " + std::to_string(best);
  return {count == 120 && best == 3 ? Verdict::Pass : Verdict::Fail, detail};
}

Outcome lp_sanity() {
  const auto single = Graph::from_edges(2, std::vector<Edge>{{0, 1}});
  const auto s = solve_lp(build_lp(single, pf_of({Rational(1)})));
  if (s.status != lp::SolveStatus::Optimal || std::abs(s.edge_values[0] - 1.0) > 1e-7)
    return {Verdict::Fail, "single edge x_e = " + fmt("%.9f", s.edge_values.empty() ? -1.0 : s.edge_values[0])};
  const auto corpus = small_corpus(10, 100);
  std::size_t solved = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const auto& pf : grid()) {
      const auto sol = solve_lp(build_lp(corpus[i], pf));
      if (sol.status != lp::SolveStatus::Optimal)
        return {Verdict::Fail, "relaxation not solved on corpus graph " + std::to_string(i)};
      const auto best = brute_force_optimal(corpus[i], pf, 10).optimum;
      if (sol.objective > static_cast<double>(best) + 1e-7)
        return {Verdict::Fail, "objective " + fmt("%.6f", sol.objective) + " above optimum on corpus graph " + std::to_string(i)};
      ++solved;
    }
  }
  return {Verdict::Pass, "single edge x_e = 1; " + std::to_string(solved) + " relaxations <= exhaustive optimum"};
}

std::optional<Graph> load_dataset(const std::filesystem::path& dir, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    const auto path = dir / name;
    if (!std::filesystem::exists(path)) continue;
    std::ifstream in(path);
    return load_edge_list(in).graph;
  }
  return std::nullopt;
}

Outcome real_datasets() {
  const char* dir = std::getenv("PTCOMP_DATA_DIR");
  if (!dir) return {Verdict::Skip, "set PTCOMP_DATA_DIR to a directory holding CA-AstroPh.txt and CA-HepTh.txt"};
  const auto astro = load_dataset(dir, {"CA-AstroPh.txt", "ca-AstroPh.txt"});
  const auto hepth = load_dataset(dir, {"CA-HepTh.txt", "ca-HepTh.txt"});
  if (!astro || !hepth) return {Verdict::Skip, std::string("datasets not found in ") + dir};
  const auto pf = pf_of({Rational(1, 2), Rational(1)});
  const double ratio =
      compression_ratio(*astro, compressed_graph(*astro, compress_basic(*astro, pf, random_order(*astro, 1)))).to_double();
  const auto hc = compressed_graph(*hepth, compress_basic(*hepth, pf, random_order(*hepth, 1)));
  const double speedup = time_all_pairs_bfs(*hepth, 1) / time_all_pairs_bfs(hc, 1);
  const std::string detail = "Ca-AstroPh ratio " + fmt("%.2f%%", 100 * ratio) + " (target 45.82 +/- 5), Ca-HepTh speed-up " +
                             fmt("%.3f", speedup) + " (informational, >= 1.0)";
  return {std::abs(100 * ratio - 45.82) <= 5.0 ? Verdict::Pass : Verdict::Fail, detail};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "soundness suite", 120, soundness},
      {"AC2", "spanner property", 60, spanner},
      {"AC3", "oracle agreement", 60, oracle_agreement},
      {"AC4", "ordering trend on 30 x G(20,60)", 600, table2_trend},
      {"AC5", "Zachary compression ratio", 10, zachary},
      {"AC6", "diamond order space", 1, diamond_orders},
      {"AC7", "LP sanity", 10, lp_sanity},
      {"AC8", "real datasets", 0, real_datasets},
  };

  std::printf("kernels: %s\n", std::string(simd::to_string(simd::active_isa())).c_str());
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {Verdict::Fail, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.verdict == Verdict::Pass && c.budget_seconds > 0 && seconds > c.budget_seconds) {
      outcome.verdict = Verdict::Fail;
      outcome.detail += "; over the " + fmt("%.0f", c.budget_seconds) + " s budget";
    }
    const char* tag = outcome.verdict == Verdict::Pass ? "PASS" : outcome.verdict == Verdict::Fail ? "FAIL" : "SKIP";
    std::printf("[%s] %s %s: %s (%.2f s)\n", tag, c.id, c.name, outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    if (outcome.verdict == Verdict::Fail) ++failures;
  }
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
