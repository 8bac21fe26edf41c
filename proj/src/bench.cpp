#include "ptcomp/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

#include "ptcomp/compressor.hpp"
#include "ptcomp/error.hpp"

namespace ptcomp {

std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::BasicRandom: return "basic-random";
    case Strategy::Lp: return "lp";
    case Strategy::Ec: return "ec";
    case Strategy::Sa: return "sa";
  }
  return "basic-random";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "basic" || name == "basic-random" || name == "random") return Strategy::BasicRandom;
  if (name == "lp") return Strategy::Lp;
  if (name == "ec") return Strategy::Ec;
  if (name == "sa") return Strategy::Sa;
  throw InvalidInput("unknown strategy '" + std::string(name) + "' (expected basic, lp, ec or sa)");
}

const StrategyStats* BenchReport::find(Strategy s) const noexcept {
  for (const auto& r : results)
    if (r.strategy == s) return &r;
  return nullptr;
}

namespace {

struct Trial {
  std::size_t kept = 0;
  double seconds = 0.0;
};

Trial run_strategy(const Graph& g, Strategy strategy, const BenchConfig& config, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CompressionResult result;
  switch (strategy) {
    case Strategy::BasicRandom: result = compress_basic(g, config.pf, random_order(g, seed)); break;
    case Strategy::Lp: result = compress_basic(g, config.pf, lp_order(g, config.pf, config.lp)); break;
    case Strategy::Ec: result = compress_basic(g, config.pf, ec_order(g, config.pf.t())); break;
    case Strategy::Sa: {
      SaParams params = config.sa;
      params.seed = seed;
      result = sa_compress(g, config.pf, params);
      break;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!verify(g, compressed_graph(g, result), config.pf).ok)
    throw SoundnessError(std::string(to_string(strategy)) + " produced an invalid compression (seed " +
                         std::to_string(seed) + ")");
  return {result.kept_count(), seconds};
}

}  // namespace

BenchReport bench_orderings(const BenchConfig& config) {
  config.family.validate();
  if (config.strategies.empty()) throw InvalidInput("no strategies selected");
  const std::size_t count = config.family.count;
  const std::size_t s_count = config.strategies.size();
  std::vector<Trial> trials(count * s_count);

  auto work = [&](std::size_t worker, std::size_t workers, std::exception_ptr& error) {
    try {
      for (std::size_t i = worker; i < count; i += workers) {
        const Graph g = gen_gnm(config.family.n, config.family.m, config.family.seed_of(i));
        for (std::size_t s = 0; s < s_count; ++s)
          trials[i * s_count + s] = run_strategy(g, config.strategies[s], config, config.family.seed_of(i));
      }
    } catch (...) {
      error = std::current_exception();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.jobs, count));
  std::vector<std::exception_ptr> errors(workers);
  if (workers == 1) {
    work(0, 1, errors[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers, std::ref(errors[w]));
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  BenchReport report;
  report.family = config.family;
  report.pf = config.pf.to_string();
  for (std::size_t s = 0; s < s_count; ++s) {
    StrategyStats stats;
    stats.strategy = config.strategies[s];
    stats.trials = count;
    double kept_sum = 0.0, secs_sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Trial& t = trials[i * s_count + s];
      kept_sum += static_cast<double>(t.kept);
      secs_sum += t.seconds;
      stats.kept.push_back(t.kept);
      stats.seeds.push_back(config.family.seed_of(i));
    }
    stats.mean_ec = kept_sum / static_cast<double>(count);
    stats.mean_seconds = secs_sum / static_cast<double>(count);
    report.results.push_back(std::move(stats));
  }
  return report;
}

nlohmann::json to_json(const BenchReport& report, bool include_timing) {
  nlohmann::json j;
  j["dataset"] = {{"model", "gnm"},
                  {"n", report.family.n},
                  {"m", report.family.m},
                  {"count", report.family.count},
                  {"base_seed", report.family.base_seed}};
  j["p"] = report.pf;
  j["strategies"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    j["strategies"].push_back({{"strategy", to_string(r.strategy)},
                               {"mean_ec", r.mean_ec},
                               {"mean_seconds", include_timing ? r.mean_seconds : 0.0},
                               {"trials", r.trials},
                               {"seed_list", r.seeds},
                               {"kept", r.kept}});
  }
  return j;
}

void write_table(std::ostream& out, const BenchReport& report) {
  char line[160];
  std::snprintf(line, sizeof line, "G(%zu,%zu) x %zu, p=(%s)\n", report.family.n, report.family.m,
                report.family.count, report.pf.c_str());
  out << line;
  std::snprintf(line, sizeof line, "%-12s %12s %14s %8s\n", "strategy", "avg |E_c|", "avg time (s)", "trials");
  out << line;
  for (const auto& r : report.results) {
    std::snprintf(line, sizeof line, "%-12s %12.2f %14.6f %8zu\n", std::string(to_string(r.strategy)).c_str(),
                  r.mean_ec, r.mean_seconds, r.trials);
    out << line;
  }
}

}  // namespace ptcomp
