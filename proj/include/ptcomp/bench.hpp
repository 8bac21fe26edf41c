#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ptcomp/datagen.hpp"
#include "ptcomp/lp_order.hpp"
#include "ptcomp/orderings.hpp"
#include "ptcomp/proportion.hpp"

namespace ptcomp {

enum class Strategy { BasicRandom, Lp, Ec, Sa };

std::string_view to_string(Strategy s) noexcept;
// Accepts basic, basic-random, random, lp, ec, sa. Throws InvalidInput.
Strategy parse_strategy(std::string_view name);

struct BenchConfig {
  FamilySpec family;
  ProportionFunction pf{{Rational(0), Rational(1, 2)}};
  std::vector<Strategy> strategies{Strategy::BasicRandom, Strategy::Lp, Strategy::Ec, Strategy::Sa};
  SaParams sa;  // seed is replaced by each instance's seed
  LpLimits lp;
  std::size_t jobs = 1;
};

struct StrategyStats {
  Strategy strategy = Strategy::BasicRandom;
  double mean_ec = 0.0;
  double mean_seconds = 0.0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> kept;  // |E_c| per instance
};

struct BenchReport {
  FamilySpec family;
  std::string pf;
  std::vector<StrategyStats> results;

  const StrategyStats* find(Strategy s) const noexcept;
};

// Runs every strategy on every instance of the family, verifying each
// output. Throws SoundnessError on a verification failure.
BenchReport bench_orderings(const BenchConfig& config);

// Machine-readable form. Keys per strategy: strategy, mean_ec, mean_seconds,
// trials, seed_list, kept. With include_timing false, mean_seconds is 0 so
// that repeated runs serialise identically.
nlohmann::json to_json(const BenchReport& report, bool include_timing = true);

void write_table(std::ostream& out, const BenchReport& report);

}  // namespace ptcomp
