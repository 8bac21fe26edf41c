#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ptcomp/bench.hpp"
#include "ptcomp/compressor.hpp"
#include "ptcomp/datagen.hpp"
#include "ptcomp/edge_list.hpp"
#include "ptcomp/error.hpp"
#include "ptcomp/eval.hpp"
#include "ptcomp/lp_order.hpp"
#include "ptcomp/orderings.hpp"

namespace ptcomp::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Anything wrong with reading or writing files.
struct IoFailure : Error {
  using Error::Error;
};

struct Loaded {
  Graph graph;
  std::size_t duplicates = 0;
};

constexpr std::string_view kBuiltinPrefix = "builtin:";

Loaded load_graph(const std::string& path) {
  try {
    if (path.starts_with(kBuiltinPrefix)) return {builtin(std::string_view(path).substr(kBuiltinPrefix.size())), 0};
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    auto loaded = load_edge_list(in);
    return {std::move(loaded.graph), loaded.duplicate_edges};
  } catch (const IoFailure&) {
    throw;
  } catch (const Error& e) {
    throw IoFailure(path + ": " + e.what());
  }
}

// Reads a compressed edge list and maps it onto original's vertex set.
// StructuralError propagates (not an I/O problem).
Graph load_subgraph(const Graph& original, const std::string& path) {
  std::vector<LabelPair> pairs;
  try {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open '" + path + "'");
    pairs = read_label_pairs(in);
  } catch (const IoFailure&) {
    throw;
  } catch (const Error& e) {
    throw IoFailure(path + ": " + e.what());
  }
  return subgraph_from_labels(original, pairs);
}

// Opens path for writing, or returns fallback for "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    if (auto parent = fs::path(path).parent_path(); !parent.empty()) {
      std::error_code ec;
      fs::create_directories(parent, ec);
    }
    file_.open(path);
    if (!file_) throw IoFailure("cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }
  void close() {
    if (file_.is_open()) {
      file_.close();
      if (!file_) throw IoFailure("write failed");
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::size_t default_jobs() {
  if (const char* env = std::getenv("PTCOMP_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  return 1;
}

struct SaFlags {
  std::size_t iterations = 1000;
  double t0 = 10.0;
  double alpha = 0.99;

  void attach(CLI::App* app) {
    app->add_option("--sa-iters", iterations, "Simulated annealing iterations")->capture_default_str();
    app->add_option("--sa-t0", t0, "Simulated annealing initial temperature")->capture_default_str();
    app->add_option("--sa-alpha", alpha, "Simulated annealing cooling factor")->capture_default_str();
  }
  SaParams params(std::uint64_t seed) const { return {iterations, t0, alpha, seed}; }
};

std::string format_ratio(const Rational& r) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << r.to_double();
  return s.str();
}

// ---- compress ----------------------------------------------------------

struct CompressArgs {
  std::string input;
  std::string p;
  std::string ordering = "random";
  std::uint64_t seed = 1;
  SaFlags sa;
  std::string output = "-";
  std::string report;
  bool no_timing = false;
};

int cmd_compress(const CompressArgs& a, std::ostream& out, std::ostream& err) {
  const ProportionFunction pf = ProportionFunction::parse(a.p);
  const Strategy strategy = parse_strategy(a.ordering);
  if (strategy == Strategy::Sa) a.sa.params(a.seed).validate();
  const Loaded loaded = load_graph(a.input);
  const Graph& g = loaded.graph;
  if (loaded.duplicates > 0) err << "warning: collapsed " << loaded.duplicates << " duplicate edge(s)\n";

  const auto start = std::chrono::steady_clock::now();
  CompressionResult result;
  switch (strategy) {
    case Strategy::BasicRandom: result = compress_basic(g, pf, random_order(g, a.seed)); break;
    case Strategy::Lp: result = compress_basic(g, pf, lp_order(g, pf)); break;
    case Strategy::Ec: result = compress_basic(g, pf, ec_order(g, pf.t())); break;
    case Strategy::Sa: result = sa_compress(g, pf, a.sa.params(a.seed)); break;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Graph gc = compressed_graph(g, result);
  const VerificationReport check = verify(g, gc, pf);

  Sink edges(a.output, out);
  write_edge_list(edges.stream(), gc);
  edges.close();

  json report;
  report["input"] = a.input;
  report["vertices"] = g.vertex_count();
  report["edges"] = g.edge_count();
  report["kept"] = gc.edge_count();
  if (g.edge_count() > 0) {
    const Rational ratio = compression_ratio(g, gc);
    report["ratio"] = ratio.to_double();
    report["ratio_exact"] = ratio.to_string();
  } else {
    report["ratio"] = nullptr;
  }
  report["seconds"] = a.no_timing ? 0.0 : seconds;
  report["strategy"] = to_string(strategy);
  report["seed"] = a.seed;
  report["p"] = pf.to_string();
  report["t"] = pf.t();
  report["verified"] = check.ok;
  Sink rep(a.report, err);
  rep.stream() << report.dump(2) << '\n';
  rep.close();

  if (!check.ok) {
    err << "internal error: compression failed verification (" << check.violations.size() << " violations)\n";
    return kExitInternal;
  }
  return kExitOk;
}

// ---- verify ------------------------------------------------------------

struct VerifyArgs {
  std::string original;
  std::string compressed;
  std::string p;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const ProportionFunction pf = ProportionFunction::parse(a.p);
  const Graph g = load_graph(a.original).graph;
  Graph gc;
  try {
    gc = load_subgraph(g, a.compressed);
  } catch (const StructuralError& e) {
    err << "not a subgraph: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  const VerificationReport report = verify(g, gc, pf);
  if (report.ok) {
    out << "ok: " << gc.edge_count() << " of " << g.edge_count() << " edges satisfy p=(" << pf.to_string() << ")\n";
    return kExitOk;
  }
  out << report.violations.size() << " violation(s)\n";
  for (const Violation& v : report.violations)
    out << "vertex " << g.label(v.vertex) << " level " << v.level << ": reached " << v.achieved << ", required "
        << v.required.to_string() << '\n';
  return kExitVerifyFailed;
}

// ---- gen ---------------------------------------------------------------

struct GenArgs {
  std::size_t n = 20;
  std::size_t m = 60;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::string outdir;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const FamilySpec spec{a.count, a.n, a.m, a.seed};
  spec.validate();
  std::error_code ec;
  fs::create_directories(a.outdir, ec);
  if (ec) throw IoFailure("cannot create '" + a.outdir + "': " + ec.message());
  const int width = std::max<int>(3, static_cast<int>(std::to_string(a.count - 1).size()));
  for (std::size_t i = 0; i < a.count; ++i) {
    std::ostringstream name;
    name << "gnm_" << a.n << '_' << a.m << '_' << std::setw(width) << std::setfill('0') << i << ".txt";
    const fs::path path = fs::path(a.outdir) / name.str();
    Sink file(path.string(), out);
    file.stream() << "# G(n,m) n=" << a.n << " m=" << a.m << " seed=" << spec.seed_of(i) << '\n';
    write_edge_list(file.stream(), gen_gnm(a.n, a.m, spec.seed_of(i)));
    file.close();
  }
  out << "wrote " << a.count << " graph(s) to " << a.outdir << '\n';
  return kExitOk;
}

// ---- eval --------------------------------------------------------------

struct EvalArgs {
  std::string original;
  std::string compressed;
  unsigned t = 2;
  unsigned repeats = 3;
};

int cmd_sp_hist(const EvalArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.original).graph;
  const SpHistogram hg = sp_histogram(g);
  std::optional<SpHistogram> hc;
  if (!a.compressed.empty()) hc = sp_histogram(load_subgraph(g, a.compressed));

  std::uint32_t max_len = 0;
  if (!hg.counts.empty()) max_len = hg.counts.rbegin()->first;
  if (hc && !hc->counts.empty()) max_len = std::max(max_len, hc->counts.rbegin()->first);
  auto at = [](const SpHistogram& h, std::uint32_t len) {
    auto it = h.counts.find(len);
    return it == h.counts.end() ? std::uint64_t{0} : it->second;
  };
  out << std::left << std::setw(14) << "length" << std::setw(14) << "original";
  if (hc) out << std::setw(14) << "compressed";
  out << '\n';
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    out << std::setw(14) << len << std::setw(14) << at(hg, len);
    if (hc) out << std::setw(14) << at(*hc, len);
    out << '\n';
  }
  out << std::setw(14) << "disconnected" << std::setw(14) << hg.disconnected;
  if (hc) out << std::setw(14) << hc->disconnected;
  out << '\n';
  return kExitOk;
}

int cmd_stretch(const EvalArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.original).graph;
  const Graph gc = load_subgraph(g, a.compressed);
  const StretchReport r = stretch_check(g, gc, a.t);
  out << "removed-edge stretch: " << (r.max_stretch ? std::to_string(*r.max_stretch) : "unbounded") << " (limit "
      << a.t << ") " << (r.ok ? "ok" : "exceeded") << '\n';
  return r.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_ratio(const EvalArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.original).graph;
  const Graph gc = load_subgraph(g, a.compressed);
  const Rational r = compression_ratio(g, gc);
  out << "compression ratio: " << format_ratio(r) << " (" << r.to_string() << ")\n";
  return kExitOk;
}

int cmd_speedup(const EvalArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.original).graph;
  const Graph gc = load_subgraph(g, a.compressed);
  const double tg = time_all_pairs_bfs(g, a.repeats);
  const double tc = time_all_pairs_bfs(gc, a.repeats);
  out << std::fixed << std::setprecision(6) << "all-pairs BFS: original " << tg << " s, compressed " << tc
      << " s, speed-up " << std::setprecision(3) << (tc > 0 ? tg / tc : 0.0) << '\n';
  return kExitOk;
}

// ---- bench -------------------------------------------------------------

struct BenchArgs {
  std::string family = "20,60,30";
  std::string p = "0,0.5";
  std::string strategies = "basic,lp,ec,sa";
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  SaFlags sa;
  std::string report;
  bool no_timing = false;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  for (std::string item; std::getline(s, item, ',');) parts.push_back(item);
  return parts;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const auto fam = split_csv(a.family);
  if (fam.size() != 3) throw InvalidInput("--family expects n,m,count");
  BenchConfig config;
  try {
    config.family = FamilySpec{std::stoul(fam[2]), std::stoul(fam[0]), std::stoul(fam[1]), a.seed};
  } catch (const std::logic_error&) {
    throw InvalidInput("--family expects three unsigned integers n,m,count");
  }
  config.pf = ProportionFunction::parse(a.p);
  config.strategies.clear();
  for (const auto& s : split_csv(a.strategies)) config.strategies.push_back(parse_strategy(s));
  config.sa = a.sa.params(a.seed);
  config.sa.validate();
  config.jobs = a.jobs;

  const BenchReport report = bench_orderings(config);
  BenchReport shown = report;
  if (a.no_timing)
    for (auto& r : shown.results) r.mean_seconds = 0.0;
  write_table(out, shown);
  if (!a.report.empty()) {
    Sink rep(a.report, out);
    rep.stream() << to_json(report, !a.no_timing).dump(2) << '\n';
    rep.close();
  }
  return kExitOk;
}

// ---- lp-model ----------------------------------------------------------

struct LpArgs {
  std::string input;
  std::string p;
  std::string output = "-";
};

int cmd_lp_model(const LpArgs& a, std::ostream& out) {
  const ProportionFunction pf = ProportionFunction::parse(a.p);
  const Graph g = load_graph(a.input).graph;
  const LpModel model = build_lp(g, pf);
  Sink sink(a.output, out);
  write_lp_text(sink.stream(), model);
  sink.close();
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighborhood-preserving (p,t)-compression of undirected graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ptcomp 1.0.0");

  CompressArgs compress;
  auto* c = app.add_subcommand("compress", "Compress an edge list");
  c->add_option("input", compress.input, "Edge-list file or builtin:<name>")->required();
  c->add_option("--p", compress.p, "Proportions p(1),...,p(t)")->required();
  c->add_option("--ordering", compress.ordering, "random | lp | ec | sa")->capture_default_str();
  c->add_option("--seed", compress.seed, "Seed for random and sa orderings")->capture_default_str();
  compress.sa.attach(c);
  c->add_option("-o,--output", compress.output, "Compressed edge list ('-' for stdout)")->capture_default_str();
  c->add_option("--report", compress.report, "JSON run report (default: stderr)");
  c->add_flag("--no-timing", compress.no_timing, "Report zero seconds for reproducible output");

  VerifyArgs verify_args;
  auto* v = app.add_subcommand("verify", "Check a compressed edge list against its original");
  v->add_option("original", verify_args.original)->required();
  v->add_option("compressed", verify_args.compressed)->required();
  v->add_option("--p", verify_args.p, "Proportions p(1),...,p(t)")->required();

  GenArgs gen;
  auto* gcmd = app.add_subcommand("gen", "Generate uniform G(n,m) instances");
  gcmd->add_option("--n", gen.n)->required();
  gcmd->add_option("--m", gen.m)->required();
  gcmd->add_option("--count", gen.count)->capture_default_str();
  gcmd->add_option("--seed", gen.seed)->capture_default_str();
  gcmd->add_option("outdir", gen.outdir)->required();

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Evaluation metrics");
  e->require_subcommand(1);
  auto* hist = e->add_subcommand("sp-hist", "Shortest-path length histograms");
  hist->add_option("original", ev.original)->required();
  hist->add_option("compressed", ev.compressed);
  auto* stretch = e->add_subcommand("stretch", "Largest stretch over removed edges");
  stretch->add_option("original", ev.original)->required();
  stretch->add_option("compressed", ev.compressed)->required();
  stretch->add_option("--t", ev.t)->capture_default_str();
  auto* ratio = e->add_subcommand("ratio", "Deleted-edge fraction");
  ratio->add_option("original", ev.original)->required();
  ratio->add_option("compressed", ev.compressed)->required();
  auto* speed = e->add_subcommand("speedup", "All-pairs BFS time, original over compressed");
  speed->add_option("original", ev.original)->required();
  speed->add_option("compressed", ev.compressed)->required();
  speed->add_option("--repeats", ev.repeats)->capture_default_str();

  BenchArgs bench;
  bench.jobs = default_jobs();
  auto* b = app.add_subcommand("bench", "Compare orderings on a synthetic G(n,m) family");
  b->add_option("--family", bench.family, "n,m,count")->capture_default_str();
  b->add_option("--p", bench.p)->capture_default_str();
  b->add_option("--strategies", bench.strategies, "Comma list of basic, lp, ec, sa")->capture_default_str();
  b->add_option("--seed", bench.seed, "Base seed; instance i uses seed+i")->capture_default_str();
  b->add_option("--jobs", bench.jobs, "Worker threads (env PTCOMP_JOBS)")->capture_default_str();
  bench.sa.attach(b);
  b->add_option("--report", bench.report, "JSON report path");
  b->add_flag("--no-timing", bench.no_timing, "Report zero times for reproducible output");

  LpArgs lp_args;
  auto* l = app.add_subcommand("lp-model", "Write the LP relaxation in CPLEX LP text format");
  l->add_option("input", lp_args.input)->required();
  l->add_option("--p", lp_args.p)->required();
  l->add_option("-o,--output", lp_args.output)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& pe) {
    if (pe.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForHelp*>(&pe) || dynamic_cast<const CLI::CallForAllHelp*>(&pe)
                  ? app.help()
                  : std::string(pe.what()) + "\n");
      return kExitOk;
    }
    err << pe.what() << '\n';
    return kExitInvalidConfig;
  }

  try {
    if (c->parsed()) return cmd_compress(compress, out, err);
    if (v->parsed()) return cmd_verify(verify_args, out, err);
    if (gcmd->parsed()) return cmd_gen(gen, out);
    if (hist->parsed()) return cmd_sp_hist(ev, out);
    if (stretch->parsed()) return cmd_stretch(ev, out);
    if (ratio->parsed()) return cmd_ratio(ev, out);
    if (speed->parsed()) return cmd_speedup(ev, out);
    if (b->parsed()) return cmd_bench(bench, out);
    if (l->parsed()) return cmd_lp_model(lp_args, out);
  } catch (const IoFailure& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitIo;
  } catch (const StructuralError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitVerifyFailed;
  } catch (const SoundnessError& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kExitInternal;
  } catch (const SolverError& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kExitInternal;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInvalidConfig;
  }
  return kExitInvalidConfig;
}

}  // namespace ptcomp::cli
