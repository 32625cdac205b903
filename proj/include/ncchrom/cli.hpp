#pragma once

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncchrom/chromatic.hpp"
#include "ncchrom/ncgb/basis_io.hpp"

namespace ncchrom::cli {

enum class Format { text, kv };

struct CommandConfig {
  std::string command;
  std::string graph_path, game_path, target_path, basis_path, out_path;
  std::string poly;
  std::size_t colors = 0;
  bool lc = false;
  std::size_t max_degree = 12;
  std::size_t max_length = 16;
  Format format = Format::text;
  std::uint64_t seed = 1;
  std::size_t samples = 8;
  std::size_t threads = 1;
  std::size_t n = 0;
  bool unbounded = false;
  bool timing = false;
};

/// "key = value" (text) or "key=value" (kv) lines.
class Report {
 public:
  explicit Report(Format f) : format_(f) {}
  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
  void add(const std::string& key, bool value) { add(key, std::string(value ? "yes" : "no")); }
  void add(const std::string& key, const char* value) { add(key, std::string(value)); }
  void print(std::ostream& out) const {
    for (const auto& [k, v] : lines_) out << k << (format_ == Format::text ? " = " : "=") << v << "\n";
  }

 private:
  Format format_;
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct UsageError : Error {
  using Error::Error;
};

namespace detail {

inline void require_file(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string("missing required option ") + flag);
  if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot read file '" + path + "'");
}

inline std::string run_text(const RunRecord& r) {
  return r.ideal + " " + r.status.to_string() + " rules=" + std::to_string(r.rules) +
         " lcm_degree=" + std::to_string(r.stats.max_lcm_degree) + (r.unit ? " unit" : "");
}

inline std::string seconds(double s) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(3) << s;
  return ss.str();
}

// Ideal selected by --graph/--game with --colors or --target, plain or --lc.
inline IdealSpec select_ideal(const CommandConfig& cfg) {
  SynchronousGame game(0, 1);
  if (!cfg.game_path.empty()) {
    game = load_game(cfg.game_path);
    if (!game.is_symmetric()) throw Error("game in '" + cfg.game_path + "' is not symmetric");
  } else {
    const Graph g = load_graph(cfg.graph_path);
    if (!cfg.target_path.empty())
      game = homomorphism_game(g, load_graph(cfg.target_path));
    else
      game = coloring_game(g, cfg.colors);
  }
  if (game.space().size() == 0) throw Error("ideal has no generators");
  return cfg.lc ? lc_ideal(game) : game_ideal(game);
}

inline void validate_ideal_inputs(const CommandConfig& cfg) {
  if (!cfg.game_path.empty()) {
    if (!cfg.graph_path.empty()) throw UsageError("--game and --graph are exclusive");
    require_file(cfg.game_path, "--game");
    return;
  }
  require_file(cfg.graph_path, "--graph");
  if (!cfg.target_path.empty()) {
    require_file(cfg.target_path, "--target");
    if (cfg.colors) throw UsageError("--colors and --target are exclusive");
  } else if (cfg.colors == 0) {
    throw UsageError("one of --colors or --target is required");
  }
}

inline void add_chromatic(Report& rep, const ChromaticResult& r, const std::string& graph, Format format) {
  if (format == Format::kv) {
    rep.add("graph", graph);
    rep.add("invariant", r.invariant);
    rep.add("lo", r.lo);
    rep.add("hi", r.hi);
    rep.add("certificate", to_string(r.upper.kind));
    std::string degrees;
    for (const auto& l : r.lower)
      if (l.run) degrees += (degrees.empty() ? "" : ",") + std::to_string(l.run->stats.max_lcm_degree);
    if (r.upper.run) degrees += (degrees.empty() ? "" : ",") + std::to_string(r.upper.run->stats.max_lcm_degree);
    rep.add("degrees", degrees.empty() ? "-" : degrees);
    return;
  }
  rep.add(r.invariant, r.value_string());
  rep.add("lo", r.lo);
  rep.add("hi", r.hi);
  for (const auto& l : r.lower) {
    std::string line = std::string(to_string(l.kind)) + ": " + l.detail;
    if (l.run) line += " [" + run_text(*l.run) + "]";
    rep.add("lower." + std::to_string(l.colors + 1), line);
  }
  std::string up = std::string(to_string(r.upper.kind)) + ": " + r.upper.detail;
  if (r.upper.kind == UpperCertificate::Kind::coloring) {
    std::string phi;
    for (std::size_t c : r.upper.coloring) phi += (phi.empty() ? "" : ",") + std::to_string(c);
    up += " phi=" + phi + (r.upper.functional_verified ? " functional verified" : " functional NOT verified");
  }
  if (r.upper.run) up += " [" + run_text(*r.upper.run) + "]";
  rep.add("upper", up);
  for (const auto& n : r.notes) rep.add("note", n);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  const std::size_t n = 1 + rng() % max_vertices;
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 2) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Subcommands; each returns the exit status.

inline int cmd_gb(const CommandConfig& cfg, std::ostream& out) {
  validate_ideal_inputs(cfg);
  const auto spec = select_ideal(cfg);
  CompletionOptions co;
  co.max_degree = cfg.max_degree;
  co.threads = cfg.threads;
  CompletionStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  const auto basis = complete(spec.generators, spec.space, DegLexOrder{}, co, &stats);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (cfg.out_path.empty()) {
    out << serialize_basis(basis);
    return 0;
  }
  emit_basis(basis, cfg.out_path);
  Report rep(cfg.format);
  rep.add("generators", spec.generators.size());
  rep.add("rules", basis.rules().size());
  rep.add("status", basis.status().to_string());
  rep.add("unit", contains_unit(basis));
  rep.add("pairs", stats.pairs_created);
  rep.add("max_lcm_degree", stats.max_lcm_degree);
  rep.add("basis", cfg.out_path);
  if (cfg.timing) rep.add("wall_time", seconds(secs));
  rep.print(out);
  return 0;
}

inline int cmd_nf(const CommandConfig& cfg, std::ostream& out, bool membership) {
  require_file(cfg.basis_path, "--basis");
  if (cfg.poly.empty()) throw UsageError("missing required option --poly");
  const auto basis = load_basis(cfg.basis_path);
  const auto p = parse_polynomial(cfg.poly, basis.space());
  Report rep(cfg.format);
  if (!membership) {
    rep.add("nf", to_string(normal_form(p, basis), basis.space(), basis.order()));
  } else {
    const auto v = is_member(p, basis);
    rep.add("verdict", to_string(v.kind));
    rep.add("normal_form", to_string(v.normal_form, basis.space(), basis.order()));
    rep.add("steps", v.trace.size());
  }
  rep.print(out);
  return 0;
}

inline int cmd_chi(const CommandConfig& cfg, std::ostream& out, bool lc) {
  require_file(cfg.graph_path, "--graph");
  const Graph g = load_graph(cfg.graph_path);
  ChromaticOptions co;
  co.max_degree = cfg.max_degree;
  co.threads = cfg.threads;
  co.unbounded = cfg.unbounded;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = lc ? chi_lc(g, co) : chi_alg(g, co);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Report rep(cfg.format);
  add_chromatic(rep, r, std::filesystem::path(cfg.graph_path).filename().string(), cfg.format);
  if (cfg.timing) rep.add("wall_time", seconds(secs));
  rep.print(out);
  return 0;
}

inline int cmd_dim(const CommandConfig& cfg, std::ostream& out) {
  require_file(cfg.graph_path, "--graph");
  if (!cfg.target_path.empty()) {
    require_file(cfg.target_path, "--target");
    if (cfg.colors) throw UsageError("--colors and --target are exclusive");
  } else if (cfg.colors == 0) {
    throw UsageError("one of --colors or --target is required");
  }
  const Graph g = load_graph(cfg.graph_path);
  const Graph h = cfg.target_path.empty() ? complete_graph(cfg.colors) : load_graph(cfg.target_path);
  DimOptions o;
  o.max_degree = cfg.max_degree;
  o.max_length = cfg.max_length;
  o.threads = cfg.threads;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = dim_lc(g, h, o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Report rep(cfg.format);
  rep.add("dim", r.dim.kind == QuotientDim::Kind::finite ? r.dim.count.get_str() : r.dim.to_string());
  rep.add("status", r.run.status.to_string());
  rep.add("rules", r.run.rules);
  if (r.predicted) {
    rep.add("predicted", r.predicted->get_str());
    rep.add("prediction_source", r.prediction_source);
    rep.add("agrees", !r.hard_failure());
  }
  if (cfg.timing) rep.add("wall_time", seconds(secs));
  rep.print(out);
  return r.hard_failure() ? 1 : 0;
}

inline int cmd_verify_k4(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.n < 3 || cfg.n > 6) throw UsageError("--n must be between 3 and 6");
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = verify_k4(cfg.n);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Report rep(cfg.format);
  rep.add("n", r.n);
  for (std::size_t f = 0; f < kK4Families; ++f) rep.add("family." + std::to_string(f + 1), r.family_counts[f]);
  rep.add("relations", r.family_counts[0] + r.family_counts[1] + r.family_counts[2] + r.family_counts[3] +
                           r.family_counts[4] + r.family_counts[5] + r.family_counts[6]);
  rep.add("leads_match", r.leads_match);
  rep.add("s_polynomials", r.overlaps);
  rep.add("s_polynomial_failures", r.overlap_failures);
  rep.add("game_ideal_generators", r.ideal_generators);
  rep.add("game_in_relations", r.game_in_relations);
  rep.add("relations_in_game", r.relations_in_game);
  rep.add("explicit_identity", r.explicit_identity);
  rep.add("certificate_rows", std::to_string(r.certificate_rows[0]) + "," + std::to_string(r.certificate_rows[1]) +
                                  "," + std::to_string(r.certificate_rows[2]));
  rep.add("unit_absent", r.unit_absent);
  rep.add("reduced_rules", r.reduced_size);
  rep.add("matches_completion", r.matches_completion);
  rep.add("result", r.pass() ? "pass" : "fail");
  if (cfg.timing) rep.add("wall_time", seconds(secs));
  rep.print(out);
  return r.pass() ? 0 : 1;
}

inline int cmd_crosscheck(const CommandConfig& cfg, std::ostream& out) {
  CrosscheckConfig cc;
  cc.dim.max_degree = cfg.max_degree;
  cc.dim.max_length = cfg.max_length;
  cc.dim.threads = cfg.threads;
  cc.chromatic.max_degree = cfg.max_degree;
  cc.chromatic.threads = cfg.threads;
  auto entries = structural_crosschecks(cc);

  // seeded random graphs: chi_alg <= chi_lc <= chi and coloring functionals
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const Graph g = random_graph(rng, 6);
    const auto ra = chi_alg(g, cc.chromatic), rl = chi_lc(g, cc.chromatic);
    const auto cls = classical_chromatic(g);
    const auto phi_ok =
        coloring_functional_check(g, complete_graph(cls.value), cls.coloring,
                                  game_ideal(coloring_game(g, cls.value))) &&
        coloring_functional_check(g, complete_graph(cls.value), cls.coloring, lc_ideal(coloring_game(g, cls.value)));
    const bool ok = ra.lo <= rl.hi && rl.lo <= cls.value && ra.lo <= ra.hi && rl.lo <= rl.hi && phi_ok;
    std::string name = "random " + std::to_string(i) + " n=" + std::to_string(g.vertex_count()) +
                       " m=" + std::to_string(g.edge_count());
    entries.push_back({name, "chi_alg <= chi_lc <= " + std::to_string(cls.value),
                       ra.value_string() + " <= " + rl.value_string(), ok});
  }

  Report rep(cfg.format);
  std::size_t failed = 0;
  for (const auto& e : entries) {
    failed += !e.pass;
    rep.add("check", std::string(e.pass ? "pass" : "FAIL") + " " + e.name + " (expected " + e.expected +
                         ", observed " + e.observed + ")");
  }
  rep.add("checks", entries.size());
  rep.add("failures", failed);
  rep.add("result", failed ? "fail" : "pass");
  rep.print(out);
  return failed ? 1 : 0;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Exit status: 0
/// on success or pass, 1 on verification failure, 2 on usage or input error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Noncommutative Groebner bases and chromatic invariants of coloring games", "ncchrom"};
  app.require_subcommand(1);
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-degree", cfg.max_degree, "degree bound for completion")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    sub->add_option("--format", format, "text or kv")->check(CLI::IsMember({"text", "kv"}));
    sub->add_flag("--timing", cfg.timing, "report wall time");
  };
  auto ideal_opts = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "graph file");
    sub->add_option("--game", cfg.game_path, "game file");
    sub->add_option("--target", cfg.target_path, "target graph file");
    sub->add_option("--colors", cfg.colors, "number of colors")->check(CLI::PositiveNumber);
    sub->add_flag("--lc", cfg.lc, "locally commuting ideal");
  };

  auto* gb = app.add_subcommand("gb", "complete an ideal to a reduced Groebner basis");
  common(gb);
  ideal_opts(gb);
  gb->add_option("--out", cfg.out_path, "basis output file");

  auto* nf = app.add_subcommand("nf", "normal form modulo a basis file");
  common(nf);
  nf->add_option("--basis", cfg.basis_path, "basis file");
  nf->add_option("--poly", cfg.poly, "polynomial");

  auto* member = app.add_subcommand("member", "ideal membership via a basis file");
  common(member);
  member->add_option("--basis", cfg.basis_path, "basis file");
  member->add_option("--poly", cfg.poly, "polynomial");

  auto* chia = app.add_subcommand("chi-alg", "algebraic chromatic number");
  common(chia);
  chia->add_option("--graph", cfg.graph_path, "graph file");
  chia->add_flag("--unbounded", cfg.unbounded, "lift the size limit on completion runs");

  auto* chil = app.add_subcommand("chi-lc", "locally commuting chromatic number");
  common(chil);
  chil->add_option("--graph", cfg.graph_path, "graph file");
  chil->add_flag("--unbounded", cfg.unbounded, "lift the size limit on completion runs");

  auto* dim = app.add_subcommand("dim-lc", "dimension of the locally commuting algebra");
  common(dim);
  dim->add_option("--graph", cfg.graph_path, "graph file");
  dim->add_option("--target", cfg.target_path, "target graph file");
  dim->add_option("--colors", cfg.colors, "number of colors")->check(CLI::PositiveNumber);
  dim->add_option("--max-length", cfg.max_length, "normal word length budget");

  auto* k4 = app.add_subcommand("verify-k4", "re-verify the four-color basis of K_n");
  common(k4);
  k4->add_option("--n", cfg.n, "number of vertices (3..6)");

  auto* cross = app.add_subcommand("crosscheck", "structural identity checks");
  common(cross);
  cross->add_option("--seed", cfg.seed, "seed for random instances");
  cross->add_option("--samples", cfg.samples, "number of random instances");

  std::vector<const char*> argv{"ncchrom"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "kv" ? Format::kv : Format::text;
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "gb") return detail::cmd_gb(cfg, out);
    if (cfg.command == "nf") return detail::cmd_nf(cfg, out, false);
    if (cfg.command == "member") return detail::cmd_nf(cfg, out, true);
    if (cfg.command == "chi-alg") return detail::cmd_chi(cfg, out, false);
    if (cfg.command == "chi-lc") return detail::cmd_chi(cfg, out, true);
    if (cfg.command == "dim-lc") return detail::cmd_dim(cfg, out);
    if (cfg.command == "verify-k4") return detail::cmd_verify_k4(cfg, out);
    if (cfg.command == "crosscheck") return detail::cmd_crosscheck(cfg, out);
  } catch (const Error& e) {
    err << "ncchrom " << cfg.command << ": " << e.what() << "\n";
    return 2;
  }
  err << "ncchrom: unknown command\n";
  return 2;
}

}  // namespace ncchrom::cli
