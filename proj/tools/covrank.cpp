#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covrank/baselines.hpp"
#include "covrank/bigraph.hpp"
#include "covrank/edge_list.hpp"
#include "covrank/errors.hpp"
#include "covrank/eval.hpp"
#include "covrank/rankcore.hpp"
#include "covrank/ranking.hpp"
#include "covrank/search.hpp"
#include "covrank/synth.hpp"

namespace {

using covrank::BipartiteGraph;
using covrank::DataError;
using covrank::GuardError;
using covrank::Ranking;
using covrank::UsageError;
using nlohmann::json;

std::string fnv1a_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file: " + path);
  std::uint64_t h = 14695981039346656037ULL;
  char buffer[1 << 16];
  while (in.read(buffer, sizeof(buffer)) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize j = 0; j < got; ++j) {
      h ^= static_cast<unsigned char>(buffer[j]);
      h *= 1099511628211ULL;
    }
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

BipartiteGraph load_graph(const std::string& path, bool swap_columns,
                          covrank::LoadReport* report = nullptr) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);
  covrank::ParseOptions options;
  options.swap_columns = swap_columns;
  try {
    return covrank::load_edge_list(in, options, report);
  } catch (const covrank::ParseError& e) {
    throw covrank::ParseError(std::string(e.what()) + " in " + path, e.line());
  }
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void write_manifest(const std::string& out_path, json manifest) {
  std::ofstream out(out_path + ".manifest.json");
  if (!out) throw DataError("cannot write manifest for: " + out_path);
  out << manifest.dump(2) << '\n';
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write output file: " + path);
  out << contents;
}

struct StatsArgs {
  std::string input;
  bool swap_columns = false;
  bool as_json = false;
};

int run_stats(const StatsArgs& args) {
  const auto g = load_graph(args.input, args.swap_columns);
  const auto s = covrank::degree_stats(g);
  if (args.as_json) {
    json j{{"num_contributors", g.num_contributors()},
           {"num_items", g.num_items()},
           {"num_edges", g.num_edges()},
           {"mean_contributor_degree", s.mean_contributor_degree},
           {"mean_item_degree", s.mean_item_degree},
           {"phi_C", s.phi_c},
           {"phi_I", s.phi_i},
           {"gamma_C", s.gamma_c}};
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "|C|\t|I|\t|E|\tk_C\tk_I\tphi_C\tphi_I\tgamma_C\n";
    std::cout << g.num_contributors() << '\t' << g.num_items() << '\t' << g.num_edges() << '\t'
              << s.mean_contributor_degree << '\t' << s.mean_item_degree << '\t' << s.phi_c << '\t'
              << s.phi_i << '\t' << s.gamma_c << '\n';
  }
  return 0;
}

struct RankArgs {
  std::string input;
  bool swap_columns = false;
  std::string method;
  std::string out;
  std::string format = "csv";
  double damping = 0.85;
  double tol = 1e-10;
  std::int64_t max_iters = 200;
  std::int64_t size_guard = 50000;
  std::optional<std::uint64_t> seed;
  std::int64_t restarts = 4;
  std::int64_t max_moves = 20000;
  std::int64_t patience = 2000;
  std::string init = "random";
  int threads = 1;
};

Ranking compute_ranking(const BipartiteGraph& g, const RankArgs& args) {
  if (args.method == "mincov") return covrank::mincov(g);
  if (args.method == "shapley") return covrank::shapley_rank(g, args.threads);
  if (args.method == "degree") return covrank::degree_rank(g);
  if (args.method == "pagerank") {
    covrank::PageRankOptions options;
    options.damping = args.damping;
    options.tol = args.tol;
    options.max_iters = args.max_iters;
    options.threads = args.threads;
    auto result = covrank::pagerank_rank(g, options);
    if (!result.converged) {
      std::cerr << "warning: pagerank did not converge within " << args.max_iters
                << " iterations; ranking the best iterate\n";
    }
    return std::move(result.ranking);
  }
  if (args.method == "betweenness") return covrank::betweenness_rank(g, args.size_guard);
  if (args.method == "dspeel") return covrank::dspeel_rank(g);
  if (args.method == "greedy") return covrank::forward_greedy_rank(g);
  if (args.method == "shc") {
    if (!args.seed.has_value()) throw UsageError("--seed is required for --method shc");
    covrank::ShcParams params;
    params.seed = *args.seed;
    params.restarts = args.restarts;
    params.max_moves_per_restart = args.max_moves;
    params.patience = std::min(args.patience, args.max_moves);
    if (args.init == "random") {
      params.init = covrank::ShcInit::kRandom;
    } else if (args.init == "mincov") {
      params.init = covrank::ShcInit::kMincovSeeded;
    } else {
      throw UsageError("unknown --init: " + args.init);
    }
    auto result = covrank::shc_rank(g, params);
    std::cerr << "shc: best auc " << result.auc << " across " << result.restarts.size()
              << " restarts\n";
    return std::move(result.ranking);
  }
  throw UsageError("unknown method: " + args.method);
}

int run_rank(const RankArgs& args) {
  const Timer timer;
  const auto g = load_graph(args.input, args.swap_columns);
  const auto ranking = compute_ranking(g, args);

  std::ostringstream body;
  if (args.format == "csv") {
    covrank::write_ranking_csv(ranking, g, body);
  } else if (args.format == "text") {
    covrank::write_ranking_text(ranking, g, body);
  } else {
    throw UsageError("unknown --format: " + args.format);
  }

  if (args.out.empty()) {
    std::cout << body.str();
    return 0;
  }
  write_text_file(args.out, body.str());

  json parameters{{"format", args.format}, {"threads", args.threads}};
  if (args.method == "pagerank") {
    parameters["damping"] = args.damping;
    parameters["tol"] = args.tol;
    parameters["max_iters"] = args.max_iters;
  } else if (args.method == "betweenness") {
    parameters["size_guard"] = args.size_guard;
  } else if (args.method == "shc") {
    parameters["restarts"] = args.restarts;
    parameters["max_moves"] = args.max_moves;
    parameters["patience"] = std::min(args.patience, args.max_moves);
    parameters["init"] = args.init;
  }
  json manifest{{"command", "rank"},
                {"input", args.input},
                {"input_digest", fnv1a_digest(args.input)},
                {"method", args.method},
                {"parameters", parameters},
                {"seed", args.seed.has_value() ? json(*args.seed) : json(nullptr)},
                {"wall_time_seconds", timer.seconds()},
                {"outputs", json::array({args.out})}};
  write_manifest(args.out, manifest);
  return 0;
}

struct EvalArgs {
  std::string input;
  bool swap_columns = false;
  std::string ranking_path;
  std::string out;
  std::string summary_path;
  std::string method_name;
};

int run_eval(const EvalArgs& args) {
  const Timer timer;
  const auto g = load_graph(args.input, args.swap_columns);

  std::ifstream ranking_in(args.ranking_path);
  if (!ranking_in) throw DataError("cannot open ranking file: " + args.ranking_path);
  const auto labels = covrank::read_ranking_labels(ranking_in);
  std::string method = args.method_name;
  if (method.empty()) method = args.ranking_path;
  const auto ranking = covrank::ranking_from_labels(g, labels, method);
  const auto curve = covrank::coverage_curve(g, ranking);

  std::ostringstream body;
  covrank::write_curve_csv(curve, body);
  json summary{{"method", method},
               {"auc", curve.auc},
               {"num_contributors", g.num_contributors()},
               {"num_items", g.num_items()}};

  if (!args.summary_path.empty()) write_text_file(args.summary_path, summary.dump() + "\n");
  if (args.out.empty()) {
    std::cout << body.str();
    std::cerr << summary.dump() << '\n';
    return 0;
  }
  write_text_file(args.out, body.str());
  std::cout << summary.dump() << '\n';

  json manifest{{"command", "eval"},
                {"input", args.input},
                {"input_digest", fnv1a_digest(args.input)},
                {"ranking", args.ranking_path},
                {"ranking_digest", fnv1a_digest(args.ranking_path)},
                {"method", method},
                {"parameters", json::object()},
                {"seed", nullptr},
                {"wall_time_seconds", timer.seconds()},
                {"outputs", json::array({args.out})}};
  write_manifest(args.out, manifest);
  return 0;
}

struct SynthArgs {
  std::string mode;  // er | pl | reduce
  std::string out;
  std::int64_t n_contributors = 5000;
  std::int64_t n_items = 5000;
  double p = 0.0;
  double alpha_c = 0.5;
  double alpha_i = 0.5;
  std::int64_t max_degree_c = 100;
  std::int64_t max_degree_i = 100;
  std::optional<std::uint64_t> seed;
  std::string input;  // reduce only
  std::int64_t k = 0;
};

int run_synth(const SynthArgs& args) {
  const Timer timer;
  covrank::GenReport report;
  json parameters;
  std::optional<BipartiteGraph> g;
  std::string input_digest;

  if (args.mode == "er") {
    if (!args.seed.has_value()) throw UsageError("--seed is required for synth er");
    covrank::ErConfig cfg{args.n_contributors, args.n_items, args.p, *args.seed};
    g = covrank::generate_er(cfg, &report);
    parameters = {{"nc", args.n_contributors}, {"ni", args.n_items}, {"p", args.p}};
  } else if (args.mode == "pl") {
    if (!args.seed.has_value()) throw UsageError("--seed is required for synth pl");
    covrank::PowerLawConfig cfg{args.n_contributors, args.n_items,    args.alpha_c, args.alpha_i,
                                args.max_degree_c,   args.max_degree_i, *args.seed};
    g = covrank::generate_powerlaw(cfg, &report);
    parameters = {{"nc", args.n_contributors}, {"ni", args.n_items},
                  {"alpha_c", args.alpha_c},   {"alpha_i", args.alpha_i},
                  {"dc", args.max_degree_c},   {"di", args.max_degree_i}};
  } else {  // reduce
    std::ifstream in(args.input);
    if (!in) throw DataError("cannot open input file: " + args.input);
    const auto source = covrank::SimpleGraph::from_edge_list(in);
    auto instance = covrank::dks_to_criticalset(source, args.k);
    g = std::move(instance.graph);
    report.realized_edges = g->num_edges();
    parameters = {{"k", args.k}};
    input_digest = fnv1a_digest(args.input);
  }

  std::ostringstream body;
  covrank::write_canonical_edge_list(*g, body);
  std::cerr << "generated |C|=" << g->num_contributors() << " |I|=" << g->num_items()
            << " |E|=" << g->num_edges() << " duplicates_collapsed=" << report.duplicates_collapsed
            << " isolated_items_dropped=" << report.isolated_items_dropped
            << " reconciliation_decrements=" << report.reconciliation_decrements << '\n';

  if (args.out.empty()) {
    std::cout << body.str();
    return 0;
  }
  write_text_file(args.out, body.str());

  json manifest{{"command", "synth " + args.mode},
                {"input", args.mode == "reduce" ? json(args.input) : json(nullptr)},
                {"input_digest", input_digest.empty() ? json(nullptr) : json(input_digest)},
                {"method", args.mode},
                {"parameters", parameters},
                {"seed", args.seed.has_value() ? json(*args.seed) : json(nullptr)},
                {"wall_time_seconds", timer.seconds()},
                {"outputs", json::array({args.out})},
                {"realized_edges", report.realized_edges},
                {"duplicates_collapsed", report.duplicates_collapsed},
                {"isolated_items_dropped", report.isolated_items_dropped}};
  write_manifest(args.out, manifest);
  return 0;
}

struct BenchArgs {
  std::vector<std::int64_t> edges;
  std::int64_t n_contributors = 50000;
  std::int64_t n_items = 50000;
  std::optional<std::uint64_t> seed;
  std::string out;
  int threads = 1;
};

int run_bench(const BenchArgs& args) {
  if (!args.seed.has_value()) throw UsageError("--seed is required for bench");
  const Timer timer;
  std::ostringstream body;
  body << "edges,method,seconds\n";
  for (std::size_t j = 0; j < args.edges.size(); ++j) {
    const std::int64_t edges = args.edges[j];
    covrank::GenReport report;
    const auto g = covrank::random_bipartite(args.n_contributors, args.n_items, edges,
                                             *args.seed + j, &report);
    {
      const Timer t;
      const auto r = covrank::mincov(g);
      body << edges << ",mincov," << t.seconds() << '\n';
      if (r.order.empty()) throw DataError("empty mincov ranking");
    }
    {
      const Timer t;
      const auto phi = covrank::shapley_cov(g, args.threads);
      body << edges << ",shapley," << t.seconds() << '\n';
      if (phi.empty()) throw DataError("empty shapley scores");
    }
    std::cerr << "bench edges=" << edges << " realized=" << report.realized_edges << '\n';
  }

  if (args.out.empty()) {
    std::cout << body.str();
    return 0;
  }
  write_text_file(args.out, body.str());
  json manifest{{"command", "bench"},
                {"input", nullptr},
                {"input_digest", nullptr},
                {"method", "mincov+shapley"},
                {"parameters",
                 {{"edges", args.edges},
                  {"nc", args.n_contributors},
                  {"ni", args.n_items},
                  {"threads", args.threads}}},
                {"seed", *args.seed},
                {"wall_time_seconds", timer.seconds()},
                {"outputs", json::array({args.out})}};
  write_manifest(args.out, manifest);
  return 0;
}

struct OracleArgs {
  std::string input;
  bool swap_columns = false;
  std::int64_t k = 0;
  std::int64_t limit = 5'000'000;
};

int run_oracle(const OracleArgs& args) {
  const auto g = load_graph(args.input, args.swap_columns);
  const auto result = covrank::brute_force_best_k(g, args.k, args.limit);
  std::cout << covrank::oracle_result_json(result, g) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical-contributor analysis for bipartite dependency networks"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Key=value config file; section headers name the subcommand, e.g. [synth.er]");

  StatsArgs stats_args;
  auto* stats = app.add_subcommand("stats", "Structural statistics of an edge-list graph");
  stats->add_option("--input", stats_args.input, "Edge-list file")->required();
  stats->add_flag("--swap-columns", stats_args.swap_columns, "Read lines as <item> <contributor>");
  stats->add_flag("--json", stats_args.as_json, "Emit JSON instead of a table row");

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Compute a contributor criticality ranking");
  rank->add_option("--input", rank_args.input, "Edge-list file")->required();
  rank->add_flag("--swap-columns", rank_args.swap_columns, "Read lines as <item> <contributor>");
  rank->add_option("--method", rank_args.method,
                   "mincov | shapley | degree | pagerank | betweenness | dspeel | greedy | shc")
      ->required();
  rank->add_option("--out", rank_args.out, "Output file (stdout if omitted)");
  rank->add_option("--format", rank_args.format, "csv | text (default csv)");
  rank->add_option("--damping", rank_args.damping, "PageRank damping (default 0.85)");
  rank->add_option("--tol", rank_args.tol, "PageRank L1 tolerance (default 1e-10)");
  rank->add_option("--max-iters", rank_args.max_iters, "PageRank iteration cap (default 200)");
  rank->add_option("--size-guard", rank_args.size_guard,
                   "Betweenness node-count guard (default 50000)");
  rank->add_option("--seed", rank_args.seed, "Random seed (required for shc)");
  rank->add_option("--restarts", rank_args.restarts, "SHC restarts (default 4)");
  rank->add_option("--max-moves", rank_args.max_moves, "SHC moves per restart (default 20000)");
  rank->add_option("--patience", rank_args.patience,
                   "SHC non-improving moves before convergence (default 2000)");
  rank->add_option("--init", rank_args.init, "SHC initialization: random | mincov");
  rank->add_option("--threads", rank_args.threads, "Worker cap (default 1)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Coverage curve and AUC of a ranking");
  eval->add_option("--input", eval_args.input, "Edge-list file")->required();
  eval->add_flag("--swap-columns", eval_args.swap_columns, "Read lines as <item> <contributor>");
  eval->add_option("--ranking", eval_args.ranking_path, "Ranking file (text or CSV)")->required();
  eval->add_option("--out", eval_args.out, "Curve CSV file (stdout if omitted)");
  eval->add_option("--summary", eval_args.summary_path, "Also write the JSON summary here");
  eval->add_option("--method-name", eval_args.method_name, "Method name for the summary");

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Generate synthetic graphs");
  synth->require_subcommand(1);
  synth->configurable();
  auto* synth_er = synth->add_subcommand("er", "Bipartite Erdos-Renyi graph");
  synth_er->configurable();
  synth_er->add_option("--nc", synth_args.n_contributors, "Contributors (default 5000)");
  synth_er->add_option("--ni", synth_args.n_items, "Items (default 5000)");
  synth_er->add_option("--p", synth_args.p, "Edge probability")->required();
  synth_er->add_option("--seed", synth_args.seed, "Random seed")->required();
  synth_er->add_option("--out", synth_args.out, "Edge-list output (stdout if omitted)");
  auto* synth_pl = synth->add_subcommand("pl", "Power-law configuration-model graph");
  synth_pl->configurable();
  synth_pl->add_option("--nc", synth_args.n_contributors, "Contributors (default 5000)");
  synth_pl->add_option("--ni", synth_args.n_items, "Items (default 5000)");
  synth_pl->add_option("--alpha-c", synth_args.alpha_c, "Contributor exponent (default 0.5)");
  synth_pl->add_option("--alpha-i", synth_args.alpha_i, "Item exponent (default 0.5)");
  synth_pl->add_option("--dc", synth_args.max_degree_c, "Max contributor degree (default 100)");
  synth_pl->add_option("--di", synth_args.max_degree_i, "Max item degree (default 100)");
  synth_pl->add_option("--seed", synth_args.seed, "Random seed")->required();
  synth_pl->add_option("--out", synth_args.out, "Edge-list output (stdout if omitted)");
  auto* synth_reduce =
      synth->add_subcommand("reduce", "Incidence transform of a simple graph edge list");
  synth_reduce->add_option("--input", synth_args.input, "Simple-graph edge list")->required();
  synth_reduce->add_option("--k", synth_args.k, "Budget carried through the reduction")->required();
  synth_reduce->add_option("--out", synth_args.out, "Edge-list output (stdout if omitted)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time mincov and shapley on random graphs");
  bench->add_option("--edges", bench_args.edges, "Comma-separated edge counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--nc", bench_args.n_contributors, "Contributors (default 50000)");
  bench->add_option("--ni", bench_args.n_items, "Items (default 50000)");
  bench->add_option("--seed", bench_args.seed, "Random seed")->required();
  bench->add_option("--out", bench_args.out, "Timing CSV (stdout if omitted)");
  bench->add_option("--threads", bench_args.threads, "Worker cap for shapley (default 1)");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive best-k coverage (small graphs)");
  oracle->add_option("--input", oracle_args.input, "Edge-list file")->required();
  oracle->add_flag("--swap-columns", oracle_args.swap_columns,
                   "Read lines as <item> <contributor>");
  oracle->add_option("--k", oracle_args.k, "Budget")->required();
  oracle->add_option("--limit", oracle_args.limit, "Enumeration limit (default 5e6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (stats->parsed()) return run_stats(stats_args);
    if (rank->parsed()) return run_rank(rank_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (synth->parsed()) {
      synth_args.mode = synth_er->parsed() ? "er" : synth_pl->parsed() ? "pl" : "reduce";
      return run_synth(synth_args);
    }
    if (bench->parsed()) return run_bench(bench_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
