// aldous: command-line front end.
//
// Exit codes: 0 success, 1 a check found a violation, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aldous/aldous.hpp"
#include "aldous/config.hpp"

using namespace aldous;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string num(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;  // no "-0"
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::vector<double> parse_weights(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + tok + "'");
    }
    if (used != tok.size()) throw UsageError("bad weight '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

WeightedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  return graph_from_json(j);
}

// Graph given either as a JSON file or as a named family.
struct GraphSource {
  std::string file;
  std::string family;
  int k = 0;
  int m = -1;
  std::string weights;
  std::uint64_t graph_seed = 1;
  double density = 1.0;
  std::string distribution = "uniform";

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--graph", file, "graph JSON file {\"n\", \"edges\": [[i,j,w],...]}");
    auto* g = cmd->add_option("--family", family, "graph family: complete, star, clique, cycle, path, matching, quasi, weighted-star, random");
    f->excludes(g);
    cmd->add_option("--k", k, "star / clique index (default n)");
    cmd->add_option("--m", m, "number of matching edges (default n/2)");
    cmd->add_option("--weights", weights, "a_2,...,a_n for quasi and weighted-star");
    cmd->add_option("--graph-seed", graph_seed, "seed for --family random");
    cmd->add_option("--density", density, "edge probability for --family random");
    cmd->add_option("--distribution", distribution, "uniform, exponential or unit");
  }

  WeightedGraph build(int n) const {
    if (file.empty() && family.empty()) throw UsageError("give --graph FILE or --family NAME");
    if (!file.empty()) {
      WeightedGraph g = read_graph_file(file);
      if (g.n() != n)
        throw UsageError("graph has " + std::to_string(g.n()) + " vertices, partition has size " + std::to_string(n));
      return g;
    }
    family::FamilyParams p;
    p.k = k;
    p.m = m;
    if (!weights.empty()) p.weights = parse_weights(weights);
    p.seed = graph_seed;
    p.density = density;
    p.distribution = family::parse_distribution(distribution);
    return family::by_name(family, n, p);
  }

  std::string describe() const { return file.empty() ? family : file; }
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

std::string box_text(const Box& b) {
  return "row " + std::to_string(b.row) + " col " + std::to_string(b.col) + " (content " +
         std::to_string(b.content()) + ")";
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, const std::string& shape_text, const GraphSource& src) {
  const Partition shape = parse_partition(shape_text);
  const WeightedGraph g = src.build(shape.n());
  const std::uint64_t dim = tableau_count(shape);

  std::optional<ExactSpectrum> exact;
  if (auto qc = g.quasi_complete_weights(); qc && dim <= cfg.tableau_cap)
    exact = quasi_complete_spectrum(shape, *qc, true, cfg.tableau_cap);
  std::optional<Spectrum> numeric;
  if (dim <= cfg.dim_cap) numeric = numeric_spectrum(shape, g);
  if (!numeric && !exact)
    throw DimensionCapExceeded(shape.label() + " has dimension " + std::to_string(dim) + ", above the cap");
  const Spectrum shown = exact ? exact->to_numeric() : *numeric;

  std::ostringstream os;
  if (cfg.format == "json") {
    json j{{"shape", shape.to_string()}, {"graph", src.describe()}, {"dim", dim},
           {"lambda1", shown.lambda1()}, {"lambda_max", shown.lambda_max()}, {"spectrum", shown.values()}};
    if (exact) {
      std::vector<std::string> ex;
      for (const auto& q : exact->values()) ex.push_back(to_string(q));
      j["exact_spectrum"] = ex;
    }
    if (numeric && exact) j["numeric_deviation"] = multiset_distance(*numeric, exact->to_numeric());
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "shape,graph,dim,lambda1,lambda_max,spectrum,exact\n";
    std::string spec;
    for (std::size_t i = 0; i < shown.size(); ++i) spec += (i ? " " : "") + num(shown[i]);
    os << csv_quote(shape.to_string()) << "," << csv_quote(src.describe()) << "," << dim << ","
       << num(shown.lambda1()) << "," << num(shown.lambda_max()) << "," << spec << ","
       << (exact ? "true" : "false") << "\n";
  } else {
    throw UsageError("spectrum supports --format csv or json");
  }
  emit(os.str(), cfg.out);
  return 0;
}

int cmd_characters(const RunConfig& cfg, const std::string& method) {
  if (cfg.n < 1) throw UsageError("--n must be positive");
  const auto classes = all_partitions(cfg.n);
  std::vector<std::pair<Partition, ClassFunction>> rows;
  if (method == "hook") {
    for (int k = 0; k < cfg.n; ++k) rows.emplace_back(hook(cfg.n, k), mn_hook_character(cfg.n, k));
  } else if (method == "rep") {
    for (const auto& p : classes) rows.emplace_back(p, character_from_rep(p));
  } else {
    throw UsageError("--method must be rep or hook");
  }
  std::ostringstream os;
  if (cfg.format == "json") {
    json j{{"n", cfg.n}, {"classes", json::array()}, {"rows", json::array()}};
    for (const auto& c : classes) j["classes"].push_back(c.to_string());
    for (const auto& [p, chi] : rows) {
      json vals = json::array();
      for (const auto& c : classes) vals.push_back(chi(c));
      j["rows"].push_back({{"shape", p.to_string()}, {"values", vals}});
    }
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "shape";
    for (const auto& c : classes) os << ",\"" << c.to_string() << "\"";
    os << "\n";
    for (const auto& [p, chi] : rows) {
      os << csv_quote(p.to_string());
      for (const auto& c : classes) os << "," << chi(c);
      os << "\n";
    }
  } else {
    throw UsageError("characters supports --format csv or json");
  }
  emit(os.str(), cfg.out);
  return 0;
}

int cmd_scan(const RunConfig& cfg) {
  const auto res = scan(cfg.scan_options());
  const auto& L = res.ledger;
  if (cfg.format == "dot")
    emit(export_dot(L), cfg.out);
  else
    emit(ledger_to_json(L).dump(2) + "\n", cfg.out);
  std::cerr << "n=" << cfg.n << " graphs=" << res.graphs_evaluated << " proved=" << L.count(RelationStatus::proved)
            << " refuted=" << L.count(RelationStatus::refuted) << " unknown=" << L.count(RelationStatus::unknown)
            << " contradictions=" << res.contradictions.size() << "\n";
  for (const auto& c : res.contradictions)
    std::cerr << "contradiction: " << c.sigma.label() << " >= " << c.tau.label() << " (" << c.citation
              << ") refuted by " << c.evidence.family << " margin " << num(c.evidence.margin) << "\n";
  return res.contradictions.empty() ? 0 : 1;
}

int cmd_hasse(const RunConfig& cfg, const std::string& in, bool seeded) {
  RelationLedger L;
  if (!in.empty()) {
    std::ifstream f(in);
    if (!f) throw UsageError("cannot open ledger " + in);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw UsageError(in + ": " + e.what());
    }
    L = ledger_from_json(j);
  } else if (seeded) {
    L = seed_known(cfg.n, {cfg.tableau_cap});
  } else {
    throw UsageError("give --in LEDGER or --n N");
  }
  if (cfg.format == "json")
    emit(ledger_to_json(L).dump(2) + "\n", cfg.out);
  else
    emit(export_dot(L), cfg.out);
  return 0;
}

int cmd_check_pair(const RunConfig& cfg, const std::string& s_text, const std::string& t_text,
                   const GraphSource& src) {
  const Partition sigma = parse_partition(s_text), tau = parse_partition(t_text);
  require_same_size(sigma, tau);
  const WeightedGraph g = src.build(sigma.n());
  const auto ls = lowest_eigenvalue(sigma, g, cfg.tableau_cap);
  const auto lt = lowest_eigenvalue(tau, g, cfg.tableau_cap);
  const auto r = margin_refutation(ls, lt, g, src.describe(), cfg.tol);

  // a refutation of an entry seed_known proves is a violation
  std::string contradicts;
  if (r && sigma.n() <= 12) {
    const auto L = seed_known(sigma.n(), {cfg.tableau_cap});
    if (sigma != tau && L.entry(sigma, tau).status == RelationStatus::proved) contradicts = L.entry(sigma, tau).tag;
  }

  std::ostringstream os;
  if (cfg.format == "json") {
    json j{{"sigma", sigma.to_string()}, {"tau", tau.to_string()}, {"graph", src.describe()},
           {"lambda1_sigma", ls.value}, {"lambda1_tau", lt.value}, {"refuted", r.has_value()}};
    if (r) {
      j["margin"] = r->margin;
      j["exact"] = r->exact;
      j["witness"] = graph_to_json(g);
    }
    if (!contradicts.empty()) j["contradicts"] = contradicts;
    os << j.dump(2) << "\n";
  } else {
    os << "sigma " << sigma.label() << " lambda1 " << num(ls.value) << "\n";
    os << "tau   " << tau.label() << " lambda1 " << num(lt.value) << "\n";
    if (r)
      os << "refuted: " << sigma.label() << " >= " << tau.label() << " fails, margin " << num(r->margin)
         << (r->exact ? " (exact)" : "") << "\n";
    else
      os << "not refuted by this graph\n";
    if (!contradicts.empty()) os << "contradicts proved entry (" << contradicts << ")\n";
  }
  emit(os.str(), cfg.out);
  return contradicts.empty() ? 0 : 1;
}

int cmd_game(const RunConfig& cfg, const std::string& s_text, const std::string& t_text, bool trace) {
  const Partition sigma = parse_partition(s_text), tau = parse_partition(t_text);
  require_same_size(sigma, tau);
  const bool a = game_winner(sigma, tau);
  std::ostringstream os;
  if (cfg.format == "json") {
    json j{{"sigma", sigma.to_string()}, {"tau", tau.to_string()}, {"winner", a ? "A" : "B"}};
    if (trace) {
      j["trace"] = json::array();
      for (const auto& mv : game_trace(sigma, tau)) {
        json m{{"round", mv.round}, {"b", {mv.b_box.row, mv.b_box.col, mv.b_box.content()}}};
        if (mv.a_box) m["a"] = {mv.a_box->row, mv.a_box->col, mv.a_box->content()};
        j["trace"].push_back(m);
      }
    }
    os << j.dump(2) << "\n";
  } else {
    os << (a ? "A wins" : "B wins") << " (A holds " << sigma.label() << ", B holds " << tau.label() << ")\n";
    if (trace)
      for (const auto& mv : game_trace(sigma, tau)) {
        os << "round " << mv.round << ": B removes " << box_text(mv.b_box) << "; ";
        if (mv.a_box)
          os << "A removes " << box_text(*mv.a_box) << "\n";
        else
          os << "A has no answer\n";
      }
  }
  emit(os.str(), cfg.out);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, int samples) {
  VerifyOptions o;
  o.n = cfg.n;
  o.seed = cfg.seed;
  o.samples = samples;
  o.workers = cfg.workers;
  const auto r = run_suite(suite, o);
  emit(r.to_json().dump(2) + "\n", cfg.out);
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of the interchange process on irreducible representations of S_n"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string config_file;
  bool print_config = false;
  app.add_option("--config", config_file, "JSON run configuration; flags override it");
  app.add_flag("--print-config", print_config, "print the effective configuration and exit");

  RunConfig flags;

  // Each shared flag lives once on the top-level app; fallthrough lets it
  // appear after the subcommand name.
  std::string families_csv;
  auto* o_n = app.add_option("--n", flags.n, "size of the symmetric group");
  auto* o_tol = app.add_option("--tol", flags.tol, "refutation tolerance (margin must exceed 10 tol)");
  auto* o_dim = app.add_option("--dim-cap", flags.dim_cap, "largest irrep dimension built densely (env ALDOUS_DIM_CAP)");
  auto* o_tab = app.add_option("--tableau-cap", flags.tableau_cap, "largest tableau list enumerated");
  auto* o_fam = app.add_option("--families", families_csv, "comma list: stars,complete,cycles,paths,matchings,quasi,random");
  auto* o_budget = app.add_option("--budget", flags.budget, "random graphs per random family");
  auto* o_seed = app.add_option("--seed", flags.seed, "random seed");
  auto* o_density = app.add_option("--edge-density", flags.density, "edge probability of scan's random graphs");
  auto* o_dist = app.add_option("--weight-distribution", flags.distribution, "uniform, exponential or unit");
  auto* o_workers = app.add_option("--workers", flags.workers, "worker threads (0: all cores)");
  auto* o_format = app.add_option("--format", flags.format, "csv, json or dot");
  auto* o_out = app.add_option("--out", flags.out, "output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "spectrum of Delta_A on one irrep");
  std::string shape;
  GraphSource spec_src;
  spectrum->add_option("--shape", shape, "partition, e.g. 2,1,1 or 2,1^2")->required();
  spec_src.attach(spectrum);

  auto* characters = app.add_subcommand("characters", "character table as CSV (rows shapes, columns cycle types)");
  std::string method = "rep";
  characters->add_option("--method", method, "rep (traces of the orthogonal form) or hook (hooks only)");

  auto* scan_cmd = app.add_subcommand("scan", "search for refutations, starting from the known entries");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of a ledger as DOT");
  std::string ledger_in;
  hasse->add_option("--in", ledger_in, "ledger JSON written by scan (default: known entries for --n)");

  auto* check = app.add_subcommand("check-pair", "test sigma >= tau against one graph");
  std::string sigma, tau;
  GraphSource check_src;
  check->add_option("--sigma", sigma, "partition")->required();
  check->add_option("--tau", tau, "partition")->required();
  check_src.attach(check);

  auto* game = app.add_subcommand("game", "box removal game: A holds sigma, B holds tau");
  bool trace = false;
  game->add_option("--sigma", sigma, "A's diagram")->required();
  game->add_option("--tau", tau, "B's diagram")->required();
  game->add_flag("--trace", trace, "print one optimal line of play");

  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  int samples = 0;
  verify->add_option("--suite", suite, "lemma9, qc, hooks, characters, oracle, bounds, dual, consistency")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--samples", samples, "override the suite's sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig cfg;
    if (!config_file.empty()) cfg = load_config(config_file);
    if (o_n->count()) cfg.n = flags.n;
    if (o_tol->count()) cfg.tol = flags.tol;
    if (o_dim->count()) cfg.dim_cap = flags.dim_cap;
    if (o_tab->count()) cfg.tableau_cap = flags.tableau_cap;
    if (o_fam->count()) cfg.families = parse_families(families_csv);
    if (o_budget->count()) cfg.budget = flags.budget;
    if (o_seed->count()) cfg.seed = flags.seed;
    if (o_density->count()) cfg.density = flags.density;
    if (o_dist->count()) cfg.distribution = flags.distribution;
    if (o_workers->count()) cfg.workers = flags.workers;
    if (o_format->count()) cfg.format = flags.format;
    if (o_out->count()) cfg.out = flags.out;
    if (!o_dim->count() && config_file.empty()) cfg.dim_cap = default_dim_cap();
    if (hasse->parsed() && !o_format->count()) cfg.format = "dot";
    if ((scan_cmd->parsed() || verify->parsed()) && !o_format->count()) cfg.format = "json";
    cfg.validate();
    // IrrepModel reads its cap from the environment
    setenv("ALDOUS_DIM_CAP", std::to_string(cfg.dim_cap).c_str(), 1);

    if (print_config) {
      std::cout << to_json(cfg).dump(2) << "\n";
      return 0;
    }
    if (app.get_subcommands().empty()) throw std::invalid_argument("a subcommand is required (see --help)");
    // an explicit --n must agree with the partitions given
    auto match_n = [&](const std::string& text) {
      const Partition p = parse_partition(text);
      if (o_n->count() && p.n() != cfg.n)
        throw std::invalid_argument(p.label() + " is not a partition of n = " + std::to_string(cfg.n));
    };
    if (spectrum->parsed()) match_n(shape);
    if (check->parsed() || game->parsed()) {
      match_n(sigma);
      match_n(tau);
    }

    if (spectrum->parsed()) return cmd_spectrum(cfg, shape, spec_src);
    if (characters->parsed()) return cmd_characters(cfg, method);
    if (scan_cmd->parsed()) return cmd_scan(cfg);
    if (hasse->parsed()) return cmd_hasse(cfg, ledger_in, o_n->count() > 0 || !config_file.empty());
    if (check->parsed()) return cmd_check_pair(cfg, sigma, tau, check_src);
    if (game->parsed()) return cmd_game(cfg, sigma, tau, trace);
    if (verify->parsed()) return cmd_verify(cfg, suite, samples);
  } catch (const ContradictionError& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TableauCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
