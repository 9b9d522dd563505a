#pragma once

// Run configuration shared by the CLI subcommands. A JSON file supplies
// values, command-line flags override them.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aldous/graph.hpp"
#include "aldous/order.hpp"
#include "aldous/partition.hpp"
#include "aldous/symrep.hpp"

namespace aldous {

struct RunConfig {
  int n = 4;
  double tol = kOrderTol;
  std::size_t dim_cap = 5000;
  std::uint64_t tableau_cap = kDefaultTableauCap;
  std::vector<std::string> families = known_families();
  int budget = 1000;
  std::uint64_t seed = 42;
  double density = 0.6;
  std::string distribution = "uniform";
  int workers = 0;
  std::string format = "csv";
  std::string out;  // empty: stdout

  void validate() const {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (dim_cap == 0 || tableau_cap == 0) throw std::invalid_argument("caps must be positive");
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    if (!(density >= 0 && density <= 1)) throw std::invalid_argument("density must lie in [0,1]");
    if (workers < 0) throw std::invalid_argument("workers must be >= 0");
    family::parse_distribution(distribution);
    for (const auto& f : families) parse_families(f);
    if (format != "csv" && format != "json" && format != "dot")
      throw std::invalid_argument("format must be csv, json or dot");
  }

  ScanOptions scan_options() const {
    ScanOptions o;
    o.n = n;
    o.families = families;
    o.budget = budget;
    o.tol = tol;
    o.seed = seed;
    o.workers = workers;
    o.tableau_cap = tableau_cap;
    o.density = density;
    o.distribution = family::parse_distribution(distribution);
    return o;
  }
};

inline nlohmann::json to_json(const RunConfig& c) {
  return {{"n", c.n},
          {"tol", c.tol},
          {"dim_cap", c.dim_cap},
          {"tableau_cap", c.tableau_cap},
          {"families", c.families},
          {"budget", c.budget},
          {"seed", c.seed},
          {"density", c.density},
          {"distribution", c.distribution},
          {"workers", c.workers},
          {"format", c.format},
          {"out", c.out}};
}

// Unknown keys are an error so that typos do not pass silently.
inline RunConfig config_from_json(const nlohmann::json& j, RunConfig c = {}) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "n") c.n = v.get<int>();
    else if (key == "tol") c.tol = v.get<double>();
    else if (key == "dim_cap") c.dim_cap = v.get<std::size_t>();
    else if (key == "tableau_cap") c.tableau_cap = v.get<std::uint64_t>();
    else if (key == "families") c.families = v.get<std::vector<std::string>>();
    else if (key == "budget") c.budget = v.get<int>();
    else if (key == "seed") c.seed = v.get<std::uint64_t>();
    else if (key == "density") c.density = v.get<double>();
    else if (key == "distribution") c.distribution = v.get<std::string>();
    else if (key == "workers") c.workers = v.get<int>();
    else if (key == "format") c.format = v.get<std::string>();
    else if (key == "out") c.out = v.get<std::string>();
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
  return c;
}

inline RunConfig load_config(const std::string& path, RunConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("config " + path + ": " + e.what());
  }
  return config_from_json(j, std::move(base));
}

}  // namespace aldous
