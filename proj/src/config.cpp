#include "pdmsusy/config.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <json.hpp>

#include "pdmsusy/errors.hpp"
#include "pdmsusy/susy.hpp"

namespace pdmsusy {

namespace {

using nlohmann::json;

const std::vector<std::string> kBaseKeys = {
    "family", "delta",  "epsilon", "grid",   "levels",
    "sweep",  "format", "checks",  "tolerances"};

const std::map<std::string, std::vector<std::string>> kFamilyKeys = {
    {"ho", {"omega", "ell"}},
    {"coulomb", {"q", "ell"}},
    {"morse", {"a", "b", "alpha"}}};

double number_at(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError("\"" + key + "\" must be a number");
  return v.get<double>();
}

int integer_at(const json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError("\"" + key + "\" must be an integer");
  }
  return v.get<int>();
}

void require_key(const json& j, const std::string& family,
                 const std::string& key) {
  if (!j.contains(key)) {
    throw ConfigError("family \"" + family + "\" requires key \"" + key +
                      "\"");
  }
}

PotentialFamily parse_family(const json& j, const std::string& name) {
  if (name == "ho") {
    require_key(j, name, "omega");
    require_key(j, name, "ell");
    return HarmonicOscillator{number_at(j, "omega"), integer_at(j, "ell")};
  }
  if (name == "coulomb") {
    require_key(j, name, "q");
    require_key(j, name, "ell");
    return CoulombPotential{number_at(j, "q"), integer_at(j, "ell")};
  }
  require_key(j, name, "a");
  require_key(j, name, "b");
  require_key(j, name, "alpha");
  return MorsePotential{number_at(j, "a"), number_at(j, "b"),
                        number_at(j, "alpha")};
}

GridSpec parse_grid(const json& g) {
  if (!g.is_object()) throw ConfigError("\"grid\" must be an object");
  GridSpec spec;
  for (const auto& item : g.items()) {
    const std::string& key = item.key();
    if (key == "x_min") {
      spec.x_min = number_at(g, key);
    } else if (key == "x_max") {
      spec.x_max = number_at(g, key);
    } else if (key == "n") {
      spec.n = integer_at(g, key);
      if (*spec.n < 3) throw ConfigError("grid n must be at least 3");
    } else {
      throw ConfigError("unknown grid key \"" + key + "\"");
    }
  }
  if (spec.x_min && spec.x_max && !(*spec.x_min < *spec.x_max)) {
    throw ConfigError("grid requires x_min < x_max");
  }
  return spec;
}

Tolerances parse_tolerances(const json& t) {
  if (!t.is_object()) throw ConfigError("\"tolerances\" must be an object");
  Tolerances tol;
  for (const auto& item : t.items()) {
    const std::string& key = item.key();
    double* slot = nullptr;
    if (key == "spectrum") slot = &tol.spectrum;
    else if (key == "degeneracy") slot = &tol.degeneracy;
    else if (key == "sweep") slot = &tol.sweep;
    else throw ConfigError("unknown tolerance key \"" + key + "\"");
    *slot = number_at(t, key);
    if (!(*slot > 0.0)) throw ConfigError("tolerances must be positive");
  }
  return tol;
}

/// Walk outward from `start` in steps of `step` until the sampled ground
/// state has fallen below 1e-12 of the running peak.
double scan_decay(const PotentialFamily& family, const MassProfile& mass,
                  const OrderingParams& ord, double start, double step) {
  double peak = 0.0;
  double x = start;
  for (int i = 0; i < 200000; ++i) {
    const double v = std::abs(ground_state(family, mass, ord, x));
    peak = v > peak ? v : peak;
    if (peak > 0.0 && v < 1e-12 * peak) return x;
    x += step;
  }
  throw NumericalError("box auto-derivation found no decayed end", peak);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");
  if (!j.contains("family")) throw ConfigError("missing required key \"family\"");
  if (!j.at("family").is_string()) {
    throw ConfigError("\"family\" must be a string");
  }
  const std::string fam_name = j.at("family").get<std::string>();
  const auto fam_it = kFamilyKeys.find(fam_name);
  if (fam_it == kFamilyKeys.end()) {
    throw ConfigError("unknown family " + fam_name);
  }

  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (std::find(kBaseKeys.begin(), kBaseKeys.end(), key) != kBaseKeys.end()) {
      continue;
    }
    const auto& own = fam_it->second;
    if (std::find(own.begin(), own.end(), key) != own.end()) continue;
    for (const auto& [other_name, other_keys] : kFamilyKeys) {
      if (std::find(other_keys.begin(), other_keys.end(), key) !=
          other_keys.end()) {
        throw ConfigError("key \"" + key + "\" not valid for family \"" +
                          fam_name + "\"");
      }
    }
    throw ConfigError("unknown key \"" + key + "\"");
  }

  RunConfig cfg;
  cfg.family = parse_family(j, fam_name);
  try {
    validate_family(cfg.family);
  } catch (const ArgumentError& e) {
    throw ConfigError(e.what());
  }

  if (j.contains("delta")) {
    cfg.delta = number_at(j, "delta");
    if (!(cfg.delta > 0.0)) throw ConfigError("delta must be positive");
  }
  if (j.contains("epsilon")) cfg.epsilon = number_at(j, "epsilon");
  if (j.contains("grid")) cfg.grid = parse_grid(j.at("grid"));
  if (j.contains("levels")) {
    cfg.levels = integer_at(j, "levels");
    if (cfg.levels < 1) throw ConfigError("levels must be at least 1");
  }
  if (j.contains("tolerances")) {
    cfg.tolerances = parse_tolerances(j.at("tolerances"));
  }
  if (j.contains("sweep")) {
    const auto& s = j.at("sweep");
    if (!s.is_array() || s.empty()) {
      throw ConfigError("\"sweep\" must be a nonempty array of numbers");
    }
    cfg.sweep.clear();
    for (const auto& v : s) {
      if (!v.is_number() || !(v.get<double>() > 0.0)) {
        throw ConfigError("sweep values must be positive numbers");
      }
      cfg.sweep.push_back(v.get<double>());
    }
  }
  if (j.contains("format")) {
    const auto& f = j.at("format");
    if (!f.is_string()) throw ConfigError("\"format\" must be a string");
    const std::string fs = f.get<std::string>();
    if (fs == "csv") {
      cfg.format = OutputFormat::Csv;
    } else if (fs == "json") {
      cfg.format = OutputFormat::Json;
    } else {
      throw ConfigError("format must be \"csv\" or \"json\"");
    }
    cfg.format_given = true;
  }
  if (j.contains("checks")) {
    const auto& c = j.at("checks");
    if (!c.is_array()) throw ConfigError("\"checks\" must be an array");
    std::vector<std::string> names;
    for (const auto& v : c) {
      if (!v.is_string()) throw ConfigError("check names must be strings");
      const std::string name = v.get<std::string>();
      const auto& known = known_check_names();
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw ConfigError("unknown check \"" + name + "\"");
      }
      names.push_back(name);
    }
    cfg.checks = std::move(names);
  }
  return cfg;
}

const std::vector<std::string>& known_check_names() {
  static const std::vector<std::string> names = {
      "constraint_identity",     "coulomb_index",
      "delta1_reduction",        "factorized_vs_direct",
      "isospectral_sweep_delta", "isospectral_sweep_epsilon",
      "ladder_mapping",          "partner_degeneracy",
      "shape_invariance",        "spectrum_vs_analytic",
      "vm_sign_diagnostic",      "zero_mode"};
  return names;
}

MassProfile mass_for(const RunConfig& cfg) {
  return MassProfile::rational_delta(cfg.delta);
}

OrderingParams ordering_for(const RunConfig& cfg) {
  return OrderingParams::morrow_brownstein(cfg.epsilon);
}

DiscretizationGrid resolve_grid(const RunConfig& cfg) {
  return resolve_grid(cfg, cfg.delta);
}

DiscretizationGrid resolve_grid(const RunConfig& cfg, double delta) {
  const MassProfile mass = MassProfile::rational_delta(delta);
  const OrderingParams ord = OrderingParams::morrow_brownstein(cfg.epsilon);
  const int n = cfg.grid.n.value_or(4000);
  const bool full_line = std::holds_alternative<MorsePotential>(cfg.family);
  // The box is sized from the slowest-decaying requested state, probed
  // by the ground state of the highest valid successor parameters.
  PotentialFamily probe = cfg.family;
  for (int i = 1; i < cfg.levels; ++i) {
    PotentialFamily next = successor(probe);
    try {
      validate_family(next);
    } catch (const ArgumentError&) {
      break;
    }
    probe = next;
  }
  double x_min;
  double x_max;
  if (full_line) {
    x_max = cfg.grid.x_max ? *cfg.grid.x_max
                           : scan_decay(probe, mass, ord, 0.0, 0.5);
    x_min = cfg.grid.x_min ? *cfg.grid.x_min
                           : scan_decay(probe, mass, ord, 0.0, -0.5);
  } else {
    x_min = cfg.grid.x_min.value_or(0.0);
    x_max = cfg.grid.x_max ? *cfg.grid.x_max
                           : scan_decay(probe, mass, ord, x_min + 0.5, 0.5);
  }
  return build_grid(x_min, x_max, n);
}

}  // namespace pdmsusy
