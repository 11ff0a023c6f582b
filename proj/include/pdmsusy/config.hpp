#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdmsusy/families.hpp"
#include "pdmsusy/grid.hpp"
#include "pdmsusy/mass.hpp"

namespace pdmsusy {

struct GridSpec {
  std::optional<double> x_min;
  std::optional<double> x_max;
  std::optional<int> n;
};

struct Tolerances {
  double spectrum = 5e-3;
  double degeneracy = 1e-9;
  double sweep = 1e-2;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  PotentialFamily family = HarmonicOscillator{1.0, 0};
  double delta = 1.0;
  double epsilon = 0.0;
  GridSpec grid;
  int levels = 5;
  Tolerances tolerances;
  std::vector<double> sweep{1.0, 2.0, 5.0};
  OutputFormat format = OutputFormat::Csv;
  bool format_given = false;
  std::optional<std::vector<std::string>> checks;
};

/// Strict JSON parsing: unknown keys, wrong types, or family-mismatched
/// parameters are ConfigError; family parameter signs are validated.
RunConfig parse_config(const std::string& text);

/// Names accepted in the "checks" list, sorted.
const std::vector<std::string>& known_check_names();

MassProfile mass_for(const RunConfig& cfg);
OrderingParams ordering_for(const RunConfig& cfg);

/// Grid with defaults applied: n = 4000 and box ends extended until the
/// sampled ground state falls below 1e-12 of its running peak. The mass
/// profile delta may be overridden (isospectrality sweeps re-derive the
/// box per profile).
DiscretizationGrid resolve_grid(const RunConfig& cfg);
DiscretizationGrid resolve_grid(const RunConfig& cfg, double delta);

}  // namespace pdmsusy
