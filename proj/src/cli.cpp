#include "pdmsusy/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <variant>
#include <vector>

#include "pdmsusy/eigensolver.hpp"
#include "pdmsusy/errors.hpp"
#include "pdmsusy/susy.hpp"
#include "pdmsusy/system.hpp"

namespace pdmsusy {

namespace {

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return fmt12(v);
}

void append_json_string(std::string& s, const std::string& v) {
  s += '"';
  for (const char c : v) {
    switch (c) {
      case '"': s += "\\\""; break;
      case '\\': s += "\\\\"; break;
      case '\n': s += "\\n"; break;
      case '\r': s += "\\r"; break;
      case '\t': s += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          s += buf;
        } else {
          s += c;
        }
    }
  }
  s += '"';
}

void append_family_fields(std::string& s, const PotentialFamily& family,
                          const std::string& indent) {
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, HarmonicOscillator>) {
          s += indent + "\"omega\": " + json_number(f.omega) + ",\n";
          s += indent + "\"ell\": " + std::to_string(f.ell) + ",\n";
        } else if constexpr (std::is_same_v<F, CoulombPotential>) {
          s += indent + "\"q\": " + json_number(f.q) + ",\n";
          s += indent + "\"ell\": " + std::to_string(f.ell) + ",\n";
        } else {
          s += indent + "\"a\": " + json_number(f.a) + ",\n";
          s += indent + "\"b\": " + json_number(f.b) + ",\n";
          s += indent + "\"alpha\": " + json_number(f.alpha) + ",\n";
        }
      },
      family);
}

struct SpectrumRow {
  int n;
  double numeric;
  double analytic;
  double err;
};

std::vector<SpectrumRow> spectrum_rows(const RunConfig& cfg) {
  const DiscreteSystem sys = build_system(cfg.family, mass_for(cfg),
                                          ordering_for(cfg), resolve_grid(cfg));
  const VectorX<double> vals = lowest_eigenvalues(sys.h_minus, cfg.levels);
  std::vector<SpectrumRow> rows;
  rows.reserve(static_cast<std::size_t>(cfg.levels));
  for (int n = 0; n < cfg.levels; ++n) {
    const double analytic = analytic_spectrum(cfg.family, n);
    rows.push_back({n, vals[n], analytic, std::abs(vals[n] - analytic)});
  }
  return rows;
}

std::string spectrum_text(const RunConfig& cfg) {
  const std::vector<SpectrumRow> rows = spectrum_rows(cfg);
  std::string s;
  if (cfg.format == OutputFormat::Csv) {
    s = "n,E_numeric,E_analytic,abs_err\n";
    for (const auto& r : rows) {
      s += std::to_string(r.n) + "," + fmt12(r.numeric) + "," +
           fmt12(r.analytic) + "," + fmt12(r.err) + "\n";
    }
    return s;
  }
  s = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    s += "  {\"n\": " + std::to_string(r.n) +
         ", \"E_numeric\": " + json_number(r.numeric) +
         ", \"E_analytic\": " + json_number(r.analytic) +
         ", \"abs_err\": " + json_number(r.err) + "}";
    s += i + 1 < rows.size() ? ",\n" : "\n";
  }
  s += "]\n";
  return s;
}

std::string partners_text(const RunConfig& cfg) {
  const MassProfile mass = mass_for(cfg);
  const OrderingParams ord = ordering_for(cfg);
  const DiscretizationGrid grid = resolve_grid(cfg);
  const bool csv = cfg.format == OutputFormat::Csv;
  std::string s;
  if (csv) {
    s = "x,m,u,W,V_minus,V_plus,Vm_eq24,Vm_eq25\n";
  } else {
    s = "[\n";
  }
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.node(i);
    const PartnerPotentials pp = partner_potentials(cfg.family, mass, ord, x);
    const VmPair vm = mass_correction_vm(mass, ord, x);
    const double m = mass.mass(x).value;
    const double u = mass.u(x);
    if (csv) {
      s += fmt12(x) + "," + fmt12(m) + "," + fmt12(u) + "," + fmt12(pp.w) +
           "," + fmt12(pp.v_minus) + "," + fmt12(pp.v_plus) + "," +
           fmt12(vm.derivative_form) + "," + fmt12(vm.profile_form) + "\n";
    } else {
      s += "  {\"x\": " + json_number(x) + ", \"m\": " + json_number(m) +
           ", \"u\": " + json_number(u) + ", \"W\": " + json_number(pp.w) +
           ", \"V_minus\": " + json_number(pp.v_minus) +
           ", \"V_plus\": " + json_number(pp.v_plus) +
           ", \"Vm_eq24\": " + json_number(vm.derivative_form) +
           ", \"Vm_eq25\": " + json_number(vm.profile_form) + "}";
      s += i + 1 < grid.n ? ",\n" : "\n";
    }
  }
  if (!csv) s += "]\n";
  return s;
}

std::string sweep_text(const RunConfig& cfg) {
  const OrderingParams ord = ordering_for(cfg);
  std::vector<std::vector<double>> energies;
  for (const double delta : cfg.sweep) {
    const MassProfile mass = MassProfile::rational_delta(delta);
    const DiscreteSystem sys =
        build_system(cfg.family, mass, ord, resolve_grid(cfg, delta));
    const VectorX<double> vals = lowest_eigenvalues(sys.h_minus, cfg.levels);
    energies.emplace_back(vals.data(), vals.data() + vals.size());
  }
  double max_spread = 0.0;
  for (int n = 0; n < cfg.levels; ++n) {
    double lo = energies.front()[static_cast<std::size_t>(n)];
    double hi = lo;
    for (const auto& e : energies) {
      lo = std::min(lo, e[static_cast<std::size_t>(n)]);
      hi = std::max(hi, e[static_cast<std::size_t>(n)]);
    }
    max_spread = std::max(max_spread, hi - lo);
  }
  std::string s;
  if (cfg.format == OutputFormat::Csv) {
    s = "delta,n,E_numeric\n";
    for (std::size_t d = 0; d < cfg.sweep.size(); ++d) {
      for (int n = 0; n < cfg.levels; ++n) {
        s += fmt12(cfg.sweep[d]) + "," + std::to_string(n) + "," +
             fmt12(energies[d][static_cast<std::size_t>(n)]) + "\n";
      }
    }
    s += "max_spread,," + fmt12(max_spread) + "\n";
    return s;
  }
  s = "[\n";
  for (std::size_t d = 0; d < cfg.sweep.size(); ++d) {
    for (int n = 0; n < cfg.levels; ++n) {
      s += "  {\"delta\": " + json_number(cfg.sweep[d]) +
           ", \"n\": " + std::to_string(n) + ", \"E_numeric\": " +
           json_number(energies[d][static_cast<std::size_t>(n)]) + "},\n";
    }
  }
  s += "  {\"max_spread\": " + json_number(max_spread) + "}\n]\n";
  return s;
}

}  // namespace

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string report_json(const CheckReport& report) {
  const RunConfig& cfg = report.config;
  std::string s = "{\n  \"config\": {\n";
  s += "    \"family\": \"" + family_name(cfg.family) + "\",\n";
  append_family_fields(s, cfg.family, "    ");
  s += "    \"delta\": " + json_number(cfg.delta) + ",\n";
  s += "    \"epsilon\": " + json_number(cfg.epsilon) + ",\n";
  s += "    \"grid\": {\"x_min\": " + json_number(report.grid.x_min) +
       ", \"x_max\": " + json_number(report.grid.x_max) +
       ", \"n\": " + std::to_string(report.grid.n) + "},\n";
  s += "    \"levels\": " + std::to_string(cfg.levels) + ",\n";
  s += "    \"tolerances\": {\"spectrum\": " +
       json_number(cfg.tolerances.spectrum) +
       ", \"degeneracy\": " + json_number(cfg.tolerances.degeneracy) +
       ", \"sweep\": " + json_number(cfg.tolerances.sweep) + "},\n";
  s += "    \"sweep\": [";
  for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
    s += (i == 0 ? "" : ", ") + json_number(cfg.sweep[i]);
  }
  s += "],\n";
  if (cfg.checks) {
    s += "    \"checks\": [";
    for (std::size_t i = 0; i < cfg.checks->size(); ++i) {
      if (i > 0) s += ", ";
      append_json_string(s, (*cfg.checks)[i]);
    }
    s += "],\n";
  }
  s += "    \"format\": \"json\"\n  },\n";
  s += "  \"checks\": [\n";
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    const CheckResult& r = report.results[i];
    s += "    {\n      \"name\": ";
    append_json_string(s, r.name);
    s += ",\n      \"passed\": ";
    s += r.passed ? "true" : "false";
    s += ",\n      \"measured\": " + json_number(r.measured);
    s += ",\n      \"tolerance\": " + json_number(r.tolerance);
    s += ",\n      \"detail\": ";
    append_json_string(s, r.detail);
    s += "\n    }";
    s += i + 1 < report.results.size() ? ",\n" : "\n";
  }
  s += "  ],\n";
  s += std::string("  \"overall\": ") + (report.overall ? "true" : "false") +
       "\n}\n";
  return s;
}

int execute(Command command, const RunConfig& cfg, std::ostream& out,
            std::ostream& err) {
  try {
    std::string text;
    int code = 0;
    switch (command) {
      case Command::Spectrum:
        text = spectrum_text(cfg);
        break;
      case Command::Partners:
        text = partners_text(cfg);
        break;
      case Command::Sweep:
        text = sweep_text(cfg);
        break;
      case Command::Verify: {
        if (cfg.format_given && cfg.format == OutputFormat::Csv) {
          throw ConfigError(
              "verify emits a json report; remove format or set it to "
              "\"json\"");
        }
        const CheckReport report = run_all(cfg);
        text = report_json(report);
        code = report.overall ? 0 : 1;
        break;
      }
    }
    out << text;
    out.flush();
    if (!out) {
      err << "error: failed to write output\n";
      return 2;
    }
    return code;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
}

}  // namespace pdmsusy
