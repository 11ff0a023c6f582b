#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "pdmsusy/cli.hpp"

namespace {

int run(pdmsusy::Command command, const std::string& config_path,
        const std::string& out_path) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config file " << config_path << "\n";
    return 2;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  pdmsusy::RunConfig cfg;
  try {
    cfg = pdmsusy::parse_config(buffer.str());
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  if (out_path.empty()) {
    return pdmsusy::execute(command, cfg, std::cout, std::cerr);
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 2;
  }
  return pdmsusy::execute(command, cfg, out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Position-dependent-mass SUSY laboratory: factorized Schrodinger "
      "spectra, partner potentials, and verification reports"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  const std::pair<const char*, pdmsusy::Command> commands[] = {
      {"spectrum", pdmsusy::Command::Spectrum},
      {"partners", pdmsusy::Command::Partners},
      {"verify", pdmsusy::Command::Verify},
      {"sweep", pdmsusy::Command::Sweep}};
  const char* descriptions[] = {
      "lowest-level energies against the closed-form spectrum",
      "superpotential and partner potentials tabulated over the grid",
      "run the verification checks and emit a JSON report",
      "spectra across the mass-parameter sweep with the max spread"};
  for (std::size_t i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    sub->add_option("config", config_path, "JSON run configuration file")
        ->required();
    sub->add_option("--out", out_path,
                    "write data to this file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [name, command] : commands) {
    if (app.got_subcommand(name)) {
      return run(command, config_path, out_path);
    }
  }
  return 2;
}
