#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qhh/commands.hpp"

namespace {

struct Cli {
  qhh::RunConfig cfg;
  std::string out_path;
};

void add_common(CLI::App* sub, Cli& cli, std::string& format, std::int64_t& max_degree,
                bool with_degree) {
  sub->add_option("--s", cli.cfg.s, "number of quiver vertices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--char", cli.cfg.characteristic,
                  "field characteristic: 0 for the rationals, else a prime")
      ->capture_default_str();
  if (with_degree)
    sub->add_option("--max-degree", max_degree,
                    "largest cohomological degree to process (default 3s+2)")
        ->check(CLI::NonNegativeNumber);
  sub->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", cli.out_path, "write the output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hochschild cohomology workbench for the doubled cyclic quiver algebras"};
  app.require_subcommand(1);

  Cli cli;
  std::string format = "text";
  std::int64_t max_degree = -1;

  auto* dims = app.add_subcommand(
      "dims", "dimension table of the cohomology, computed vs closed form");
  auto* vres = app.add_subcommand(
      "verify-resolution", "check the bimodule resolution: complex, exact, minimal");
  auto* vbas = app.add_subcommand(
      "verify-bases", "check the stated image/kernel/cohomology bases degree by degree");
  auto* yon = app.add_subcommand(
      "yoneda", "table of ring generator products through the explicit lifting");
  auto* ring = app.add_subcommand(
      "ring-check", "full ring structure check: presentation, liftings, nilpotence");

  add_common(dims, cli, format, max_degree, true);
  add_common(vres, cli, format, max_degree, true);
  add_common(vbas, cli, format, max_degree, true);
  add_common(yon, cli, format, max_degree, false);
  add_common(ring, cli, format, max_degree, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (max_degree >= 0) cli.cfg.max_degree = static_cast<std::uint32_t>(max_degree);
  if (format == "json")
    cli.cfg.format = qhh::OutputFormat::json;
  else if (format == "csv")
    cli.cfg.format = qhh::OutputFormat::csv;

  qhh::CommandResult result;
  try {
    if (dims->parsed())
      result = qhh::run_dims(cli.cfg);
    else if (vres->parsed())
      result = qhh::run_verify_resolution(cli.cfg);
    else if (vbas->parsed())
      result = qhh::run_verify_bases(cli.cfg);
    else if (yon->parsed())
      result = qhh::run_yoneda(cli.cfg);
    else
      result = qhh::run_ring_check(cli.cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (cli.out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out{cli.out_path, std::ios::binary};
    if (!out) {
      std::cerr << "error: cannot open " << cli.out_path << " for writing\n";
      return 2;
    }
    out << result.output;
  }
  return result.exit_code;
}
