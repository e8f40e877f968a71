#include <iostream>

#include "CLI11.hpp"
#include "helixforge/cli/jobs.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact rational helices, rotation-minimizing frame approximation and sweep surfaces"};
  app.require_subcommand(1, 1);

  std::string config;
  std::string out;
  unsigned precision = 0;
  std::uint64_t seed = 0;
  for (const char* name : {"construct", "hermite", "rmf", "sweep"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config, "JSON job configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory")->required();
    sub->add_option("--precision", precision, "working precision in decimal digits")->check(CLI::Range(16u, 10000u));
    sub->add_option("--seed", seed, "seed recorded with the job");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : helixforge::cli::kSchema;
  }

  CLI::App* sub = app.get_subcommands().front();
  helixforge::cli::RunOptions options;
  options.out = out;
  if (sub->count("--precision")) options.precision = precision;
  if (sub->count("--seed")) options.seed = seed;

  helixforge::cli::RunResult r = helixforge::cli::run_file(sub->get_name(), config, options);
  for (const auto& m : r.messages) (r.exit_code == 0 ? std::cout : std::cerr) << m << '\n';
  for (const auto& f : r.files) std::cout << "wrote " << f.string() << '\n';
  return r.exit_code;
}
