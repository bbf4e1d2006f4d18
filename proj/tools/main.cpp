#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

constexpr const char* kSweepHelp =
    "Randomized predicate/oracle agreement sweep.\n"
    "Map coefficients are drawn from the complex unit square and kept when the map is a\n"
    "nondegenerate self-map of the disk. Samples whose predicate conditions miss by less\n"
    "than 1e-3 (normalized) are rejected, so every kept sample is either exactly on the\n"
    "predicate variety or clearly off it. About a third are built to satisfy it.\n"
    "--conj names the family (jmu or jw), --weighted selects W = T_psi C_phi with\n"
    "psi = beta K_sigma(0), and --map picks the symbols: random, hermitian or unitary.";

void add_common(CLI::App* sub, h2::cli::RunConfig& cfg) {
  sub->add_option("--map", cfg.map, "Map coefficients a,b,c,d (sweep: random|hermitian|unitary)");
  sub->add_option("--conj", cfg.conj, "Conjugation jmu:<mu> or jw:<p>");
  sub->add_flag("--weighted", cfg.weighted, "Weighted operator with psi = beta K_sigma(0)");
  sub->add_option("--beta", cfg.beta, "Weight constant beta (complex literal)");
  sub->add_option("--grid", cfg.grid_n, "Kernel grid points per ring set");
  sub->add_option("--trunc", cfg.truncations, "Truncation sizes, e.g. 32,64,128")->delimiter(',');
  sub->add_option("--samples", cfg.samples, "Sweep sample count");
  sub->add_option("--seed", cfg.seed, "Sweep seed");
  sub->add_option("--out", cfg.out, "Output file");
  sub->add_option("--format", cfg.format, "json or csv");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"C-normality of composition and weighted composition operators on H^2"};
  app.require_subcommand(1);

  h2::cli::RunConfig cfg;
  CLI::App* classify = app.add_subcommand("classify", "Evaluate the theorem predicate for one configuration");
  CLI::App* verify = app.add_subcommand("verify", "Predicate plus kernel and matrix oracles");
  CLI::App* sweep = app.add_subcommand("sweep", kSweepHelp);
  for (CLI::App* sub : {classify, verify, sweep}) add_common(sub, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return h2::cli::kBadInput;
  }

  for (CLI::App* sub : {classify, verify, sweep}) {
    if (sub->count("--format") > 0) cfg.format_given = true;
  }
  if (*classify) cfg.command = h2::cli::Command::Classify;
  if (*verify) cfg.command = h2::cli::Command::Verify;
  if (*sweep) cfg.command = h2::cli::Command::Sweep;
  return h2::cli::run(cfg, std::cout, std::cerr);
}
