#include <CLI11.hpp>
#include <iostream>

#include "cmwild/cli.hpp"
#include "cmwild/error.hpp"

int main(int argc, char** argv) {
  using namespace cmwild::cli;
  CLI::App app{"cmwild: CM-wildness criterion and MCM family verification"};
  JobConfig cfg;
  std::string window, format = "json";

  app.add_option("command", cfg.command, "check | hypersurface | ci | family | iso | resolve | hilbert | verify")
      ->required()
      ->check(CLI::IsMember({"check", "hypersurface", "ci", "family", "iso", "resolve", "hilbert", "verify"}));
  app.add_option("--ring", cfg.ring_path, "ring file {\"vars\":[...],\"relations\":[...],\"p\":P}");
  app.add_option("--instance", cfg.instance_paths, "family instance file (repeat for iso)");
  app.add_option("--report", cfg.report_path, "wildness report to re-verify");
  app.add_option("--sequence", cfg.sequence, "regular sequence, comma separated, e.g. \"x^2,y^2\"");
  app.add_option("--c-window", window, "degrees to scan, a..b");
  app.add_option("--field-char", cfg.field_char, "prime characteristic (overrides the ring file)");
  app.add_option("--seed", cfg.seed, "seed for every randomized step");
  app.add_option("--budget", cfg.budget, "rejected candidates allowed in the sequence search");
  app.add_option("--length", cfg.length, "resolve: homological length");
  app.add_option("--max-degree", cfg.max_degree, "hilbert: last degree tabulated");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;
  if (!window.empty()) {
    try {
      cfg.c_window = parse_window(window);
    } catch (const cmwild::InputError& e) {
      std::cerr << "input error: " << e.what() << '\n';
      return kInputError;
    }
  }
  return run(cfg, std::cout, std::cerr);
}
