#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symtop/commands.hpp"

namespace {

symtop::Vec3 parse_triple(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  symtop::Vec3 v;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= 3) throw CLI::ValidationError("expected three comma-separated numbers, got '" + text + "'");
    try {
      size_t used = 0;
      v[i] = std::stod(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw CLI::ValidationError("not a number: '" + part + "'");
    }
    ++i;
  }
  if (i != 3) throw CLI::ValidationError("expected three comma-separated numbers, got '" + text + "'");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric-top reduction toolkit: simulate, check, compare, orbit"};
  app.require_subcommand(1);

  std::string config;
  std::string out_csv;
  auto* simulate = app.add_subcommand("simulate", "Integrate a run config and write a CSV trajectory");
  simulate->add_option("--config", config, "JSON run config")->required();
  simulate->add_option("--out", out_csv, "CSV output path")->required();

  std::string suite;
  std::uint64_t seed = 0;
  auto* check = app.add_subcommand("check", "Run numerical property suites");
  check->add_option("--suite", suite, "brackets|jacobi|poisson-map|casimirs|orbits|gradients|all")->required();
  check->add_option("--seed", seed, "sampling seed");

  double tol = 0.0;
  auto* compare = app.add_subcommand("compare", "Compare projected full dynamics with reduced dynamics");
  compare->add_option("--config", config, "JSON run config with space = full")->required();
  auto* tol_opt = compare->add_option("--tol", tol, "pass threshold (default: config tolerance or 1e-6)");

  std::string nu_text;
  std::string pi_text;
  int count = 10;
  auto* orbit = app.add_subcommand("orbit", "Report the coadjoint orbit through (nu, pi)");
  orbit->add_option("--nu", nu_text, "a,b,c")->required();
  orbit->add_option("--pi", pi_text, "a,b,c")->required();
  orbit->add_option("--count", count, "number of orbit samples");
  orbit->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
    if (*orbit) {
      const symtop::Vec3 nu = parse_triple(nu_text);
      const symtop::Vec3 pi = parse_triple(pi_text);
      return symtop::cmd_orbit(nu, pi, count, seed, std::cout, std::cerr);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : symtop::kExitValidation;
  }

  if (*simulate) return symtop::cmd_simulate(config, out_csv, std::cout, std::cerr);
  if (*check) return symtop::cmd_check(suite, seed, std::cout, std::cerr);
  if (*compare) {
    std::optional<double> t;
    if (*tol_opt) t = tol;
    return symtop::cmd_compare(config, t, std::cout, std::cerr);
  }
  return symtop::kExitValidation;
}
