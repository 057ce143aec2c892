#include "symtop/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/core.h>
#include <fmt/ostream.h>

#include "symtop/checks.hpp"
#include "symtop/config.hpp"
#include "symtop/error.hpp"
#include "symtop/orbits.hpp"
#include "symtop/reduction.hpp"

namespace symtop {
namespace {

struct Run {
  SpaceId space;
  Trajectory traj;
};

Run run(const RunConfig& cfg) {
  if (cfg.space == RunSpace::Full) {
    return {SpaceId::CotSE3, simulate(SpaceId::CotSE3, full_hamiltonian_field(cfg.body, cfg.potential),
                                      flatten(cfg.full_initial), cfg.options)};
  }
  return {SpaceId::Reduced, simulate(SpaceId::Reduced, reduced_hamiltonian_field(cfg.body, cfg.potential),
                                     flatten(cfg.reduced_initial), cfg.options)};
}

bool numeric_failure(const Error& e) {
  return e.code() == ErrorCode::NonFinite || e.code() == ErrorCode::TooFarFromSO3;
}

}  // namespace

std::string csv_row(SpaceId space, const Sample& s) {
  const Chart r = space == SpaceId::CotSE3 ? project_chart(space, s.z) : s.z;
  const auto L = layout(SpaceId::Reduced);
  std::string row = fmt::format("{:.17g}", s.t);
  for (int block : {L.x, L.p, L.nu, L.pi})
    for (int i = 0; i < 3; ++i) row += fmt::format(",{:.17g}", r[block + i]);
  row += fmt::format(",{:.17g},{:.17g},{:.17g},{:.17g}", s.monitor.energy, s.monitor.c1, s.monitor.c2,
                     s.monitor.ortho_defect);
  return row;
}

int cmd_simulate(const std::filesystem::path& config, const std::filesystem::path& out_csv, std::ostream& out,
                 std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_run_config(config);
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  }

  Run r;
  try {
    r = run(cfg);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return numeric_failure(e) ? kExitNonFinite : kExitValidation;
  }

  std::ofstream csv(out_csv);
  if (!csv) {
    fmt::print(err, "error: cannot write '{}'\n", out_csv.string());
    return kExitValidation;
  }
  csv << kCsvHeader << '\n';
  for (const auto& s : r.traj.samples) csv << csv_row(r.space, s) << '\n';
  csv.close();
  if (!csv) {
    fmt::print(err, "error: failed writing '{}'\n", out_csv.string());
    return kExitValidation;
  }

  const Monitor& m0 = r.traj.samples.front().monitor;
  const Monitor& m1 = r.traj.samples.back().monitor;
  double max_defect = 0.0;
  for (const auto& s : r.traj.samples) max_defect = std::max(max_defect, s.monitor.ortho_defect);
  fmt::print(out, "samples        {}\n", r.traj.samples.size());
  fmt::print(out, "final t        {:.17g}\n", r.traj.samples.back().t);
  fmt::print(out, "energy drift   {:.3e}\n", std::abs(m1.energy - m0.energy));
  fmt::print(out, "C1 drift       {:.3e}\n", std::abs(m1.c1 - m0.c1));
  fmt::print(out, "C2 drift       {:.3e}\n", std::abs(m1.c2 - m0.c2));
  fmt::print(out, "max |R^T R - I| {:.3e}\n", max_defect);
  return kExitOk;
}

int cmd_check(const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = run_check_suite(suite, seed);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  }
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    fmt::print(out, "{}  {:<12} {:<55} max={:.3e} tol={:.0e}\n", r.passed ? "PASS" : "FAIL", r.suite, r.property,
               r.max_residual, r.tolerance);
  }
  fmt::print(out, "{} of {} properties passed (seed {})\n",
             std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; }),
             results.size(), seed);
  return all ? kExitOk : kExitFailed;
}

int cmd_compare(const std::filesystem::path& config, std::optional<double> tol, std::ostream& out,
                std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_run_config(config);
    if (cfg.space != RunSpace::Full) throw ConfigError("compare needs a config with space = \"full\"");
    if (tol && !(*tol > 0.0)) throw ConfigError("--tol must be positive");
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  }
  const double threshold = tol.value_or(cfg.tolerance);

  double residual = 0.0;
  try {
    residual = commutation_residual(cfg.full_initial, cfg.body, cfg.potential, cfg.options);
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return numeric_failure(e) ? kExitNonFinite : kExitValidation;
  }
  const bool pass = residual <= threshold;
  fmt::print(out, "commutation residual {:.6e} (tol {:.1e}, dt {}, T {}, {})\n", residual, threshold,
             cfg.options.dt, cfg.options.T, to_string(cfg.options.method));
  fmt::print(out, "{}\n", pass ? "PASS" : "FAIL");
  return pass ? kExitOk : kExitFailed;
}

int cmd_orbit(const Vec3& nu, const Vec3& pi, int count, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  const Se3DualPoint q0{nu, pi};
  const OrbitLevel level = casimirs(q0);
  if (!(level.c1 > kLevelTolerance)) {
    fmt::print(err, "error: nu must be nonzero; orbits through nu = 0 are not symmetric-top leaves\n");
    return kExitValidation;
  }
  if (count < 0) {
    fmt::print(err, "error: --count must be non-negative\n");
    return kExitValidation;
  }
  fmt::print(out, "level C1 = {:.17g}  C2 = {:.17g}\n", level.c1, level.c2);

  const bool unit = std::abs(level.c1 - 1.0) <= kLevelTolerance;
  bool ok = true;
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const std::uint64_t s = sub_seed(seed, static_cast<std::uint64_t>(k));
    const SE3Element g{std::get<FullState>(random_state(SpaceId::CotSE3, s)).x, random_rotation(sub_seed(s, 1))};
    const Se3DualPoint q = coadjoint(g, q0);
    const bool on = on_level(q, level, kLevelTolerance);
    double residual = 0.0;
    try {
      residual = witness_residual(same_orbit_witness(q0, q), q0, q);
    } catch (const Error& e) {
      fmt::print(err, "sample {}: {}\n", k, e.what());
      ok = false;
      continue;
    }
    worst = std::max(worst, residual);
    ok = ok && on && residual <= 1e-9;
    fmt::print(out, "sample {:>3} nu=({:+.6f},{:+.6f},{:+.6f}) pi=({:+.6f},{:+.6f},{:+.6f}) on_level={} witness={:.3e}",
               k, q.nu.x(), q.nu.y(), q.nu.z(), q.pi.x(), q.pi.y(), q.pi.z(), on ? "yes" : "no", residual);
    if (unit) {
      const Vec3 n = q.nu.normalized();
      const Rotation frame = section(n);
      const Vec3 u = frame.column(0);
      const Vec3 v = frame.column(1);
      fmt::print(out, " B(e1,e2)={:+.6e}", magnetic_form(n, u, v, level.c2));
    }
    fmt::print(out, "\n");
  }
  if (!unit) fmt::print(out, "magnetic form not reported: defined for |nu| = 1 only\n");
  fmt::print(out, "max witness residual {:.3e}\n{}\n", worst, ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitFailed;
}

}  // namespace symtop
