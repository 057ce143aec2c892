#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "symtop/algebra3.hpp"
#include "symtop/dynamics.hpp"

namespace symtop {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,      ///< a check or comparison did not pass
  kExitValidation = 2,  ///< bad config, arguments or I/O
  kExitNonFinite = 3,   ///< integration left the finite range
};

/// CSV header written by cmd_simulate.
inline constexpr const char* kCsvHeader =
    "t,x1,x2,x3,p1,p2,p3,nu1,nu2,nu3,pi1,pi2,pi3,energy,C1,C2,ortho_defect";

/// One CSV row for a trajectory sample; the chart may be Reduced or CotSE3.
std::string csv_row(SpaceId space, const Sample& s);

int cmd_simulate(const std::filesystem::path& config, const std::filesystem::path& out_csv, std::ostream& out,
                 std::ostream& err);

int cmd_check(const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err);

int cmd_compare(const std::filesystem::path& config, std::optional<double> tol, std::ostream& out,
                std::ostream& err);

int cmd_orbit(const Vec3& nu, const Vec3& pi, int count, std::uint64_t seed, std::ostream& out,
              std::ostream& err);

}  // namespace symtop
