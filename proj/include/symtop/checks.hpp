#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symtop {

/// Outcome of one numerically certified property.
struct CheckResult {
  std::string suite;
  std::string property;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// brackets, jacobi, poisson-map, casimirs, orbits, gradients, all
const std::vector<std::string>& check_suite_names();

/// Runs one property suite (or "all") on points drawn from `seed`.
/// Deterministic per seed. Throws InvalidArgument for an unknown suite.
std::vector<CheckResult> run_check_suite(const std::string& suite, std::uint64_t seed);

/// Seed for the i-th sample of a stream (splitmix64 of seed and i).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t i);

}  // namespace symtop
