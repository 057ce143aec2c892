#pragma once

#include <cstdint>
#include <random>

#include "symtop/phase.hpp"

namespace symtop::testing {

/// Independent sampler for test inputs (kept apart from the library sampler).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Vec3 vec(double lo = -1.0, double hi = 1.0) { return Vec3(uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)); }
  Vec3 unit() {
    Vec3 v;
    do {
      v = vec();
    } while (v.norm() < 0.1 || v.norm() > 1.0);
    return v.normalized();
  }
  Chart chart(SpaceId space) {
    Chart z(dimension(space));
    for (auto& c : z) c = uniform();
    return z;
  }

 private:
  std::mt19937_64 gen_;
};

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace symtop::testing
