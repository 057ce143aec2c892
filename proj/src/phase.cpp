#include "symtop/phase.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "symtop/error.hpp"

namespace symtop {
namespace {

// Platform-stable uniform draws; std::uniform_real_distribution is not
// specified bit-for-bit across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  Vec3 box() { return Vec3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)); }

  Vec3 sphere() {
    const double z = uniform(-1, 1);
    const double phi = uniform(0, 2 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1 - z * z));
    return Vec3(r * std::cos(phi), r * std::sin(phi), z);
  }

  Rotation rotation() {
    const Vec3 axis = sphere();
    // Haar measure on SO(3) has angle density (1 - cos t) / pi on [0, pi].
    double angle;
    do {
      angle = uniform(0, std::numbers::pi);
    } while (uniform(0, 2) > 1 - std::cos(angle));
    return exp_so3(angle * axis);
  }

 private:
  std::mt19937_64 rng_;
};

Vec3 seg(std::span<const double> z, int offset) { return Vec3(z[offset], z[offset + 1], z[offset + 2]); }

Mat3 rot_block(std::span<const double> z, int offset) {
  Mat3 m;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m(j, k) = z[offset + 3 * j + k];
  return m;
}

void put(Chart& z, int offset, const Vec3& v) { z.segment<3>(offset) = v; }

void put(Chart& z, int offset, const Mat3& m) {
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) z[offset + 3 * j + k] = m(j, k);
}

}  // namespace

std::string_view to_string(SpaceId space) noexcept {
  switch (space) {
    case SpaceId::CotSO3: return "CotSO3";
    case SpaceId::Se3Dual: return "Se3Dual";
    case SpaceId::CotSE3: return "CotSE3";
    case SpaceId::Reduced: return "Reduced";
  }
  return "?";
}

SpaceId space_of(const AnyState& state) {
  static constexpr SpaceId kSpaces[] = {SpaceId::CotSO3, SpaceId::Se3Dual, SpaceId::CotSE3,
                                        SpaceId::Reduced};
  return kSpaces[state.index()];
}

void check_unit_nu(const Vec3& nu) {
  const double err = std::abs(nu.squaredNorm() - 1.0);
  if (!(err <= kUnitNuTolerance)) {
    throw Error(ErrorCode::InvariantViolation, "|nu|^2 - 1 = " + std::to_string(err));
  }
}

Chart flatten(const CotSO3State& s) {
  constexpr auto L = layout(SpaceId::CotSO3);
  Chart z(L.dim);
  put(z, L.rot, s.R.matrix());
  put(z, L.pi, s.pi);
  return z;
}

Chart flatten(const Se3DualPoint& s) {
  constexpr auto L = layout(SpaceId::Se3Dual);
  Chart z(L.dim);
  put(z, L.nu, s.nu);
  put(z, L.pi, s.pi);
  return z;
}

Chart flatten(const FullState& s) {
  constexpr auto L = layout(SpaceId::CotSE3);
  Chart z(L.dim);
  put(z, L.x, s.x);
  put(z, L.p, s.p);
  put(z, L.rot, s.R.matrix());
  put(z, L.pi, s.pi);
  return z;
}

Chart flatten(const ReducedState& s) {
  constexpr auto L = layout(SpaceId::Reduced);
  Chart z(L.dim);
  put(z, L.x, s.x);
  put(z, L.p, s.p);
  put(z, L.nu, s.nu);
  put(z, L.pi, s.pi);
  return z;
}

Chart flatten(const AnyState& state, SpaceId space) {
  if (space_of(state) != space) {
    throw Error(ErrorCode::DimensionMismatch, std::string("state is ") +
                                                  std::string(to_string(space_of(state))) +
                                                  ", requested " + std::string(to_string(space)));
  }
  return std::visit([](const auto& s) { return flatten(s); }, state);
}

AnyState unflatten(std::span<const double> z, SpaceId space) {
  const auto L = layout(space);
  if (static_cast<int>(z.size()) != L.dim) {
    throw Error(ErrorCode::DimensionMismatch, std::string(to_string(space)) + " expects " +
                                                  std::to_string(L.dim) + " coordinates, got " +
                                                  std::to_string(z.size()));
  }
  switch (space) {
    case SpaceId::CotSO3:
      return CotSO3State{Rotation(rot_block(z, L.rot)), seg(z, L.pi)};
    case SpaceId::Se3Dual:
      return Se3DualPoint{seg(z, L.nu), seg(z, L.pi)};
    case SpaceId::CotSE3:
      return FullState{seg(z, L.x), Rotation(rot_block(z, L.rot)), seg(z, L.p), seg(z, L.pi)};
    case SpaceId::Reduced: {
      ReducedState s{seg(z, L.x), seg(z, L.p), seg(z, L.nu), seg(z, L.pi)};
      check_unit_nu(s.nu);
      return s;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown space");
}

Rotation random_rotation(std::uint64_t seed) { return Sampler(seed).rotation(); }

AnyState random_state(SpaceId space, std::uint64_t seed) {
  Sampler s(seed);
  switch (space) {
    case SpaceId::CotSO3: {
      Rotation r = s.rotation();
      return CotSO3State{r, s.box()};
    }
    case SpaceId::Se3Dual: {
      Vec3 nu = s.sphere();
      return Se3DualPoint{nu, s.box()};
    }
    case SpaceId::CotSE3: {
      FullState f;
      f.x = s.box();
      f.R = s.rotation();
      f.p = s.box();
      f.pi = s.box();
      return f;
    }
    case SpaceId::Reduced: {
      ReducedState r;
      r.x = s.box();
      r.p = s.box();
      r.nu = s.sphere();
      r.pi = s.box();
      return r;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown space");
}

}  // namespace symtop
