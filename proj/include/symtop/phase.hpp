#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>

#include <Eigen/Core>

#include "symtop/algebra3.hpp"

namespace symtop {

/// Flat coordinate vector on one of the phase-space charts.
using Chart = Eigen::VectorXd;

/// The four phase spaces of the reduction chain.
enum class SpaceId {
  CotSO3,   ///< T*SO(3): (R row-major, pi), dimension 12
  Se3Dual,  ///< se(3)*: (nu, pi), dimension 6
  CotSE3,   ///< T*SE(3): (x, p, R row-major, pi), dimension 18
  Reduced,  ///< T*R^3 x W1: (x, p, nu, pi), dimension 12
};

std::string_view to_string(SpaceId space) noexcept;

/// Offset of each coordinate block within a chart; -1 when the block is
/// absent from that space. Every module indexes charts through this table.
struct ChartLayout {
  int dim;
  int x;
  int p;
  int rot;  ///< first of 9 row-major entries R_jk at rot + 3j + k
  int nu;
  int pi;
};

constexpr ChartLayout layout(SpaceId space) {
  switch (space) {
    case SpaceId::CotSO3: return {12, -1, -1, 0, -1, 9};
    case SpaceId::Se3Dual: return {6, -1, -1, -1, 0, 3};
    case SpaceId::CotSE3: return {18, 0, 3, 6, -1, 15};
    case SpaceId::Reduced: return {12, 0, 3, -1, 6, 9};
  }
  return {0, -1, -1, -1, -1, -1};
}

constexpr int dimension(SpaceId space) { return layout(space).dim; }

/// Chart index of R_jk on a space that carries a rotation.
constexpr int rot_index(SpaceId space, int j, int k) { return layout(space).rot + 3 * j + k; }

inline constexpr double kUnitNuTolerance = 1e-9;

struct CotSO3State {
  Rotation R;
  Vec3 pi = Vec3::Zero();
};

struct Se3DualPoint {
  Vec3 nu = Vec3::Zero();
  Vec3 pi = Vec3::Zero();
};

struct FullState {
  Vec3 x = Vec3::Zero();
  Rotation R;
  Vec3 p = Vec3::Zero();
  Vec3 pi = Vec3::Zero();
};

/// Point of T*R^3 x W1; |nu| = 1 is checked by unflatten() and by
/// check_unit_nu().
struct ReducedState {
  Vec3 x = Vec3::Zero();
  Vec3 p = Vec3::Zero();
  Vec3 nu{0.0, 0.0, 1.0};
  Vec3 pi = Vec3::Zero();
};

using AnyState = std::variant<CotSO3State, Se3DualPoint, FullState, ReducedState>;

/// Space a state type lives in.
SpaceId space_of(const AnyState& state);

/// Throws InvariantViolation unless ||nu|^2 - 1| <= kUnitNuTolerance.
void check_unit_nu(const Vec3& nu);

Chart flatten(const CotSO3State& s);
Chart flatten(const Se3DualPoint& s);
Chart flatten(const FullState& s);
Chart flatten(const ReducedState& s);

/// Throws DimensionMismatch when `state` does not belong to `space`.
Chart flatten(const AnyState& state, SpaceId space);

/// Exact inverse of flatten(). Throws DimensionMismatch on a wrong length and
/// propagates Rotation / unit-nu invariant failures.
AnyState unflatten(std::span<const double> z, SpaceId space);

template <class State>
State unflatten_as(std::span<const double> z, SpaceId space) {
  return std::get<State>(unflatten(z, space));
}

inline std::span<const double> as_span(const Chart& z) { return {z.data(), static_cast<size_t>(z.size())}; }

/// Deterministic test-point sampler. R is Haar-uniform on SO(3) (uniform axis,
/// angle density (1 - cos t)/pi), nu uniform on S^2, and x, p, pi components
/// uniform in [-1, 1].
AnyState random_state(SpaceId space, std::uint64_t seed);

/// Haar-uniform random rotation from the given seed.
Rotation random_rotation(std::uint64_t seed);

}  // namespace symtop
