#pragma once

#include "symtop/phase.hpp"
#include "symtop/poisson.hpp"

namespace symtop {

/// Group element (a, A) of SE(3).
struct SE3Element {
  Vec3 a = Vec3::Zero();
  Rotation A;

  static SE3Element identity() { return {}; }
};

/// (a1 + A1 a2, A1 A2).
SE3Element operator*(const SE3Element& g1, const SE3Element& g2);

/// Joint level (c1, c2) = (|nu|^2, <nu, pi>) of the two Casimirs.
struct OrbitLevel {
  double c1 = 0.0;
  double c2 = 0.0;
};

OrbitLevel casimirs(const Se3DualPoint& q);

/// C1 = |nu|^2 and C2 = <nu, pi> as fields on se(3)*.
ScalarField casimir_c1_field();
ScalarField casimir_c2_field();

/// Coadjoint action: (nu, pi) -> (A nu, a x A nu + A pi).
Se3DualPoint coadjoint(const SE3Element& g, const Se3DualPoint& q);

inline constexpr double kLevelTolerance = 1e-9;

/// Constructs g with coadjoint(g, q1) == q2 for two points on the same joint
/// level. A maps nu1/|nu1| onto nu2/|nu2| (antipodal pairs go through a
/// half-turn about an axis orthogonal to nu1), then
/// a = nu2 x (pi2 - A pi1) / c1.
///
/// Throws ZeroNu when c1 <= kLevelTolerance and NotSameLevel when the
/// Casimirs differ by more than kLevelTolerance.
SE3Element same_orbit_witness(const Se3DualPoint& q1, const Se3DualPoint& q2);

/// Max-norm distance between coadjoint(g, q1) and q2.
double witness_residual(const SE3Element& g, const Se3DualPoint& q1, const Se3DualPoint& q2);

/// -c2 <xi x eta, nu> for raw representatives xi, eta of the tangent vectors
/// xi x nu, eta x nu. No preconditions.
double magnetic_form_raw(const Vec3& nu, const Vec3& xi, const Vec3& eta, double c2);

/// Magnetic 2-form on the unit sphere evaluated on tangent vectors u, v at nu,
/// using the representatives xi = nu x u, eta = nu x v. Throws NotUnit or
/// NotTangent when the inputs are off the sphere / tangent plane by more than
/// 1e-9.
double magnetic_form(const Vec3& nu, const Vec3& u, const Vec3& v, double c2);

bool on_level(const Se3DualPoint& q, const OrbitLevel& level, double tol);

}  // namespace symtop
