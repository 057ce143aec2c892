#include "symtop/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symtop/error.hpp"
#include "symtop/reduction.hpp"

namespace symtop {
namespace {

// Rotation taking unit u onto unit w when u.w >= 0.
Mat3 align_unit(const Vec3& u, const Vec3& w) {
  const Vec3 axis = u.cross(w);
  const Mat3 k = hat(axis);
  return Mat3::Identity() + k + k * k / (1.0 + u.dot(w));
}

constexpr ChartLayout L = layout(SpaceId::Se3Dual);

}  // namespace

SE3Element operator*(const SE3Element& g1, const SE3Element& g2) {
  return {g1.a + g1.A * g2.a, g1.A * g2.A};
}

OrbitLevel casimirs(const Se3DualPoint& q) { return {q.nu.squaredNorm(), q.nu.dot(q.pi)}; }

ScalarField casimir_c1_field() {
  return {SpaceId::Se3Dual, [](const Chart& z) { return z.segment<3>(L.nu).squaredNorm(); },
          [](const Chart& z) {
            Chart g = Chart::Zero(L.dim);
            g.segment<3>(L.nu) = 2.0 * z.segment<3>(L.nu);
            return g;
          }};
}

ScalarField casimir_c2_field() {
  return {SpaceId::Se3Dual, [](const Chart& z) { return z.segment<3>(L.nu).dot(z.segment<3>(L.pi)); },
          [](const Chart& z) {
            Chart g(L.dim);
            g.segment<3>(L.nu) = z.segment<3>(L.pi);
            g.segment<3>(L.pi) = z.segment<3>(L.nu);
            return g;
          }};
}

Se3DualPoint coadjoint(const SE3Element& g, const Se3DualPoint& q) {
  const Vec3 nu = g.A * q.nu;
  return {nu, g.a.cross(nu) + g.A * q.pi};
}

SE3Element same_orbit_witness(const Se3DualPoint& q1, const Se3DualPoint& q2) {
  const OrbitLevel l1 = casimirs(q1);
  const OrbitLevel l2 = casimirs(q2);
  if (l1.c1 <= kLevelTolerance) throw Error(ErrorCode::ZeroNu, "c1 = " + std::to_string(l1.c1));
  if (std::abs(l1.c1 - l2.c1) > kLevelTolerance || std::abs(l1.c2 - l2.c2) > kLevelTolerance) {
    throw Error(ErrorCode::NotSameLevel, "levels (" + std::to_string(l1.c1) + ", " +
                                             std::to_string(l1.c2) + ") and (" +
                                             std::to_string(l2.c1) + ", " +
                                             std::to_string(l2.c2) + ")");
  }

  const Vec3 u = q1.nu.normalized();
  const Vec3 w = q2.nu.normalized();
  Mat3 a_mat;
  if (u.dot(w) >= 0.0) {
    a_mat = align_unit(u, w);
  } else {
    // Half-turn about n (orthogonal to u) sends u to -u, then align -u with w.
    const Vec3 n = section(u).column(0);
    const Mat3 flip = 2.0 * n * n.transpose() - Mat3::Identity();
    a_mat = align_unit(-u, w) * flip;
  }
  SE3Element g{Vec3::Zero(), reorthonormalize(a_mat)};
  g.a = q2.nu.cross(q2.pi - g.A * q1.pi) / l1.c1;
  return g;
}

double witness_residual(const SE3Element& g, const Se3DualPoint& q1, const Se3DualPoint& q2) {
  const Se3DualPoint img = coadjoint(g, q1);
  return std::max((img.nu - q2.nu).cwiseAbs().maxCoeff(), (img.pi - q2.pi).cwiseAbs().maxCoeff());
}

double magnetic_form_raw(const Vec3& nu, const Vec3& xi, const Vec3& eta, double c2) {
  return -c2 * xi.cross(eta).dot(nu);
}

double magnetic_form(const Vec3& nu, const Vec3& u, const Vec3& v, double c2) {
  const double unit_err = std::abs(nu.norm() - 1.0);
  if (!(unit_err <= 1e-9)) throw Error(ErrorCode::NotUnit, "||nu| - 1| = " + std::to_string(unit_err));
  for (const Vec3* t : {&u, &v}) {
    const double off = std::abs(t->dot(nu));
    if (!(off <= 1e-9 * std::max(1.0, t->norm()))) {
      throw Error(ErrorCode::NotTangent, "<t, nu> = " + std::to_string(off));
    }
  }
  return magnetic_form_raw(nu, nu.cross(u), nu.cross(v), c2);
}

bool on_level(const Se3DualPoint& q, const OrbitLevel& level, double tol) {
  const OrbitLevel l = casimirs(q);
  return std::abs(l.c1 - level.c1) <= tol && std::abs(l.c2 - level.c2) <= tol;
}

}  // namespace symtop
