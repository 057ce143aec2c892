#pragma once

#include <Eigen/Dense>

namespace symtop {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Tolerance used to admit a matrix as a rotation.
inline constexpr double kRotationTolerance = 1e-9;
/// Largest orthogonality defect reorthonormalize() will repair.
inline constexpr double kRepairThreshold = 0.1;
/// Antisymmetry tolerance accepted by vee().
inline constexpr double kAntisymmetryTolerance = 1e-9;

/// Max-norm of R^T R - I.
double orthogonality_defect(const Mat3& m);

/// A proper rotation matrix. Construction checks R^T R = I and det R = 1 to
/// within kRotationTolerance.
class Rotation {
 public:
  Rotation() : m_(Mat3::Identity()) {}
  explicit Rotation(const Mat3& m);

  static Rotation identity() { return Rotation(); }

  const Mat3& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  Vec3 column(int k) const { return m_.col(k); }

  Rotation inverse() const;

  Rotation operator*(const Rotation& other) const;
  Vec3 operator*(const Vec3& v) const { return m_ * v; }

  bool operator==(const Rotation& other) const { return m_ == other.m_; }

 private:
  struct Unchecked {};
  Rotation(const Mat3& m, Unchecked) : m_(m) {}

  Mat3 m_;
};

/// The hat isomorphism R^3 -> so(3): hat(v) * w == v.cross(w).
Mat3 hat(const Vec3& v);

/// Inverse of hat(). Throws NotAntisymmetric when |M + M^T|_max exceeds
/// kAntisymmetryTolerance.
Vec3 vee(const Mat3& m);

/// Rodrigues formula. Uses second-order Taylor coefficients below |v| = 1e-8.
Rotation exp_so3(const Vec3& v);

/// Nearest rotation in the polar-decomposition sense, computed with the
/// Newton iteration M <- (M + M^{-T}) / 2. Throws TooFarFromSO3 when the input
/// defect is 0.1 or more, or when det M <= 0.
Rotation reorthonormalize(const Mat3& m);

/// Levi-Civita symbol on indices {0, 1, 2}.
constexpr int levi_civita(int i, int j, int k) {
  return (i == j || j == k || i == k) ? 0 : ((j - i + 3) % 3 == 1 ? 1 : -1);
}

}  // namespace symtop
