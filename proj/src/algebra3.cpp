#include "symtop/algebra3.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/LU>

#include "symtop/error.hpp"

namespace symtop {

double orthogonality_defect(const Mat3& m) {
  return (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff();
}

Rotation::Rotation(const Mat3& m) : m_(m) {
  if (!m.allFinite()) throw Error(ErrorCode::NotARotation, "non-finite entries");
  const double defect = orthogonality_defect(m);
  const double det_err = std::abs(m.determinant() - 1.0);
  if (defect > kRotationTolerance || det_err > kRotationTolerance) {
    throw Error(ErrorCode::NotARotation, "orthogonality defect " + std::to_string(defect) +
                                             ", |det - 1| = " + std::to_string(det_err));
  }
}

Rotation Rotation::inverse() const { return Rotation(m_.transpose(), Unchecked{}); }

Rotation Rotation::operator*(const Rotation& other) const {
  return Rotation(m_ * other.m_, Unchecked{});
}

Mat3 hat(const Vec3& v) {
  Mat3 m;
  // clang-format off
  m <<   0.0, -v.z(),  v.y(),
       v.z(),    0.0, -v.x(),
      -v.y(),  v.x(),    0.0;
  // clang-format on
  return m;
}

Vec3 vee(const Mat3& m) {
  const double defect = (m + m.transpose()).cwiseAbs().maxCoeff();
  if (defect > kAntisymmetryTolerance) {
    throw Error(ErrorCode::NotAntisymmetric, "|M + M^T|_max = " + std::to_string(defect));
  }
  // xi_i = -1/2 eps_ikl M_kl, averaged over the two antisymmetric entries
  return Vec3(0.5 * (m(2, 1) - m(1, 2)), 0.5 * (m(0, 2) - m(2, 0)), 0.5 * (m(1, 0) - m(0, 1)));
}

Rotation exp_so3(const Vec3& v) {
  const double theta2 = v.squaredNorm();
  const double theta = std::sqrt(theta2);
  double a;
  double b;
  if (theta < 1e-8) {
    a = 1.0 - theta2 / 6.0;
    b = 0.5 - theta2 / 24.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  const Mat3 k = hat(v);
  return Rotation(Mat3::Identity() + a * k + b * k * k);
}

Rotation reorthonormalize(const Mat3& m) {
  if (!m.allFinite()) throw Error(ErrorCode::TooFarFromSO3, "non-finite entries");
  const double defect = orthogonality_defect(m);
  if (defect >= kRepairThreshold) {
    throw Error(ErrorCode::TooFarFromSO3, "orthogonality defect " + std::to_string(defect));
  }
  if (m.determinant() <= 0.0) throw Error(ErrorCode::TooFarFromSO3, "det <= 0");

  Mat3 x = m;
  for (int iter = 0; iter < 50; ++iter) {
    const Mat3 next = 0.5 * (x + x.inverse().transpose());
    const double change = (next - x).cwiseAbs().maxCoeff();
    x = next;
    if (change <= 4.0 * std::numeric_limits<double>::epsilon()) break;
  }
  return Rotation(x);
}

}  // namespace symtop
