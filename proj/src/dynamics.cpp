#include "symtop/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symtop/error.hpp"
#include "symtop/reduction.hpp"

namespace symtop {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

Mat3 rot_block(const Chart& z, int offset) {
  Mat3 m;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) m(j, k) = z[offset + 3 * j + k];
  return m;
}

Vec3 nu_of(SpaceId space, const Chart& z) {
  const auto L = layout(space);
  if (L.nu >= 0) return z.segment<3>(L.nu);
  return Vec3(z[rot_index(space, 0, 2)], z[rot_index(space, 1, 2)], z[rot_index(space, 2, 2)]);
}

void repair(SpaceId space, Chart& z, const Chart& before) {
  const auto L = layout(space);
  switch (space) {
    case SpaceId::Reduced:
      z.segment<3>(L.nu).normalize();
      break;
    case SpaceId::Se3Dual: {
      const double target = before.segment<3>(L.nu).norm();
      const double now = z.segment<3>(L.nu).norm();
      if (now > 0.0) z.segment<3>(L.nu) *= target / now;
      break;
    }
    case SpaceId::CotSO3:
    case SpaceId::CotSE3: {
      const Mat3 r = reorthonormalize(rot_block(z, L.rot)).matrix();
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) z[L.rot + 3 * j + k] = r(j, k);
      break;
    }
  }
}

constexpr ChartLayout kRed = layout(SpaceId::Reduced);
constexpr ChartLayout kFull = layout(SpaceId::CotSE3);

}  // namespace

void BodyParams::validate() const {
  if (!positive_finite(M) || !positive_finite(I1) || !positive_finite(I3)) {
    throw Error(ErrorCode::InvalidArgument, "body parameters must be finite and positive (M=" +
                                                std::to_string(M) + ", I1=" + std::to_string(I1) +
                                                ", I3=" + std::to_string(I3) + ")");
  }
}

double reduced_hamiltonian(const ReducedState& s, const BodyParams& bp, const Potential& v) {
  return s.p.squaredNorm() / (2 * bp.M) + s.pi.squaredNorm() / (2 * bp.I1) + v.value(s.x, s.nu, bp.M);
}

double full_hamiltonian(const FullState& s, const BodyParams& bp, const Potential& v) {
  const Vec3 nu = tau(s.R);
  const double axial = nu.dot(s.pi);
  const double c = 1 / (2 * bp.I3) - 1 / (2 * bp.I1);
  return s.p.squaredNorm() / (2 * bp.M) + s.pi.squaredNorm() / (2 * bp.I1) + c * axial * axial +
         v.value(s.x, nu, bp.M);
}

ScalarField reduced_hamiltonian_field(const BodyParams& bp, const Potential& v) {
  bp.validate();
  return {SpaceId::Reduced,
          [bp, v](const Chart& z) {
            const Vec3 x = z.segment<3>(kRed.x);
            const Vec3 nu = z.segment<3>(kRed.nu);
            return z.segment<3>(kRed.p).squaredNorm() / (2 * bp.M) +
                   z.segment<3>(kRed.pi).squaredNorm() / (2 * bp.I1) + v.value(x, nu, bp.M);
          },
          [bp, v](const Chart& z) {
            const Vec3 x = z.segment<3>(kRed.x);
            const Vec3 nu = z.segment<3>(kRed.nu);
            Chart g(kRed.dim);
            g.segment<3>(kRed.x) = v.grad_x(x, nu, bp.M);
            g.segment<3>(kRed.p) = z.segment<3>(kRed.p) / bp.M;
            g.segment<3>(kRed.nu) = v.grad_nu(x, nu, bp.M);
            g.segment<3>(kRed.pi) = z.segment<3>(kRed.pi) / bp.I1;
            return g;
          }};
}

ScalarField full_hamiltonian_field(const BodyParams& bp, const Potential& v) {
  bp.validate();
  const double c = 1 / (2 * bp.I3) - 1 / (2 * bp.I1);
  return {SpaceId::CotSE3,
          [bp, v, c](const Chart& z) {
            const Vec3 x = z.segment<3>(kFull.x);
            const Vec3 nu = nu_of(SpaceId::CotSE3, z);
            const Vec3 pi = z.segment<3>(kFull.pi);
            const double axial = nu.dot(pi);
            return z.segment<3>(kFull.p).squaredNorm() / (2 * bp.M) + pi.squaredNorm() / (2 * bp.I1) +
                   c * axial * axial + v.value(x, nu, bp.M);
          },
          [bp, v, c](const Chart& z) {
            const Vec3 x = z.segment<3>(kFull.x);
            const Vec3 nu = nu_of(SpaceId::CotSE3, z);
            const Vec3 pi = z.segment<3>(kFull.pi);
            const double axial = nu.dot(pi);
            Chart g = Chart::Zero(kFull.dim);
            g.segment<3>(kFull.x) = v.grad_x(x, nu, bp.M);
            g.segment<3>(kFull.p) = z.segment<3>(kFull.p) / bp.M;
            const Vec3 dnu = 2 * c * axial * pi + v.grad_nu(x, nu, bp.M);
            for (int j = 0; j < 3; ++j) g[rot_index(SpaceId::CotSE3, j, 2)] = dnu[j];
            g.segment<3>(kFull.pi) = pi / bp.I1 + 2 * c * axial * nu;
            return g;
          }};
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::RK4: return "rk4";
    case Method::RK4Repair: return "rk4_repair";
  }
  return "?";
}

Chart step(SpaceId space, const ScalarField& h, const Chart& z, double dt, Method method) {
  if (h.space != space || z.size() != dimension(space)) {
    throw Error(ErrorCode::DimensionMismatch, "step: Hamiltonian or state not on " + std::string(to_string(space)));
  }
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  const Chart k1 = ham_vector_field(h, z);
  const Chart k2 = ham_vector_field(h, z + 0.5 * dt * k1);
  const Chart k3 = ham_vector_field(h, z + 0.5 * dt * k2);
  const Chart k4 = ham_vector_field(h, z + dt * k3);
  Chart next = z + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!next.allFinite()) throw Error(ErrorCode::NonFinite, "state left the finite range");
  if (method == Method::RK4Repair) repair(space, next, z);
  return next;
}

Monitor monitor(SpaceId space, const ScalarField& h, const Chart& z) {
  Monitor m;
  m.energy = h(z);
  const Vec3 nu = nu_of(space, z);
  m.c1 = nu.squaredNorm();
  m.c2 = nu.dot(z.segment<3>(layout(space).pi));
  if (layout(space).rot >= 0) m.ortho_defect = orthogonality_defect(rot_block(z, layout(space).rot));
  return m;
}

Trajectory simulate(SpaceId space, const ScalarField& h, const Chart& z0, const SimulationOptions& opt) {
  if (!(std::isfinite(opt.dt) && opt.dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (!(std::isfinite(opt.T) && opt.T > 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be positive");
  if (opt.sample_stride < 1) throw Error(ErrorCode::InvalidArgument, "sample_stride must be >= 1");
  if (z0.size() != dimension(space)) throw Error(ErrorCode::DimensionMismatch, "initial state length");
  if (!z0.allFinite()) throw Error(ErrorCode::NonFinite, "initial state is not finite");

  const long steps = std::max(1L, static_cast<long>(std::ceil(opt.T / opt.dt - 1e-9)));
  Trajectory traj;
  traj.space = space;
  traj.samples.reserve(static_cast<size_t>(steps / opt.sample_stride + 2));
  traj.samples.push_back({0.0, z0, monitor(space, h, z0)});

  Chart z = z0;
  for (long k = 1; k <= steps; ++k) {
    z = step(space, h, z, opt.dt, opt.method);
    if (k % opt.sample_stride == 0 || k == steps) {
      traj.samples.push_back({static_cast<double>(k) * opt.dt, z, monitor(space, h, z)});
    }
  }
  return traj;
}

ReducedState free_top_analytic(const ReducedState& s0, double t, const BodyParams& bp) {
  ReducedState s = s0;
  s.x = s0.x + t * s0.p / bp.M;
  s.nu = exp_so3(t * s0.pi / bp.I1) * s0.nu;
  return s;
}

Trajectory project_trajectory(const Trajectory& full) {
  Trajectory out;
  out.space = projected_space(full.space);
  out.samples.reserve(full.samples.size());
  for (const auto& s : full.samples) out.samples.push_back({s.t, project_chart(full.space, s.z), s.monitor});
  return out;
}

double commutation_residual(const FullState& z0, const BodyParams& bp, const Potential& v,
                            const SimulationOptions& opt) {
  const Trajectory full = simulate(SpaceId::CotSE3, full_hamiltonian_field(bp, v), flatten(z0), opt);
  const Trajectory reduced =
      simulate(SpaceId::Reduced, reduced_hamiltonian_field(bp, v), flatten(project_full(z0)), opt);
  const Trajectory projected = project_trajectory(full);
  double worst = 0.0;
  for (size_t i = 0; i < projected.samples.size(); ++i) {
    worst = std::max(worst, (projected.samples[i].z - reduced.samples[i].z).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace symtop
