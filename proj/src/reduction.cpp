#include "symtop/reduction.hpp"

#include <cmath>
#include <string>

#include "symtop/error.hpp"

namespace symtop {

Rotation S1Element::rotation() const { return exp_so3(Vec3(0.0, 0.0, theta)); }

Vec3 tau(const Rotation& r) { return r.column(2); }

Se3DualPoint tilde_tau(const CotSO3State& s) { return {tau(s.R), s.pi}; }

ReducedState project_full(const FullState& s) { return {s.x, s.p, tau(s.R), s.pi}; }

CotSO3State right_action(const Rotation& b, const CotSO3State& s) { return {s.R * b, s.pi}; }

FullState right_action(const Rotation& b, const FullState& s) {
  FullState out = s;
  out.R = s.R * b;
  return out;
}

Rotation section(const Vec3& nu) {
  const double norm = nu.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw Error(ErrorCode::ZeroNu, "cannot complete a frame around nu = 0");
  const Vec3 n = nu / norm;
  int axis = 0;
  n.cwiseAbs().minCoeff(&axis);
  const Vec3 e = Vec3::Unit(axis);
  const Vec3 e1 = (e - e.dot(n) * n).normalized();
  const Vec3 e2 = n.cross(e1);
  Mat3 m;
  m.col(0) = e1;
  m.col(1) = e2;
  m.col(2) = n;
  return Rotation(m);
}

CotSO3State lift(const Se3DualPoint& q) { return {section(q.nu), q.pi}; }

FullState lift(const ReducedState& s) { return {s.x, section(s.nu), s.p, s.pi}; }

SpaceId projected_space(SpaceId from) {
  switch (from) {
    case SpaceId::CotSO3: return SpaceId::Se3Dual;
    case SpaceId::CotSE3: return SpaceId::Reduced;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument,
              std::string(to_string(from)) + " has no rotation block to project");
}

Chart project_chart(SpaceId from, const Chart& z) {
  const SpaceId to = projected_space(from);
  if (z.size() != dimension(from)) throw Error(ErrorCode::DimensionMismatch, "chart length");
  const auto src = layout(from);
  const auto dst = layout(to);
  Chart out(dst.dim);
  if (dst.x >= 0) {
    out.segment<3>(dst.x) = z.segment<3>(src.x);
    out.segment<3>(dst.p) = z.segment<3>(src.p);
  }
  for (int i = 0; i < 3; ++i) out[dst.nu + i] = z[rot_index(from, i, 2)];
  out.segment<3>(dst.pi) = z.segment<3>(src.pi);
  return out;
}

ScalarField pullback(const ScalarField& f, SpaceId from) {
  const SpaceId to = projected_space(from);
  if (f.space != to) throw Error(ErrorCode::DimensionMismatch, "field does not live on the target space");
  const auto src = layout(from);
  const auto dst = layout(to);
  return {from, [f, from](const Chart& z) { return f(project_chart(from, z)); },
          [f, from, src, dst](const Chart& z) {
            const Chart g = f.grad(project_chart(from, z));
            Chart out = Chart::Zero(src.dim);
            if (dst.x >= 0) {
              out.segment<3>(src.x) = g.segment<3>(dst.x);
              out.segment<3>(src.p) = g.segment<3>(dst.p);
            }
            for (int i = 0; i < 3; ++i) out[rot_index(from, i, 2)] = g[dst.nu + i];
            out.segment<3>(src.pi) = g.segment<3>(dst.pi);
            return out;
          },
          f.kind};
}

double poisson_map_residual(const ScalarField& f, const ScalarField& g, const FullState& z) {
  const Chart zf = flatten(z);
  const Chart zr = flatten(project_full(z));
  return bracket(pullback(f, SpaceId::CotSE3), pullback(g, SpaceId::CotSE3), zf) - bracket(f, g, zr);
}

double poisson_map_residual(const ScalarField& f, const ScalarField& g, const CotSO3State& z) {
  const Chart zf = flatten(z);
  const Chart zr = flatten(tilde_tau(z));
  return bracket(pullback(f, SpaceId::CotSO3), pullback(g, SpaceId::CotSO3), zf) - bracket(f, g, zr);
}

}  // namespace symtop
