#pragma once

#include "symtop/phase.hpp"
#include "symtop/poisson.hpp"

namespace symtop {

/// Element of the symmetry subgroup S^1 = {Z in SO(3) : Z e3 = e3}, i.e. a
/// rotation about the body symmetry axis.
struct S1Element {
  double theta = 0.0;

  Rotation rotation() const;
};

/// nu = R e3, the body symmetry axis in the inertial frame.
Vec3 tau(const Rotation& r);

/// (R, pi) -> (tau(R), pi).
Se3DualPoint tilde_tau(const CotSO3State& s);

/// ((x, R), (p, pi)) -> (x, p, tau(R), pi).
ReducedState project_full(const FullState& s);

/// Right translation R -> R B; every other field is unchanged.
CotSO3State right_action(const Rotation& b, const CotSO3State& s);
FullState right_action(const Rotation& b, const FullState& s);

/// A rotation whose third column is nu/|nu|. The first column comes from the
/// coordinate axis least aligned with nu, Gram-Schmidt orthogonalized.
Rotation section(const Vec3& nu);

/// Preimages under tilde_tau / project_full built from section().
CotSO3State lift(const Se3DualPoint& q);
FullState lift(const ReducedState& s);

/// Chart-level projections CotSO3 -> Se3Dual and CotSE3 -> Reduced. These
/// only read the third column of R and do not require R to be orthogonal.
Chart project_chart(SpaceId from, const Chart& z);

/// Target space of project_chart(from, .).
SpaceId projected_space(SpaceId from);

/// F o P as a field on the source space, with gradient J_P^T grad F.
/// `from` is CotSO3 or CotSE3 and `f` must live on projected_space(from).
ScalarField pullback(const ScalarField& f, SpaceId from);

/// {F o P, G o P}(z) - {F, G}(P(z)) for P = project_full.
double poisson_map_residual(const ScalarField& f, const ScalarField& g, const FullState& z);

/// Same for P = tilde_tau.
double poisson_map_residual(const ScalarField& f, const ScalarField& g, const CotSO3State& z);

}  // namespace symtop
