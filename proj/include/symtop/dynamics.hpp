#pragma once

#include <string>
#include <variant>
#include <vector>

#include "symtop/phase.hpp"
#include "symtop/poisson.hpp"

namespace symtop {

/// Mass and principal moments of a symmetric top (I1 = I2).
struct BodyParams {
  double M = 1.0;
  double I1 = 1.0;
  double I3 = 1.0;

  /// Throws InvalidArgument unless every entry is finite and positive.
  void validate() const;
};

/// V = M <g, x> + chi <nu, g/|g|>.
struct LinearGravity {
  Vec3 g = Vec3::Zero();
  double chi = 0.0;
};

/// Body dipole m nu in the field of a point dipole mu at the origin:
/// V = -m <nu, b(x)>, b(x) = (3 xh <mu, xh> - mu) / |x|^3.
struct Dipole {
  double m = 0.0;
  Vec3 mu = Vec3::Zero();
};

/// External potential V(x, nu) as a sum of terms; no terms is the zero
/// potential.
class Potential {
 public:
  using Term = std::variant<LinearGravity, Dipole>;

  Potential() = default;

  static Potential zero() { return {}; }
  static Potential linear_gravity(const Vec3& g, double chi);
  static Potential dipole(double m, const Vec3& mu);
  static Potential sum(const std::vector<Potential>& parts);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  double value(const Vec3& x, const Vec3& nu, double mass) const;
  Vec3 grad_x(const Vec3& x, const Vec3& nu, double mass) const;
  Vec3 grad_nu(const Vec3& x, const Vec3& nu, double mass) const;

 private:
  std::vector<Term> terms_;
};

/// Named potentials used by the check suites and the acceptance tests.
struct PotentialPreset {
  std::string name;
  Potential potential;
};
std::vector<PotentialPreset> potential_presets();

/// h = p^2/(2M) + pi^2/(2 I1) + V(x, nu).
double reduced_hamiltonian(const ReducedState& s, const BodyParams& bp, const Potential& v);

/// H = p^2/(2M) + pi^2/(2 I1) + (1/(2 I3) - 1/(2 I1)) <nu, pi>^2 + V(x, nu)
/// with nu = tau(R).
double full_hamiltonian(const FullState& s, const BodyParams& bp, const Potential& v);

/// The two Hamiltonians as fields on the Reduced and CotSE3 charts.
ScalarField reduced_hamiltonian_field(const BodyParams& bp, const Potential& v);
ScalarField full_hamiltonian_field(const BodyParams& bp, const Potential& v);

enum class Method { RK4, RK4Repair };

std::string_view to_string(Method m) noexcept;

/// One classical RK4 step of z_dot = lambda(z) grad H(z). With RK4Repair the
/// constraint is restored afterwards: nu is normalized on Reduced, rescaled to
/// its pre-step length on Se3Dual, and R is reorthonormalized on CotSO3 and
/// CotSE3. Throws NonFinite when the result leaves the finite range.
Chart step(SpaceId space, const ScalarField& h, const Chart& z, double dt, Method method);

struct Monitor {
  double energy = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double ortho_defect = 0.0;
};

/// Invariants of a chart point; nu is read from R's third column on the
/// spaces that carry R, and ortho_defect is 0 on spaces without R.
Monitor monitor(SpaceId space, const ScalarField& h, const Chart& z);

struct Sample {
  double t = 0.0;
  Chart z;
  Monitor monitor;
};

struct Trajectory {
  SpaceId space = SpaceId::Reduced;
  std::vector<Sample> samples;
};

struct SimulationOptions {
  double dt = 1e-3;
  double T = 1.0;
  Method method = Method::RK4Repair;
  int sample_stride = 1;
};

/// Steps ceil(T/dt) times (t_k = k dt) and records every sample_stride-th
/// state plus the last one. Throws InvalidArgument on bad options.
Trajectory simulate(SpaceId space, const ScalarField& h, const Chart& z0, const SimulationOptions& opt);

/// Closed-form free top (V = 0): x moves uniformly, p and pi are constant and
/// nu rotates about pi at rate |pi|/I1.
ReducedState free_top_analytic(const ReducedState& s0, double t, const BodyParams& bp);

/// Projects every sample of a CotSE3 trajectory to the Reduced chart.
Trajectory project_trajectory(const Trajectory& full);

/// max over samples of |project_full(full run) - reduced run|_inf, the full
/// run using full_hamiltonian from z0 and the reduced run using
/// reduced_hamiltonian from project_full(z0) with the same options.
double commutation_residual(const FullState& z0, const BodyParams& bp, const Potential& v,
                            const SimulationOptions& opt);

}  // namespace symtop
