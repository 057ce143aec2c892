#include "symtop/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "symtop/dynamics.hpp"
#include "symtop/error.hpp"
#include "symtop/orbits.hpp"
#include "symtop/poisson.hpp"
#include "symtop/reduction.hpp"

namespace symtop {
namespace {

constexpr SpaceId kSpaces[] = {SpaceId::CotSO3, SpaceId::Se3Dual, SpaceId::CotSE3, SpaceId::Reduced};

double uniform(std::uint64_t seed, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(sub_seed(seed, 0x5eed) >> 11) * 0x1.0p-53;
}

// Generic chart point: every coordinate uniform in [-1, 1].
Chart random_chart(SpaceId space, std::uint64_t seed) {
  const int n = dimension(space);
  Chart z(n);
  for (int i = 0; i < n; ++i) z[i] = uniform(sub_seed(seed, i), -1, 1);
  return z;
}

SE3Element random_group_element(std::uint64_t seed) {
  const Vec3 a(uniform(sub_seed(seed, 1), -1, 1), uniform(sub_seed(seed, 2), -1, 1),
               uniform(sub_seed(seed, 3), -1, 1));
  return {a, random_rotation(sub_seed(seed, 4))};
}

CheckResult make(std::string suite, std::string property, double residual, double tol) {
  return {std::move(suite), std::move(property), residual, tol, residual <= tol};
}

std::vector<CheckResult> brackets_suite(std::uint64_t seed) {
  const std::string s = "brackets";
  std::vector<CheckResult> out;

  double antisym = 0.0;
  for (SpaceId space : kSpaces) {
    for (int k = 0; k < 1000; ++k) {
      const auto lam = structure_matrix(space, random_chart(space, sub_seed(seed, k))).lambda;
      antisym = std::max(antisym, (lam + lam.transpose()).cwiseAbs().maxCoeff());
    }
  }
  out.push_back(make(s, "antisymmetry (exact)", antisym, 0.0));

  double hvf = 0.0;
  for (SpaceId space : kSpaces) {
    for (int k = 0; k < 100; ++k) {
      const Chart z = random_chart(space, sub_seed(seed, 2000 + k));
      const ScalarField h = random_polynomial_field(space, sub_seed(seed, 3000 + k));
      const Chart field = ham_vector_field(h, z);
      for (int a = 0; a < dimension(space); ++a) {
        hvf = std::max(hvf, std::abs(field[a] - bracket(coordinate_field(space, a), h, z)));
      }
    }
  }
  out.push_back(make(s, "hamiltonian vector field = {z_a, H}", hvf, 1e-12));

  double leibniz = 0.0;
  for (SpaceId space : kSpaces) {
    for (int k = 0; k < 100; ++k) {
      const Chart z = random_chart(space, sub_seed(seed, 4000 + k));
      const ScalarField f = random_polynomial_field(space, sub_seed(seed, 5000 + k));
      const ScalarField g = random_polynomial_field(space, sub_seed(seed, 6000 + k));
      const ScalarField h = random_polynomial_field(space, sub_seed(seed, 7000 + k));
      const double lhs = bracket(f * g, h, z);
      const double rhs = f(z) * bracket(g, h, z) + g(z) * bracket(f, h, z);
      leibniz = std::max(leibniz, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
  }
  out.push_back(make(s, "Leibniz rule", leibniz, 1e-9));

  // Right translations R -> RB preserve the T*SO(3) table.
  double right_inv = 0.0;
  const SpaceId space = SpaceId::CotSO3;
  const int pi0 = layout(space).pi;
  for (int k = 0; k < 100; ++k) {
    const auto st = std::get<CotSO3State>(random_state(space, sub_seed(seed, 8000 + k)));
    const Mat3 b = random_rotation(sub_seed(seed, 9000 + k)).matrix();
    const Chart z = flatten(st);
    const Mat3 rb = st.R.matrix() * b;
    auto rb_field = [&](int j, int n) {
      const int dim = dimension(space);
      Chart grad = Chart::Zero(dim);
      for (int m = 0; m < 3; ++m) grad[rot_index(space, j, m)] = b(m, n);
      return ScalarField{space, [grad](const Chart& w) { return grad.dot(w); },
                         [grad](const Chart&) { return grad; }};
    };
    for (int j = 0; j < 3; ++j) {
      for (int n = 0; n < 3; ++n) {
        const ScalarField f = rb_field(j, n);
        for (int i = 0; i < 3; ++i) {
          double expected = 0.0;
          for (int l = 0; l < 3; ++l) expected += levi_civita(i, j, l) * rb(l, n);
          right_inv = std::max(right_inv, std::abs(bracket(coordinate_field(space, pi0 + i), f, z) - expected));
        }
        for (int jj = 0; jj < 3; ++jj)
          for (int nn = 0; nn < 3; ++nn) right_inv = std::max(right_inv, std::abs(bracket(f, rb_field(jj, nn), z)));
      }
    }
  }
  out.push_back(make(s, "right-translation invariance of T*SO(3) table", right_inv, 1e-12));
  return out;
}

std::vector<CheckResult> jacobi_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (SpaceId space : kSpaces) {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      worst = std::max(worst, max_jacobi_residual(space, random_chart(space, sub_seed(seed, 100 * k + 7))));
    }
    out.push_back(make("jacobi", "Jacobi identity on " + std::string(to_string(space)), worst, 1e-10));
  }
  return out;
}

std::vector<CheckResult> poisson_map_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  double full = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto z = std::get<FullState>(random_state(SpaceId::CotSE3, sub_seed(seed, k)));
    for (int a = 0; a < dimension(SpaceId::Reduced); ++a)
      for (int b = 0; b < dimension(SpaceId::Reduced); ++b)
        full = std::max(full, std::abs(poisson_map_residual(coordinate_field(SpaceId::Reduced, a),
                                                            coordinate_field(SpaceId::Reduced, b), z)));
  }
  out.push_back(make("poisson-map", "T*SE(3) -> P1 projection is Poisson", full, 1e-10));

  double cot = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto z = std::get<CotSO3State>(random_state(SpaceId::CotSO3, sub_seed(seed, 500 + k)));
    for (int a = 0; a < dimension(SpaceId::Se3Dual); ++a)
      for (int b = 0; b < dimension(SpaceId::Se3Dual); ++b)
        cot = std::max(cot, std::abs(poisson_map_residual(coordinate_field(SpaceId::Se3Dual, a),
                                                          coordinate_field(SpaceId::Se3Dual, b), z)));
  }
  out.push_back(make("poisson-map", "T*SO(3) -> se(3)* projection is Poisson", cot, 1e-10));

  double inv = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto z = std::get<FullState>(random_state(SpaceId::CotSE3, sub_seed(seed, 900 + k)));
    const S1Element zt{uniform(sub_seed(seed, 950 + k), -3.2, 3.2)};
    const Chart a = flatten(project_full(z));
    const Chart b = flatten(project_full(right_action(zt.rotation(), z)));
    inv = std::max(inv, (a - b).cwiseAbs().maxCoeff());
  }
  out.push_back(make("poisson-map", "projection is S1-invariant", inv, 1e-12));
  return out;
}

std::vector<CheckResult> casimirs_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  double inv = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Chart zq = random_chart(SpaceId::Se3Dual, sub_seed(seed, k));
    const Se3DualPoint q{zq.segment<3>(0), zq.segment<3>(3)};
    const SE3Element g = random_group_element(sub_seed(seed, 2000 + k));
    const OrbitLevel before = casimirs(q);
    const OrbitLevel after = casimirs(coadjoint(g, q));
    inv = std::max({inv, std::abs(before.c1 - after.c1), std::abs(before.c2 - after.c2)});
  }
  out.push_back(make("casimirs", "C1, C2 invariant under coadjoint action", inv, 1e-12));

  double centre = 0.0;
  const ScalarField c1 = casimir_c1_field();
  const ScalarField c2 = casimir_c2_field();
  for (int k = 0; k < 100; ++k) {
    const Chart z = random_chart(SpaceId::Se3Dual, sub_seed(seed, 4000 + k));
    const ScalarField f = random_polynomial_field(SpaceId::Se3Dual, sub_seed(seed, 5000 + k));
    centre = std::max({centre, std::abs(bracket(c1, f, z)), std::abs(bracket(c2, f, z))});
  }
  out.push_back(make("casimirs", "{C_k, F} = 0 for random polynomial F", centre, 1e-12));
  return out;
}

std::vector<CheckResult> orbits_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  double witness = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto q1 = std::get<Se3DualPoint>(random_state(SpaceId::Se3Dual, sub_seed(seed, k)));
    Se3DualPoint q2;
    switch (k % 4) {
      case 0:
      case 1:
        q2 = coadjoint(random_group_element(sub_seed(seed, 3000 + k)), q1);
        break;
      case 2: {  // antipodal nu
        const Vec3 r(uniform(sub_seed(seed, 5000 + k), -1, 1), uniform(sub_seed(seed, 6000 + k), -1, 1),
                     uniform(sub_seed(seed, 7000 + k), -1, 1));
        q2.nu = -q1.nu;
        q2.pi = r - r.dot(q2.nu) * q2.nu + q1.nu.dot(q1.pi) * q2.nu;
        break;
      }
      default: {  // nearly antipodal nu
        const Vec3 tilt = section(q1.nu).column(0) * 1e-7;
        q2 = coadjoint(SE3Element{Vec3::Zero(), exp_so3(tilt)},
                       Se3DualPoint{-q1.nu, -q1.pi});
        break;
      }
    }
    witness = std::max(witness, witness_residual(same_orbit_witness(q1, q2), q1, q2));
  }
  out.push_back(make("orbits", "same-level pairs lie on one coadjoint orbit", witness, 1e-9));

  double antisym = 0.0;
  double rep = 0.0;
  double type2 = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto q = std::get<Se3DualPoint>(random_state(SpaceId::Se3Dual, sub_seed(seed, 10000 + k)));
    const Vec3& nu = q.nu;
    const Rotation frame = section(nu);
    const Vec3 u = uniform(sub_seed(seed, 11000 + k), -1, 1) * frame.column(0) +
                   uniform(sub_seed(seed, 12000 + k), -1, 1) * frame.column(1);
    const Vec3 v = uniform(sub_seed(seed, 13000 + k), -1, 1) * frame.column(0) +
                   uniform(sub_seed(seed, 14000 + k), -1, 1) * frame.column(1);
    const double c2 = uniform(sub_seed(seed, 15000 + k), -3, 3);
    const double lambda = uniform(sub_seed(seed, 16000 + k), -5, 5);
    antisym = std::max(antisym, std::abs(magnetic_form(nu, u, v, c2) + magnetic_form(nu, v, u, c2)));
    const Vec3 xi = nu.cross(u);
    const Vec3 eta = nu.cross(v);
    rep = std::max(rep, std::abs(magnetic_form_raw(nu, xi + lambda * nu, eta, c2) - magnetic_form(nu, u, v, c2)));
    type2 = std::max(type2, std::abs(magnetic_form(nu, u, v, 0.0)));
  }
  out.push_back(make("orbits", "magnetic form antisymmetric (exact)", antisym, 0.0));
  out.push_back(make("orbits", "magnetic form representative-independent", rep, 1e-12));
  out.push_back(make("orbits", "magnetic form vanishes at c2 = 0 (exact)", type2, 0.0));
  return out;
}

std::vector<CheckResult> gradients_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const BodyParams bp{1.5, 0.8, 1.3};
  for (const auto& preset : potential_presets()) {
    const ScalarField h = reduced_hamiltonian_field(bp, preset.potential);
    const ScalarField hf = full_hamiltonian_field(bp, preset.potential);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      auto s = std::get<ReducedState>(random_state(SpaceId::Reduced, sub_seed(seed, k)));
      // Keep clear of the dipole singularity at the origin.
      s.x = s.x.normalized() * uniform(sub_seed(seed, 300 + k), 0.5, 2.0);
      worst = std::max(worst, gradient_mismatch(h, flatten(s)));
      worst = std::max(worst, gradient_mismatch(hf, flatten(lift(s))));
    }
    out.push_back(make("gradients", "analytic gradient matches central differences: " + preset.name, worst, 1e-5));
  }
  return out;
}

using SuiteFn = std::vector<CheckResult> (*)(std::uint64_t);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"brackets", brackets_suite},   {"jacobi", jacobi_suite},   {"poisson-map", poisson_map_suite},
      {"casimirs", casimirs_suite}, {"orbits", orbits_suite}, {"gradients", gradients_suite},
  };
  return table;
}

}  // namespace

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {"brackets", "jacobi", "poisson-map", "casimirs",
                                                 "orbits",   "gradients", "all"};
  return names;
}

std::vector<CheckResult> run_check_suite(const std::string& suite, std::uint64_t seed) {
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const auto& name : check_suite_names()) {
      if (name == "all") continue;
      auto part = suites().at(name)(seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto it = suites().find(suite);
  if (it == suites().end()) throw Error(ErrorCode::InvalidArgument, "unknown check suite '" + suite + "'");
  return it->second(seed);
}

}  // namespace symtop
