#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symtop/algebra3.hpp"
#include "symtop/checks.hpp"
#include "symtop/dynamics.hpp"
#include "symtop/error.hpp"
#include "symtop/orbits.hpp"
#include "symtop/phase.hpp"
#include "symtop/poisson.hpp"
#include "symtop/reduction.hpp"

namespace py = pybind11;
using namespace symtop;

namespace {

py::dict trajectory_dict(const Trajectory& traj) {
  const auto n = static_cast<Eigen::Index>(traj.samples.size());
  const int dim = dimension(traj.space);
  Eigen::VectorXd t(n);
  Eigen::MatrixXd z(n, dim);
  Eigen::MatrixXd mon(n, 4);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = traj.samples[static_cast<size_t>(i)];
    t[i] = s.t;
    z.row(i) = s.z.transpose();
    mon.row(i) << s.monitor.energy, s.monitor.c1, s.monitor.c2, s.monitor.ortho_defect;
  }
  py::dict d;
  d["space"] = traj.space;
  d["t"] = t;
  d["z"] = z;
  d["energy"] = Eigen::VectorXd(mon.col(0));
  d["c1"] = Eigen::VectorXd(mon.col(1));
  d["c2"] = Eigen::VectorXd(mon.col(2));
  d["ortho_defect"] = Eigen::VectorXd(mon.col(3));
  return d;
}

SimulationOptions options(double dt, double T, Method method, int stride) {
  SimulationOptions o;
  o.dt = dt;
  o.T = T;
  o.method = method;
  o.sample_stride = stride;
  return o;
}

}  // namespace

PYBIND11_MODULE(_symtop, m) {
  m.doc() = "Poisson reduction of T*SE(3) for the symmetric top";

  py::register_exception<Error>(m, "SymtopError", PyExc_ValueError);

  // algebra3
  m.def("hat", &hat, py::arg("v"));
  m.def("vee", &vee, py::arg("m"));
  m.def("exp_so3", [](const Vec3& v) { return Mat3(exp_so3(v).matrix()); }, py::arg("v"));
  m.def("reorthonormalize", [](const Mat3& a) { return Mat3(reorthonormalize(a).matrix()); }, py::arg("m"));
  m.def("orthogonality_defect", &orthogonality_defect, py::arg("m"));

  // phase
  py::enum_<SpaceId>(m, "SpaceId")
      .value("CotSO3", SpaceId::CotSO3)
      .value("Se3Dual", SpaceId::Se3Dual)
      .value("CotSE3", SpaceId::CotSE3)
      .value("Reduced", SpaceId::Reduced);
  m.def("dimension", [](SpaceId s) { return dimension(s); });
  m.def("random_chart_state", [](SpaceId s, std::uint64_t seed) { return Chart(flatten(random_state(s, seed), s)); },
        py::arg("space"), py::arg("seed"), "Flattened random_state(space, seed).");

  // poisson
  m.def("structure_matrix", [](SpaceId s, const Chart& z) { return Eigen::MatrixXd(structure_matrix(s, z).lambda); },
        py::arg("space"), py::arg("z"));
  m.def("jacobi_residual", &jacobi_residual, py::arg("space"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));
  m.def("max_jacobi_residual", &max_jacobi_residual, py::arg("space"), py::arg("z"));

  // reduction
  m.def("tau", [](const Mat3& r) { return Vec3(tau(Rotation(r))); }, py::arg("R"));
  m.def("s1_rotation", [](double theta) { return Mat3(S1Element{theta}.rotation().matrix()); }, py::arg("theta"));
  m.def("section", [](const Vec3& nu) { return Mat3(section(nu).matrix()); }, py::arg("nu"));
  m.def("project_chart", &project_chart, py::arg("space"), py::arg("z"));

  // orbits
  m.def("casimirs", [](const Vec3& nu, const Vec3& pi) {
    const auto l = casimirs({nu, pi});
    return py::make_tuple(l.c1, l.c2);
  }, py::arg("nu"), py::arg("pi"));
  m.def("coadjoint", [](const Vec3& a, const Mat3& A, const Vec3& nu, const Vec3& pi) {
    const auto q = coadjoint({a, Rotation(A)}, {nu, pi});
    return py::make_tuple(q.nu, q.pi);
  }, py::arg("a"), py::arg("A"), py::arg("nu"), py::arg("pi"));
  m.def("same_orbit_witness", [](const Vec3& nu1, const Vec3& pi1, const Vec3& nu2, const Vec3& pi2) {
    const auto g = same_orbit_witness({nu1, pi1}, {nu2, pi2});
    return py::make_tuple(g.a, Mat3(g.A.matrix()));
  }, py::arg("nu1"), py::arg("pi1"), py::arg("nu2"), py::arg("pi2"));
  m.def("magnetic_form", &magnetic_form, py::arg("nu"), py::arg("u"), py::arg("v"), py::arg("c2"));

  // dynamics
  py::class_<BodyParams>(m, "BodyParams")
      .def(py::init([](double M, double I1, double I3) {
             BodyParams bp{M, I1, I3};
             bp.validate();
             return bp;
           }),
           py::arg("M"), py::arg("I1"), py::arg("I3"))
      .def_readonly("M", &BodyParams::M)
      .def_readonly("I1", &BodyParams::I1)
      .def_readonly("I3", &BodyParams::I3);

  py::class_<Potential>(m, "Potential")
      .def_static("zero", &Potential::zero)
      .def_static("linear_gravity", &Potential::linear_gravity, py::arg("g"), py::arg("chi"))
      .def_static("dipole", &Potential::dipole, py::arg("m"), py::arg("mu"))
      .def_static("sum", &Potential::sum, py::arg("parts"))
      .def("value", &Potential::value, py::arg("x"), py::arg("nu"), py::arg("mass"));
  m.def("potential_presets", [] {
    py::dict d;
    for (const auto& p : potential_presets()) d[py::str(p.name)] = p.potential;
    return d;
  });

  py::enum_<Method>(m, "Method").value("RK4", Method::RK4).value("RK4Repair", Method::RK4Repair);

  m.def("reduced_hamiltonian", [](const Chart& z, const BodyParams& bp, const Potential& v) {
    return reduced_hamiltonian(unflatten_as<ReducedState>(as_span(z), SpaceId::Reduced), bp, v);
  }, py::arg("z"), py::arg("body"), py::arg("potential"));
  m.def("full_hamiltonian", [](const Chart& z, const BodyParams& bp, const Potential& v) {
    return full_hamiltonian(unflatten_as<FullState>(as_span(z), SpaceId::CotSE3), bp, v);
  }, py::arg("z"), py::arg("body"), py::arg("potential"));

  m.def("simulate_reduced", [](const Chart& z0, const BodyParams& bp, const Potential& v, double dt, double T,
                               Method method, int stride) {
    return trajectory_dict(simulate(SpaceId::Reduced, reduced_hamiltonian_field(bp, v), z0,
                                    options(dt, T, method, stride)));
  }, py::arg("z0"), py::arg("body"), py::arg("potential"), py::arg("dt"), py::arg("T"),
        py::arg("method") = Method::RK4Repair, py::arg("sample_stride") = 1);
  m.def("simulate_full", [](const Chart& z0, const BodyParams& bp, const Potential& v, double dt, double T,
                            Method method, int stride) {
    return trajectory_dict(simulate(SpaceId::CotSE3, full_hamiltonian_field(bp, v), z0,
                                    options(dt, T, method, stride)));
  }, py::arg("z0"), py::arg("body"), py::arg("potential"), py::arg("dt"), py::arg("T"),
        py::arg("method") = Method::RK4Repair, py::arg("sample_stride") = 1);
  m.def("free_top_analytic", [](const Chart& z0, double t, const BodyParams& bp) {
    return Chart(flatten(free_top_analytic(unflatten_as<ReducedState>(as_span(z0), SpaceId::Reduced), t, bp)));
  }, py::arg("z0"), py::arg("t"), py::arg("body"));
  m.def("commutation_residual", [](const Chart& z0, const BodyParams& bp, const Potential& v, double dt, double T,
                                   Method method) {
    return commutation_residual(unflatten_as<FullState>(as_span(z0), SpaceId::CotSE3), bp, v,
                                options(dt, T, method, 1));
  }, py::arg("z0"), py::arg("body"), py::arg("potential"), py::arg("dt"), py::arg("T"),
        py::arg("method") = Method::RK4Repair);

  // checks
  m.def("run_check_suite", [](const std::string& suite, std::uint64_t seed) {
    py::list out;
    for (const auto& r : run_check_suite(suite, seed)) {
      py::dict d;
      d["suite"] = r.suite;
      d["property"] = r.property;
      d["max_residual"] = r.max_residual;
      d["tolerance"] = r.tolerance;
      d["passed"] = r.passed;
      out.append(d);
    }
    return out;
  }, py::arg("suite"), py::arg("seed") = 0);
}
