#include <cmath>

#include "symtop/dynamics.hpp"

namespace symtop {
namespace {

Vec3 unit_or_zero(const Vec3& g) {
  const double n = g.norm();
  return n > 0.0 ? Vec3(g / n) : Vec3::Zero();
}

Vec3 dipole_field(const Dipole& d, const Vec3& x) {
  const double r = x.norm();
  const Vec3 xh = x / r;
  return (3.0 * xh * d.mu.dot(xh) - d.mu) / (r * r * r);
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

Potential Potential::linear_gravity(const Vec3& g, double chi) {
  Potential p;
  p.terms_.emplace_back(LinearGravity{g, chi});
  return p;
}

Potential Potential::dipole(double m, const Vec3& mu) {
  Potential p;
  p.terms_.emplace_back(Dipole{m, mu});
  return p;
}

Potential Potential::sum(const std::vector<Potential>& parts) {
  Potential p;
  for (const auto& part : parts) p.terms_.insert(p.terms_.end(), part.terms_.begin(), part.terms_.end());
  return p;
}

double Potential::value(const Vec3& x, const Vec3& nu, double mass) const {
  double v = 0.0;
  for (const auto& term : terms_) {
    v += std::visit(Overloaded{
                        [&](const LinearGravity& g) { return mass * g.g.dot(x) + g.chi * nu.dot(unit_or_zero(g.g)); },
                        [&](const Dipole& d) { return -d.m * nu.dot(dipole_field(d, x)); },
                    },
                    term);
  }
  return v;
}

Vec3 Potential::grad_x(const Vec3& x, const Vec3& nu, double mass) const {
  Vec3 out = Vec3::Zero();
  for (const auto& term : terms_) {
    out += std::visit(Overloaded{
                          [&](const LinearGravity& g) -> Vec3 { return mass * g.g; },
                          [&](const Dipole& d) -> Vec3 {
                            const double r2 = x.squaredNorm();
                            const double r = std::sqrt(r2);
                            const double r5 = r2 * r2 * r;
                            const double r7 = r5 * r2;
                            const double nx = nu.dot(x);
                            const double mx = d.mu.dot(x);
                            const Vec3 g = 3.0 * (nu * mx + d.mu * nx) / r5 - 15.0 * nx * mx * x / r7 +
                                           3.0 * nu.dot(d.mu) * x / r5;
                            return -d.m * g;
                          },
                      },
                      term);
  }
  return out;
}

Vec3 Potential::grad_nu(const Vec3& x, const Vec3& /*nu*/, double /*mass*/) const {
  Vec3 out = Vec3::Zero();
  for (const auto& term : terms_) {
    out += std::visit(Overloaded{
                          [&](const LinearGravity& g) -> Vec3 { return g.chi * unit_or_zero(g.g); },
                          [&](const Dipole& d) -> Vec3 { return -d.m * dipole_field(d, x); },
                      },
                      term);
  }
  return out;
}

std::vector<PotentialPreset> potential_presets() {
  const Potential gravity = Potential::linear_gravity(Vec3(0.0, 0.0, -1.0), -0.5);
  const Potential dipole = Potential::dipole(0.5, Vec3(0.0, 0.0, 1.0));
  return {
      {"zero", Potential::zero()},
      {"gravity", gravity},
      {"dipole", dipole},
      {"gravity+dipole", Potential::sum({gravity, dipole})},
  };
}

}  // namespace symtop
