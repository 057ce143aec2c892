#include "symtop/poisson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "symtop/error.hpp"

namespace symtop {
namespace {

void check_chart(SpaceId space, const Chart& z) {
  if (z.size() != dimension(space)) {
    throw Error(ErrorCode::DimensionMismatch, std::string(to_string(space)) + " expects " +
                                                  std::to_string(dimension(space)) +
                                                  " coordinates, got " + std::to_string(z.size()));
  }
}

void check_same_space(const ScalarField& f, const ScalarField& g) {
  if (f.space != g.space) {
    throw Error(ErrorCode::DimensionMismatch, std::string("fields on ") +
                                                  std::string(to_string(f.space)) + " and " +
                                                  std::string(to_string(g.space)));
  }
}

std::vector<Eigen::MatrixXd> compute_derivative(SpaceId space) {
  const int n = dimension(space);
  const Chart zero = Chart::Zero(n);
  const Eigen::MatrixXd base = structure_matrix(space, zero).lambda;
  std::vector<Eigen::MatrixXd> out;
  out.reserve(n);
  for (int d = 0; d < n; ++d) {
    out.push_back(structure_matrix(space, Chart::Unit(n, d)).lambda - base);
  }
  return out;
}

}  // namespace

StructureMatrix structure_matrix(SpaceId space, const Chart& z) {
  check_chart(space, z);
  const auto L = layout(space);
  Eigen::MatrixXd lam = Eigen::MatrixXd::Zero(L.dim, L.dim);
  auto set = [&lam](int a, int b, double v) {
    lam(a, b) = v;
    lam(b, a) = -v;
  };

  if (L.x >= 0) {
    for (int i = 0; i < 3; ++i) set(L.x + i, L.p + i, 1.0);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const int l = 3 - i - j;
      set(L.pi + i, L.pi + j, levi_civita(i, j, l) * z[L.pi + l]);
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const int l = 3 - i - j;
      const double e = levi_civita(i, j, l);
      if (L.rot >= 0) {
        for (int k = 0; k < 3; ++k) set(L.pi + i, L.rot + 3 * j + k, e * z[L.rot + 3 * l + k]);
      }
      if (L.nu >= 0) set(L.pi + i, L.nu + j, e * z[L.nu + l]);
    }
  }
  return {space, std::move(lam)};
}

const std::vector<Eigen::MatrixXd>& structure_derivative(SpaceId space) {
  static const std::array<std::vector<Eigen::MatrixXd>, 4> cache = {
      compute_derivative(SpaceId::CotSO3), compute_derivative(SpaceId::Se3Dual),
      compute_derivative(SpaceId::CotSE3), compute_derivative(SpaceId::Reduced)};
  return cache[static_cast<int>(space)];
}

ScalarField coordinate_field(SpaceId space, int index) {
  const int n = dimension(space);
  if (index < 0 || index >= n) {
    throw Error(ErrorCode::DimensionMismatch, "coordinate index " + std::to_string(index) +
                                                  " out of range for " +
                                                  std::string(to_string(space)));
  }
  return {space, [index](const Chart& z) { return z[index]; },
          [index, n](const Chart&) { return Chart(Chart::Unit(n, index)); }};
}

ScalarField constant_field(SpaceId space, double c) {
  const int n = dimension(space);
  return {space, [c](const Chart&) { return c; }, [n](const Chart&) { return Chart(Chart::Zero(n)); }};
}

ScalarField operator+(const ScalarField& f, const ScalarField& g) {
  check_same_space(f, g);
  const auto kind = (f.kind == GradientKind::Analytic && g.kind == GradientKind::Analytic)
                        ? GradientKind::Analytic
                        : GradientKind::FiniteDifference;
  return {f.space, [f, g](const Chart& z) { return f(z) + g(z); },
          [f, g](const Chart& z) { return Chart(f.grad(z) + g.grad(z)); }, kind};
}

ScalarField operator*(const ScalarField& f, const ScalarField& g) {
  check_same_space(f, g);
  const auto kind = (f.kind == GradientKind::Analytic && g.kind == GradientKind::Analytic)
                        ? GradientKind::Analytic
                        : GradientKind::FiniteDifference;
  return {f.space, [f, g](const Chart& z) { return f(z) * g(z); },
          [f, g](const Chart& z) { return Chart(f(z) * g.grad(z) + g(z) * f.grad(z)); }, kind};
}

ScalarField operator*(double s, const ScalarField& f) {
  return {f.space, [s, f](const Chart& z) { return s * f(z); },
          [s, f](const Chart& z) { return Chart(s * f.grad(z)); }, f.kind};
}

Chart finite_difference_gradient(const ScalarField& f, const Chart& z, double step) {
  Chart g(z.size());
  Chart zp = z;
  for (Eigen::Index d = 0; d < z.size(); ++d) {
    zp[d] = z[d] + step;
    const double up = f(zp);
    zp[d] = z[d] - step;
    const double down = f(zp);
    zp[d] = z[d];
    g[d] = (up - down) / (2 * step);
  }
  return g;
}

ScalarField finite_difference_field(SpaceId space, ScalarField::ValueFn value, double step) {
  ScalarField f{space, value, {}, GradientKind::FiniteDifference};
  f.gradient = [value, space, step](const Chart& z) {
    return finite_difference_gradient(ScalarField{space, value, {}}, z, step);
  };
  return f;
}

double gradient_mismatch(const ScalarField& f, const Chart& z, double step) {
  const Chart fd = finite_difference_gradient(f, z, step);
  const double scale = std::max(fd.cwiseAbs().maxCoeff(), 1.0);
  return (f.grad(z) - fd).cwiseAbs().maxCoeff() / scale;
}

ScalarField random_polynomial_field(SpaceId space, std::uint64_t seed) {
  const int n = dimension(space);
  std::mt19937_64 rng(seed);
  auto draw = [&rng] { return -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const double c = draw();
  Chart b(n);
  for (int i = 0; i < n; ++i) b[i] = draw();
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = draw();
  q = 0.5 * (q + q.transpose()).eval();
  return {space, [c, b, q](const Chart& z) { return c + b.dot(z) + z.dot(q * z); },
          [b, q](const Chart& z) { return Chart(b + 2.0 * q * z); }};
}

double bracket(const ScalarField& f, const ScalarField& g, const Chart& z) {
  check_same_space(f, g);
  const auto lam = structure_matrix(f.space, z);
  return f.grad(z).dot(lam.lambda * g.grad(z));
}

Chart ham_vector_field(const ScalarField& h, const Chart& z) {
  const auto lam = structure_matrix(h.space, z);
  return lam.lambda * h.grad(z);
}

double jacobi_residual(SpaceId space, int a, int b, int c, const Chart& z) {
  const int n = dimension(space);
  for (int idx : {a, b, c}) {
    if (idx < 0 || idx >= n) throw Error(ErrorCode::DimensionMismatch, "index out of range");
  }
  const Eigen::MatrixXd lam = structure_matrix(space, z).lambda;
  const auto& dlam = structure_derivative(space);
  // {z_a, {z_b, z_c}} = sum_d lambda_ad d(lambda_bc)/dz_d
  auto nested = [&](int i, int j, int k) {
    double s = 0.0;
    for (int d = 0; d < n; ++d) s += lam(i, d) * dlam[d](j, k);
    return s;
  };
  return nested(a, b, c) + nested(b, c, a) + nested(c, a, b);
}

double max_jacobi_residual(SpaceId space, const Chart& z) {
  const int n = dimension(space);
  const Eigen::MatrixXd lam = structure_matrix(space, z).lambda;
  const auto& dlam = structure_derivative(space);
  // nested(i, j, k) for all triples, assembled as lam * dlam_flat
  Eigen::MatrixXd dflat(n, n * n);
  for (int d = 0; d < n; ++d) {
    dflat.row(d) = Eigen::Map<const Eigen::RowVectorXd>(dlam[d].data(), n * n);
  }
  const Eigen::MatrixXd nested = lam * dflat;  // (i, j + n*k) column-major
  auto at = [&](int i, int j, int k) { return nested(i, j + n * k); };
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        worst = std::max(worst, std::abs(at(a, b, c) + at(b, c, a) + at(c, a, b)));
  return worst;
}

}  // namespace symtop
