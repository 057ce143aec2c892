#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Core>

#include "symtop/phase.hpp"

namespace symtop {

/// Antisymmetric matrix of coordinate brackets, lambda(a, b) = {z_a, z_b}(z).
struct StructureMatrix {
  SpaceId space;
  Eigen::MatrixXd lambda;
};

/// Builds the bracket table of `space` at chart point `z`:
///   {x_i, p_j} = delta_ij
///   {pi_i, pi_j} = eps_ijl pi_l
///   {pi_i, R_jk} = eps_ijl R_lk   (each column of R separately)
///   {pi_i, nu_j} = eps_ijl nu_l
/// with every other coordinate bracket zero. z need not lie on the
/// constraint manifold; every entry is affine in z.
StructureMatrix structure_matrix(SpaceId space, const Chart& z);

/// d lambda / d z_d for every chart index d. Exact, since lambda is affine in z.
const std::vector<Eigen::MatrixXd>& structure_derivative(SpaceId space);

enum class GradientKind { Analytic, FiniteDifference };

/// A function on a chart together with its gradient.
struct ScalarField {
  using ValueFn = std::function<double(const Chart&)>;
  using GradientFn = std::function<Chart(const Chart&)>;

  SpaceId space;
  ValueFn value;
  GradientFn gradient;
  GradientKind kind = GradientKind::Analytic;

  double operator()(const Chart& z) const { return value(z); }
  Chart grad(const Chart& z) const { return gradient(z); }
};

/// The coordinate function z -> z[index].
ScalarField coordinate_field(SpaceId space, int index);
ScalarField constant_field(SpaceId space, double c);

ScalarField operator+(const ScalarField& f, const ScalarField& g);
ScalarField operator*(const ScalarField& f, const ScalarField& g);
ScalarField operator*(double s, const ScalarField& f);

/// Field with a central-difference gradient. Verification use only.
ScalarField finite_difference_field(SpaceId space, ScalarField::ValueFn value, double step = 1e-6);

Chart finite_difference_gradient(const ScalarField& f, const Chart& z, double step = 1e-6);

/// |grad f - fd grad f|_inf / max(|fd grad f|_inf, 1).
double gradient_mismatch(const ScalarField& f, const Chart& z, double step = 1e-6);

/// Random quadratic c + b.z + z^T Q z with coefficients uniform in [-1, 1],
/// deterministic per seed.
ScalarField random_polynomial_field(SpaceId space, std::uint64_t seed);

/// grad F(z)^T lambda(z) grad G(z). Throws DimensionMismatch when spaces or
/// sizes disagree.
double bracket(const ScalarField& f, const ScalarField& g, const Chart& z);

/// z_dot = lambda(z) grad H(z); component a equals {z_a, H}(z).
Chart ham_vector_field(const ScalarField& h, const Chart& z);

/// {z_a,{z_b,z_c}} + {z_b,{z_c,z_a}} + {z_c,{z_a,z_b}} at z, with the inner
/// brackets differentiated exactly.
double jacobi_residual(SpaceId space, int a, int b, int c, const Chart& z);

/// Largest |jacobi_residual| over all index triples at z.
double max_jacobi_residual(SpaceId space, const Chart& z);

}  // namespace symtop
