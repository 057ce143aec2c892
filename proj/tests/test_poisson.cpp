#include <cmath>

#include <gtest/gtest.h>

#include "symtop/error.hpp"
#include "symtop/poisson.hpp"
#include "test_util.hpp"

using namespace symtop;
using symtop::testing::Rng;

namespace {
constexpr SpaceId kSpaces[] = {SpaceId::CotSO3, SpaceId::Se3Dual, SpaceId::CotSE3, SpaceId::Reduced};
constexpr ChartLayout L = layout(SpaceId::CotSE3);
}

TEST(StructureMatrix, CanonicalTranslationBlock) {
  Rng rng(1);
  const Chart z = rng.chart(SpaceId::CotSE3);
  const auto lam = structure_matrix(SpaceId::CotSE3, z).lambda;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(lam(i, 3 + j), i == j ? 1.0 : 0.0);
      EXPECT_EQ(lam(i, j), 0.0);
      EXPECT_EQ(lam(3 + i, 3 + j), 0.0);
    }
    for (int b = 6; b < 18; ++b) {
      EXPECT_EQ(lam(i, b), 0.0);
      EXPECT_EQ(lam(3 + i, b), 0.0);
    }
  }
}

TEST(StructureMatrix, Se3DualAtUnitPi3) {
  Chart z(6);
  z << 0.3, -0.2, 0.9, 0, 0, 1;
  const auto lam = structure_matrix(SpaceId::Se3Dual, z).lambda;
  EXPECT_EQ(lam(3, 4), 1.0);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) EXPECT_EQ(lam(i, k), 0.0);
}

TEST(StructureMatrix, CotSO3AtIdentity) {
  Chart z = Chart::Zero(12);
  z[0] = z[4] = z[8] = 1.0;
  const auto lam = structure_matrix(SpaceId::CotSO3, z).lambda;
  // {pi_1, R_23} = eps_12l R_l3 = R_33
  EXPECT_EQ(lam(9 + 0, rot_index(SpaceId::CotSO3, 1, 2)), 1.0);
  EXPECT_EQ(lam(rot_index(SpaceId::CotSO3, 1, 2), 9 + 0), -1.0);
}

TEST(StructureMatrix, ColumnsOfRDecouple) {
  // Brackets of pi with column k of R only involve column k.
  Rng rng(2);
  const Chart z = rng.chart(SpaceId::CotSO3);
  const auto& dlam = structure_derivative(SpaceId::CotSO3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          for (int kk = 0; kk < 3; ++kk) {
            if (kk == k) continue;
            EXPECT_EQ(dlam[rot_index(SpaceId::CotSO3, l, kk)](9 + i, rot_index(SpaceId::CotSO3, j, k)), 0.0);
          }
  (void)z;
}

TEST(StructureMatrix, AntisymmetricExactly) {
  Rng rng(3);
  for (SpaceId space : kSpaces) {
    for (int k = 0; k < 1000; ++k) {
      const auto lam = structure_matrix(space, rng.chart(space)).lambda;
      EXPECT_EQ(lam + lam.transpose(), Eigen::MatrixXd::Zero(lam.rows(), lam.cols()));
    }
  }
}

TEST(StructureMatrix, DimensionMismatch) {
  try {
    structure_matrix(SpaceId::Reduced, Chart::Zero(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Bracket, CanonicalPair) {
  Rng rng(4);
  const Chart z = rng.chart(SpaceId::CotSE3);
  EXPECT_EQ(bracket(coordinate_field(SpaceId::CotSE3, 0), coordinate_field(SpaceId::CotSE3, 3), z), 1.0);
}

TEST(Bracket, SelfBracketVanishes) {
  Rng rng(5);
  for (SpaceId space : kSpaces) {
    const ScalarField f = random_polynomial_field(space, 9);
    EXPECT_NEAR(bracket(f, f, rng.chart(space)), 0.0, 1e-12);
  }
}

TEST(Bracket, AngularMomentumAlgebra) {
  Chart z = Chart::Zero(12);
  z[0] = z[4] = z[8] = 1.0;
  z.segment<3>(9) = Vec3(1, 1, 5);
  EXPECT_EQ(bracket(coordinate_field(SpaceId::CotSO3, 9), coordinate_field(SpaceId::CotSO3, 10), z), 5.0);
}

TEST(Bracket, AntisymmetricInArguments) {
  Rng rng(6);
  for (SpaceId space : kSpaces) {
    for (int k = 0; k < 20; ++k) {
      const ScalarField f = random_polynomial_field(space, 100 + k);
      const ScalarField g = random_polynomial_field(space, 200 + k);
      const Chart z = rng.chart(space);
      EXPECT_NEAR(bracket(f, g, z), -bracket(g, f, z), 1e-12);
    }
  }
}

TEST(Bracket, FieldsOnDifferentSpacesRejected) {
  EXPECT_THROW(bracket(coordinate_field(SpaceId::Reduced, 0), coordinate_field(SpaceId::CotSO3, 0), Chart::Zero(12)),
               Error);
}

TEST(Bracket, LeibnizRule) {
  Rng rng(7);
  for (SpaceId space : kSpaces) {
    for (int k = 0; k < 50; ++k) {
      const ScalarField f = random_polynomial_field(space, 300 + k);
      const ScalarField g = random_polynomial_field(space, 400 + k);
      const ScalarField h = random_polynomial_field(space, 500 + k);
      const Chart z = rng.chart(space);
      const double lhs = bracket(f * g, h, z);
      EXPECT_NEAR(lhs, f(z) * bracket(g, h, z) + g(z) * bracket(f, h, z), 1e-9 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(HamVectorField, FreeParticle) {
  const double mass = 2.0;
  const ScalarField h{SpaceId::CotSE3,
                      [](const Chart& z) { return z.segment<3>(L.p).squaredNorm() / 4.0; },
                      [](const Chart& z) {
                        Chart g = Chart::Zero(18);
                        g.segment<3>(L.p) = z.segment<3>(L.p) / 2.0;
                        return g;
                      }};
  Rng rng(8);
  const Chart z = rng.chart(SpaceId::CotSE3);
  const Chart v = ham_vector_field(h, z);
  EXPECT_LE((v.segment<3>(L.x) - z.segment<3>(L.p) / mass).cwiseAbs().maxCoeff(), 1e-16);
  EXPECT_EQ(v.segment<12>(L.p).cwiseAbs().maxCoeff(), 0.0);
}

TEST(HamVectorField, CasimirGeneratesNoMotion) {
  const ScalarField c2{SpaceId::Se3Dual, [](const Chart& z) { return z.head<3>().dot(z.tail<3>()); },
                       [](const Chart& z) {
                         Chart g(6);
                         g << z.tail<3>(), z.head<3>();
                         return g;
                       }};
  Rng rng(9);
  for (int k = 0; k < 100; ++k) EXPECT_LE(ham_vector_field(c2, rng.chart(SpaceId::Se3Dual)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(HamVectorField, KineticEnergyOnSe3Dual) {
  // h = pi^2 / (2 I1): matrix-vector product written out by hand.
  const double i1 = 0.7;
  const ScalarField h{SpaceId::Se3Dual, [i1](const Chart& z) { return z.tail<3>().squaredNorm() / (2 * i1); },
                      [i1](const Chart& z) {
                        Chart g = Chart::Zero(6);
                        g.tail<3>() = z.tail<3>() / i1;
                        return g;
                      }};
  Rng rng(10);
  const Chart z = rng.chart(SpaceId::Se3Dual);
  const Chart v = ham_vector_field(h, z);
  const Vec3 nu = z.head<3>();
  const Vec3 omega = z.tail<3>() / i1;
  // nu_dot_j = sum_i {nu_j, pi_i} omega_i = -sum_i eps_ijl nu_l omega_i
  for (int j = 0; j < 3; ++j) {
    double expected = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) expected -= levi_civita(i, j, l) * nu[l] * omega[i];
    EXPECT_NEAR(v[j], expected, 1e-15);
  }
  EXPECT_LE(v.tail<3>().cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_NEAR(v.head<3>().dot(nu), 0.0, 1e-15);
}

TEST(HamVectorField, ComponentsAreCoordinateBrackets) {
  Rng rng(11);
  for (SpaceId space : kSpaces) {
    for (int k = 0; k < 20; ++k) {
      const ScalarField h = random_polynomial_field(space, 600 + k);
      const Chart z = rng.chart(space);
      const Chart v = ham_vector_field(h, z);
      for (int a = 0; a < dimension(space); ++a) {
        EXPECT_NEAR(v[a], bracket(coordinate_field(space, a), h, z), 1e-12);
      }
    }
  }
}

TEST(Jacobi, AngularMomentumTriple) {
  Rng rng(12);
  for (int k = 0; k < 50; ++k) {
    EXPECT_LE(std::abs(jacobi_residual(SpaceId::Se3Dual, 3, 4, 5, rng.chart(SpaceId::Se3Dual))), 1e-12);
  }
}

TEST(Jacobi, CanonicalTripleIsExactlyZero) {
  Rng rng(13);
  EXPECT_EQ(jacobi_residual(SpaceId::CotSE3, 0, 3, 16, rng.chart(SpaceId::CotSE3)), 0.0);
}

TEST(Jacobi, PiWithThirdColumn) {
  Rng rng(14);
  for (int k = 0; k < 50; ++k) {
    const Chart z = rng.chart(SpaceId::CotSO3);
    EXPECT_LE(std::abs(jacobi_residual(SpaceId::CotSO3, 9, rot_index(SpaceId::CotSO3, 0, 2),
                                       rot_index(SpaceId::CotSO3, 1, 2), z)),
              1e-12);
  }
}

TEST(Jacobi, MaxResidualMatchesTripleLoop) {
  Rng rng(15);
  const Chart z = rng.chart(SpaceId::Reduced);
  double worst = 0.0;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      for (int c = 0; c < 12; ++c) worst = std::max(worst, std::abs(jacobi_residual(SpaceId::Reduced, a, b, c, z)));
  EXPECT_NEAR(max_jacobi_residual(SpaceId::Reduced, z), worst, 1e-15);
}

TEST(Jacobi, MixedPiNuTriple) {
  // {pi1,{pi2,nu1}} + {pi2,{nu1,pi1}} + {nu1,{pi1,pi2}} = nu2 + 0 - nu2
  Chart z(6);
  z << 0.1, 0.4, -0.3, 0.2, 0.5, 0.7;
  EXPECT_EQ(jacobi_residual(SpaceId::Se3Dual, 3, 4, 0, z), 0.0);
}

TEST(ScalarField, AnalyticGradientsMatchFiniteDifferences) {
  Rng rng(16);
  for (SpaceId space : kSpaces) {
    const ScalarField f = random_polynomial_field(space, 77);
    EXPECT_EQ(f.kind, GradientKind::Analytic);
    EXPECT_LE(gradient_mismatch(f, rng.chart(space)), 1e-5);
    const ScalarField fd = finite_difference_field(space, f.value);
    EXPECT_EQ(fd.kind, GradientKind::FiniteDifference);
    EXPECT_EQ((fd * f).kind, GradientKind::FiniteDifference);
  }
}

TEST(ScalarField, CoordinateIndexOutOfRange) {
  EXPECT_THROW(coordinate_field(SpaceId::Se3Dual, 6), Error);
  EXPECT_THROW(coordinate_field(SpaceId::Se3Dual, -1), Error);
}
