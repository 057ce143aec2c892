#include <gtest/gtest.h>

#include "symtop/error.hpp"
#include "symtop/phase.hpp"
#include "test_util.hpp"

using namespace symtop;

namespace {
constexpr SpaceId kSpaces[] = {SpaceId::CotSO3, SpaceId::Se3Dual, SpaceId::CotSE3, SpaceId::Reduced};
}

TEST(Layout, Dimensions) {
  EXPECT_EQ(dimension(SpaceId::CotSO3), 12);
  EXPECT_EQ(dimension(SpaceId::Se3Dual), 6);
  EXPECT_EQ(dimension(SpaceId::CotSE3), 18);
  EXPECT_EQ(dimension(SpaceId::Reduced), 12);
}

TEST(Flatten, CotSO3IdentityLayout) {
  const CotSO3State s{Rotation::identity(), Vec3(0, 0, 1)};
  Chart expected(12);
  expected << 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1;
  EXPECT_EQ(flatten(s), expected);
}

TEST(Flatten, FullStateBlockOrder) {
  FullState s;
  s.x = Vec3(1, 2, 3);
  s.p = Vec3(4, 5, 6);
  s.pi = Vec3(7, 8, 9);
  const Chart z = flatten(s);
  ASSERT_EQ(z.size(), 18);
  EXPECT_EQ(z.segment<3>(0), s.x);
  EXPECT_EQ(z.segment<3>(3), s.p);
  EXPECT_EQ(z[6], 1.0);
  EXPECT_EQ(z[10], 1.0);
  EXPECT_EQ(z[14], 1.0);
  EXPECT_EQ(z.segment<3>(15), s.pi);
}

TEST(Flatten, ReducedLength) { EXPECT_EQ(flatten(ReducedState{}).size(), 12); }

TEST(Flatten, RoundTripAllSpaces) {
  for (SpaceId space : kSpaces) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const AnyState s = random_state(space, seed);
      const Chart z = flatten(s, space);
      EXPECT_EQ(flatten(unflatten(as_span(z), space), space), z) << to_string(space);
    }
  }
}

TEST(Flatten, WrongSpaceIsDimensionMismatch) {
  try {
    flatten(AnyState{ReducedState{}}, SpaceId::CotSE3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Unflatten, WrongLengthIsDimensionMismatch) {
  const Chart z = Chart::Zero(7);
  try {
    unflatten(as_span(z), SpaceId::Reduced);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Unflatten, ChecksInvariants) {
  Chart z = flatten(ReducedState{});
  z[6 + 2] = 1.1;  // |nu| != 1
  EXPECT_THROW(unflatten(as_span(z), SpaceId::Reduced), Error);
  Chart f = flatten(FullState{});
  f[6] = 1.01;  // R no longer orthogonal
  EXPECT_THROW(unflatten(as_span(f), SpaceId::CotSE3), Error);
}

TEST(RandomState, DeterministicPerSeed) {
  for (SpaceId space : kSpaces) {
    EXPECT_EQ(flatten(random_state(space, 42), space), flatten(random_state(space, 42), space));
    EXPECT_NE(flatten(random_state(space, 42), space), flatten(random_state(space, 43), space));
  }
}

TEST(RandomState, SatisfiesInvariants) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto f = std::get<FullState>(random_state(SpaceId::CotSE3, seed));
    EXPECT_LE(orthogonality_defect(f.R.matrix()), 1e-12);
    EXPECT_NEAR(f.R.matrix().determinant(), 1.0, 1e-12);
    EXPECT_LE(f.x.cwiseAbs().maxCoeff(), 1.0);
    const auto r = std::get<ReducedState>(random_state(SpaceId::Reduced, seed));
    EXPECT_NEAR(r.nu.squaredNorm(), 1.0, 1e-12);
    EXPECT_LE(r.pi.cwiseAbs().maxCoeff(), 1.0);
  }
}

TEST(RandomRotation, MeanIsNearZero) {
  // Haar measure has E[R] = 0.
  Mat3 mean = Mat3::Zero();
  const int n = 20000;
  for (int k = 0; k < n; ++k) mean += random_rotation(static_cast<std::uint64_t>(k)).matrix();
  mean /= n;
  EXPECT_LE(mean.cwiseAbs().maxCoeff(), 0.03);
}
