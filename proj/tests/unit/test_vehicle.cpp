#include "dubins_rrt/vehicle.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {
namespace {

void expect_pose_near(const Pose& actual, const Pose& expected, double tol) {
  EXPECT_NEAR(actual.x(), expected.x(), tol);
  EXPECT_NEAR(actual.y(), expected.y(), tol);
  EXPECT_LE(angle_distance(actual.theta(), expected.theta()), tol);
}

TEST(VehicleParams, TurnRadiusFromGeometry) {
  const VehicleParams vp(2.0, std::atan(0.5));
  EXPECT_NEAR(vp.min_turn_radius(), 4.0, 1e-12);
  const auto unit = VehicleParams::from_turn_radius(1.0);
  EXPECT_NEAR(unit.wheelbase() / std::tan(unit.max_steering()), 1.0, 1e-12);
}

TEST(VehicleParams, RejectsBadValues) {
  EXPECT_THROW(VehicleParams(0.0, 0.5), InvalidConfig);
  EXPECT_THROW(VehicleParams(1.0, 0.0), InvalidConfig);
  EXPECT_THROW(VehicleParams(1.0, kPi / 2), InvalidConfig);
  EXPECT_THROW(VehicleParams(1.0, 0.5, 2.0), InvalidConfig);
  EXPECT_THROW(VehicleParams::from_turn_radius(-1.0), InvalidConfig);
}

TEST(IntegrateControls, Straight) {
  const auto vp = VehicleParams::from_turn_radius(1.0);
  const std::vector<SteeringCommand> ctl{{0.0, 4.0}};
  expect_pose_near(integrate_controls(vp, {0, 0, 0}, ctl), {4, 0, 0}, 1e-6);
}

TEST(IntegrateControls, FullLockQuarterTurns) {
  const auto vp = VehicleParams::from_turn_radius(1.0);
  const std::vector<SteeringCommand> left{{vp.max_steering(), kPi / 2}};
  const std::vector<SteeringCommand> right{{-vp.max_steering(), kPi / 2}};
  const Pose l = integrate_controls(vp, {0, 0, 0}, left);
  const Pose r = integrate_controls(vp, {0, 0, 0}, right);
  expect_pose_near(l, {1, 1, kPi / 2}, 1e-3);
  expect_pose_near(r, {1, -1, 3 * kPi / 2}, 1e-3);
  expect_pose_near(l, apply_segment({0, 0, 0}, SegmentType::LeftTurn, kPi / 2), 1e-3);
  expect_pose_near(r, apply_segment({0, 0, 0}, SegmentType::RightTurn, kPi / 2), 1e-3);
}

TEST(IntegrateControls, RejectsOversteer) {
  const auto vp = VehicleParams::from_turn_radius(1.0);
  const std::vector<SteeringCommand> ctl{{0.0, 1.0}, {vp.max_steering() * 1.01, 1.0}};
  EXPECT_THROW(integrate_controls(vp, {0, 0, 0}, ctl), SteeringOutOfRange);
}

TEST(IntegrateControls, EmptyScheduleIsIdentity) {
  const auto vp = VehicleParams::from_turn_radius(1.0);
  EXPECT_EQ(integrate_controls(vp, {1, 2, 3}, {}), Pose(1, 2, 3));
}

TEST(ToControls, SegmentsBecomeSteeringAndDurations) {
  const auto vp = VehicleParams::from_turn_radius(2.0);
  const DubinsPath path({0, 0, 0}, DubinsWord::LSR, {0.5, 1.5, 0.25}, 2.0);
  const auto ctl = to_controls(path, vp);
  ASSERT_EQ(ctl.size(), 3u);
  EXPECT_NEAR(ctl[0].steering, vp.max_steering(), 1e-12);
  EXPECT_EQ(ctl[1].steering, 0.0);
  EXPECT_NEAR(ctl[2].steering, -vp.max_steering(), 1e-12);
  EXPECT_NEAR(ctl[0].duration, 1.0, 1e-12);
  EXPECT_NEAR(ctl[1].duration, 3.0, 1e-12);
  EXPECT_NEAR(ctl[2].duration, 0.5, 1e-12);
}

TEST(ToControls, WiderPathUsesPartialLock) {
  const auto vp = VehicleParams::from_turn_radius(1.0);
  const DubinsPath path({0, 0, 0}, DubinsWord::LSL, {kPi / 2, 0, 0}, 2.0);
  const auto ctl = to_controls(path, vp);
  EXPECT_LT(ctl[0].steering, vp.max_steering());
  expect_pose_near(integrate_controls(vp, path.start(), ctl), path.end(), 1e-3);
  const DubinsPath tight({0, 0, 0}, DubinsWord::LSL, {kPi / 2, 0, 0}, 0.5);
  EXPECT_THROW(to_controls(tight, vp), SteeringOutOfRange);
}

TEST(KinematicConsistency, RandomShortestPathsReplay) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pos(-6.0, 6.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int i = 0; i < 25; ++i) {
    const double rho = i % 2 == 0 ? 1.0 : 1.5;
    const auto vp = VehicleParams::from_turn_radius(rho);
    const Pose a(pos(rng), pos(rng), ang(rng)), b(pos(rng), pos(rng), ang(rng));
    const DubinsPath path = shortest_path(a, b, rho);
    expect_pose_near(integrate_controls(vp, a, to_controls(path, vp)), b, 1e-3);
  }
}

}  // namespace
}  // namespace dubins_rrt
