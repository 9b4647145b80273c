#pragma once

#include <span>
#include <vector>

#include "dubins_rrt/dubins.hpp"
#include "dubins_rrt/pose.hpp"

namespace dubins_rrt {

/// Kinematic car: x' = u_s cos(theta), y' = u_s sin(theta), theta' = u_s / L * tan(phi).
class VehicleParams {
 public:
  /// Throws InvalidConfig unless 0 < max_steering < π/2, wheelbase > 0 and speed is 0 or 1.
  VehicleParams(double wheelbase, double max_steering, double speed = 1.0);

  /// Wheelbase chosen so that wheelbase / tan(max_steering) == min_turn_radius.
  static VehicleParams from_turn_radius(double min_turn_radius, double max_steering = kPi / 4.0);

  double wheelbase() const { return wheelbase_; }
  double max_steering() const { return max_steering_; }
  double speed() const { return speed_; }
  double min_turn_radius() const { return min_turn_radius_; }

 private:
  double wheelbase_;
  double max_steering_;
  double speed_;
  double min_turn_radius_;
};

struct SteeringCommand {
  double steering = 0.0;  // radians, positive turns left
  double duration = 0.0;  // time units
};

inline constexpr double kDefaultIntegrationStep = 1e-4;

/// Fixed-step RK4 integration of the kinematic model. Throws SteeringOutOfRange.
Pose integrate_controls(const VehicleParams& vp, const Pose& start, std::span<const SteeringCommand> controls,
                        double step = kDefaultIntegrationStep);

/// Full-lock steering for arcs, zero for straights; durations are arc lengths at unit speed.
std::vector<SteeringCommand> to_controls(const DubinsPath& path, const VehicleParams& vp);

}  // namespace dubins_rrt
