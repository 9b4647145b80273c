#include "dubins_rrt/vehicle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

VehicleParams::VehicleParams(double wheelbase, double max_steering, double speed)
    : wheelbase_(wheelbase), max_steering_(max_steering), speed_(speed) {
  if (!(wheelbase > 0.0) || !std::isfinite(wheelbase)) throw InvalidConfig("wheelbase must be positive");
  if (!(max_steering > 0.0 && max_steering < kPi / 2.0)) throw InvalidConfig("max steering must lie in (0, pi/2)");
  if (speed != 0.0 && speed != 1.0) throw InvalidConfig("speed must be 0 (stopped) or 1");
  min_turn_radius_ = wheelbase_ / std::tan(max_steering_);
}

VehicleParams VehicleParams::from_turn_radius(double min_turn_radius, double max_steering) {
  if (!(min_turn_radius > 0.0)) throw InvalidConfig("turning radius must be positive");
  return VehicleParams(min_turn_radius * std::tan(max_steering), max_steering);
}

namespace {

struct State {
  double x, y, theta;
};

State derivative(const State& s, double speed, double curvature) {
  return {speed * std::cos(s.theta), speed * std::sin(s.theta), speed * curvature};
}

State rk4_step(const State& s, double h, double speed, double curvature) {
  auto add = [](const State& a, const State& b, double k) { return State{a.x + k * b.x, a.y + k * b.y, a.theta + k * b.theta}; };
  const State k1 = derivative(s, speed, curvature);
  const State k2 = derivative(add(s, k1, h / 2.0), speed, curvature);
  const State k3 = derivative(add(s, k2, h / 2.0), speed, curvature);
  const State k4 = derivative(add(s, k3, h), speed, curvature);
  return {s.x + h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x),
          s.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
          s.theta + h / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta)};
}

}  // namespace

Pose integrate_controls(const VehicleParams& vp, const Pose& start, std::span<const SteeringCommand> controls,
                        double step) {
  if (!(step > 0.0)) throw InvalidConfig("integration step must be positive");
  // Validate the whole schedule before integrating any of it.
  for (const auto& c : controls) {
    if (std::abs(c.steering) > vp.max_steering() * (1.0 + 1e-12)) {
      throw SteeringOutOfRange("steering " + std::to_string(c.steering) + " exceeds max " +
                               std::to_string(vp.max_steering()));
    }
    if (!(c.duration >= 0.0)) throw InvalidConfig("control duration must be non-negative");
  }
  State s{start.x(), start.y(), start.theta()};
  for (const auto& c : controls) {
    const double curvature = std::tan(c.steering) / vp.wheelbase();
    const auto full_steps = static_cast<long>(std::floor(c.duration / step));
    for (long i = 0; i < full_steps; ++i) s = rk4_step(s, step, vp.speed(), curvature);
    const double rest = c.duration - static_cast<double>(full_steps) * step;
    if (rest > 0.0) s = rk4_step(s, rest, vp.speed(), curvature);
  }
  return {s.x, s.y, s.theta};
}

std::vector<SteeringCommand> to_controls(const DubinsPath& path, const VehicleParams& vp) {
  // Arcs at the path's radius; full lock when rho equals the vehicle's minimum radius.
  const double lock = std::atan(vp.wheelbase() / path.rho());
  if (lock > vp.max_steering() * (1.0 + 1e-12)) {
    throw SteeringOutOfRange("path radius is tighter than the vehicle's minimum turning radius");
  }
  std::vector<SteeringCommand> out;
  const auto segs = segments(path.word());
  for (std::size_t i = 0; i < 3; ++i) {
    double steering = 0.0;
    if (segs[i] == SegmentType::LeftTurn) steering = std::min(lock, vp.max_steering());
    if (segs[i] == SegmentType::RightTurn) steering = -std::min(lock, vp.max_steering());
    out.push_back({steering, path.params()[i] * path.rho()});
  }
  return out;
}

}  // namespace dubins_rrt
