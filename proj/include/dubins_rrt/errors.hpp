#pragma once

#include <stdexcept>
#include <string>

namespace dubins_rrt {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Start and goal share a position, so no canonical frame exists.
class DegenerateProblem : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class SteeringOutOfRange : public Error {
 public:
  using Error::Error;
};

class NoPath : public Error {
 public:
  using Error::Error;
};

class InvalidPolygon : public Error {
 public:
  using Error::Error;
};

/// A planner config or vehicle parameter violates its invariants.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InvalidStart : public Error {
 public:
  using Error::Error;
};

class InvalidGoal : public Error {
 public:
  using Error::Error;
};

/// Malformed or semantically invalid scenario / bench-spec document.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace dubins_rrt
