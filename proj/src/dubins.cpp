#include "dubins_rrt/dubins.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dubins_rrt/errors.hpp"

namespace dubins_rrt {

namespace {

constexpr double kDegenerateDistance = 1e-12;   // relative to rho
constexpr double kFeasibilitySlack = 1e-12;     // radicand / arccos clamping band
constexpr double kReconstructionTol = 1e-6;     // nondimensional position and heading
// Nondimensional length. A near-zero tangent comes out of sqrt(radicand) with
// error around sqrt(machine eps), so ties are judged at that scale.
constexpr double kTieTol = 1e-7;
// Below this tangent length the two CSC circles coincide and the tangent
// direction from atan2 is noise; the path is then a single arc.
constexpr double kCoincidentCircles = 1e-7;

struct Trig {
  double sa, ca, sb, cb, cab;

  explicit Trig(const CanonicalProblem& cp)
      : sa(std::sin(cp.alpha)),
        ca(std::cos(cp.alpha)),
        sb(std::sin(cp.beta)),
        cb(std::cos(cp.beta)),
        cab(std::cos(cp.alpha - cp.beta)) {}
};

// Square root of a straight-segment radicand, absent when clearly negative.
std::optional<double> straight_length(double radicand) {
  if (radicand < -kFeasibilitySlack) return std::nullopt;
  return std::sqrt(std::max(radicand, 0.0));
}

std::optional<double> clamped_acos(double arg) {
  if (std::abs(arg) > 1.0 + kFeasibilitySlack) return std::nullopt;
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

// Unit-frame displacement of one primitive starting at heading theta.
struct Delta {
  double dx, dy, dtheta;
};

Delta primitive(double theta, SegmentType seg, double v) {
  switch (seg) {
    case SegmentType::LeftTurn:
      return {std::sin(theta + v) - std::sin(theta), -std::cos(theta + v) + std::cos(theta), v};
    case SegmentType::RightTurn:
      return {-std::sin(theta - v) + std::sin(theta), std::cos(theta - v) - std::cos(theta), -v};
    case SegmentType::Straight:
      return {v * std::cos(theta), v * std::sin(theta), 0.0};
  }
  return {0.0, 0.0, 0.0};
}

Pose advance(const Pose& p, SegmentType seg, double v, double rho) {
  const Delta d = primitive(p.theta(), seg, v);
  return {p.x() + rho * d.dx, p.y() + rho * d.dy, p.theta() + d.dtheta};
}

std::optional<WordParams> lsl(const CanonicalProblem& cp, const Trig& g) {
  const auto p = straight_length(2.0 + cp.d * cp.d - 2.0 * g.cab + 2.0 * cp.d * (g.sa - g.sb));
  if (!p) return std::nullopt;
  if (*p < kCoincidentCircles) return WordParams{0.0, *p, mod2pi(cp.beta - cp.alpha)};
  const double th = std::atan2(g.cb - g.ca, cp.d + g.sa - g.sb);
  return WordParams{mod2pi(-cp.alpha + th), *p, mod2pi(cp.beta - th)};
}

// RSR mirrors LSL: the radicand carries 2d(sin b - sin a) and the tangent
// direction uses (cos a - cos b). Reusing the LSL signs does not reconstruct.
std::optional<WordParams> rsr(const CanonicalProblem& cp, const Trig& g) {
  const auto p = straight_length(2.0 + cp.d * cp.d - 2.0 * g.cab + 2.0 * cp.d * (g.sb - g.sa));
  if (!p) return std::nullopt;
  if (*p < kCoincidentCircles) return WordParams{0.0, *p, mod2pi(cp.alpha - cp.beta)};
  const double th = std::atan2(g.ca - g.cb, cp.d - g.sa + g.sb);
  return WordParams{mod2pi(cp.alpha - th), *p, mod2pi(-cp.beta + th)};
}

// LSR: inner tangent, radicand -2 + d^2 + 2cos(a - b) + 2d(sin a + sin b).
// The final arc is a right turn, so q = th - b (not b - th).
std::optional<WordParams> lsr(const CanonicalProblem& cp, const Trig& g) {
  const auto p = straight_length(-2.0 + cp.d * cp.d + 2.0 * g.cab + 2.0 * cp.d * (g.sa + g.sb));
  if (!p) return std::nullopt;
  const double th = std::atan2(-g.ca - g.cb, cp.d + g.sa + g.sb) - std::atan2(-2.0, *p);
  return WordParams{mod2pi(-cp.alpha + th), *p, mod2pi(-cp.beta + th)};
}

std::optional<WordParams> rsl(const CanonicalProblem& cp, const Trig& g) {
  const auto p = straight_length(-2.0 + cp.d * cp.d + 2.0 * g.cab - 2.0 * cp.d * (g.sa + g.sb));
  if (!p) return std::nullopt;
  const double th = std::atan2(g.ca + g.cb, cp.d - g.sa - g.sb) - std::atan2(2.0, *p);
  return WordParams{mod2pi(cp.alpha - th), *p, mod2pi(cp.beta - th)};
}

// CCC words admit two middle-circle placements with middle arcs acos(x) and
// 2π - acos(x). Both are evaluated and the shorter is kept. The heading
// balance fixes the last arc: RLR q = a - b - t + p, LRL q = b - a - t + p.
std::optional<WordParams> rlr(const CanonicalProblem& cp, const Trig& g) {
  const auto base = clamped_acos((6.0 - cp.d * cp.d + 2.0 * g.cab + 2.0 * cp.d * (g.sa - g.sb)) / 8.0);
  if (!base) return std::nullopt;
  const double th = std::atan2(g.ca - g.cb, cp.d - g.sa + g.sb);
  std::optional<WordParams> best;
  for (const double p : {kTwoPi - *base, *base}) {
    const double t = mod2pi(cp.alpha - th + 0.5 * p);
    const WordParams w{t, mod2pi(p), mod2pi(cp.alpha - cp.beta - t + p)};
    if (!best || w.total() < best->total() - kTieTol) best = w;
  }
  return best;
}

// LRL: the arccos argument carries 2d(sin b - sin a), the mirror of RLR.
std::optional<WordParams> lrl(const CanonicalProblem& cp, const Trig& g) {
  const auto base = clamped_acos((6.0 - cp.d * cp.d + 2.0 * g.cab + 2.0 * cp.d * (g.sb - g.sa)) / 8.0);
  if (!base) return std::nullopt;
  const double th = std::atan2(-g.ca + g.cb, cp.d + g.sa - g.sb);
  std::optional<WordParams> best;
  for (const double p : {kTwoPi - *base, *base}) {
    const double t = mod2pi(-cp.alpha + th + 0.5 * p);
    const WordParams w{t, mod2pi(p), mod2pi(cp.beta - cp.alpha - t + p)};
    if (!best || w.total() < best->total() - kTieTol) best = w;
  }
  return best;
}

bool reconstructs(DubinsWord word, const WordParams& w, const CanonicalProblem& cp) {
  Pose p(0.0, 0.0, cp.alpha);
  const auto segs = segments(word);
  for (std::size_t i = 0; i < 3; ++i) p = apply_segment(p, segs[i], w[i]);
  const double pos_err = std::hypot(p.x() - cp.d, p.y());
  return pos_err <= kReconstructionTol && angle_distance(p.theta(), cp.beta) <= kReconstructionTol;
}

bool same_position(const Pose& a, const Pose& b, double rho) {
  return distance(a, b) < kDegenerateDistance * rho;
}

// Canonical frame that tolerates coincident positions by taking the world x axis.
CanonicalProblem canonical_any(const Pose& start, const Pose& goal, double rho) {
  if (same_position(start, goal, rho)) return {0.0, start.theta(), goal.theta()};
  return to_canonical(start, goal, rho);
}

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidConfig("turning radius must be positive and finite");
}

}  // namespace

std::array<SegmentType, 3> segments(DubinsWord word) {
  constexpr auto L = SegmentType::LeftTurn;
  constexpr auto S = SegmentType::Straight;
  constexpr auto R = SegmentType::RightTurn;
  switch (word) {
    case DubinsWord::LSL: return {L, S, L};
    case DubinsWord::RSR: return {R, S, R};
    case DubinsWord::LSR: return {L, S, R};
    case DubinsWord::RSL: return {R, S, L};
    case DubinsWord::RLR: return {R, L, R};
    case DubinsWord::LRL: return {L, R, L};
  }
  return {S, S, S};
}

std::string_view to_string(DubinsWord word) {
  switch (word) {
    case DubinsWord::LSL: return "LSL";
    case DubinsWord::RSR: return "RSR";
    case DubinsWord::LSR: return "LSR";
    case DubinsWord::RSL: return "RSL";
    case DubinsWord::RLR: return "RLR";
    case DubinsWord::LRL: return "LRL";
  }
  return "?";
}

std::optional<DubinsWord> word_from_string(std::string_view name) {
  for (const DubinsWord w : kAllWords) {
    if (to_string(w) == name) return w;
  }
  return std::nullopt;
}

DubinsWord reversed(DubinsWord word) {
  switch (word) {
    case DubinsWord::LSL: return DubinsWord::RSR;
    case DubinsWord::RSR: return DubinsWord::LSL;
    case DubinsWord::LSR: return DubinsWord::LSR;
    case DubinsWord::RSL: return DubinsWord::RSL;
    case DubinsWord::RLR: return DubinsWord::LRL;
    case DubinsWord::LRL: return DubinsWord::RLR;
  }
  return word;
}

DubinsPath::DubinsPath(const Pose& start, DubinsWord word, const WordParams& params, double rho)
    : start_(start), word_(word), params_(params), rho_(rho), length_(params.total() * rho) {
  check_rho(rho);
  if (params.t < 0.0 || params.p < 0.0 || params.q < 0.0) throw InvalidConfig("negative Dubins segment length");
}

Pose DubinsPath::end() const { return from_canonical(*this, length_); }

DubinsPath DubinsPath::truncated(double s) const {
  if (s >= length_) return *this;
  double remaining = std::max(s, 0.0) / rho_;
  WordParams cut{};
  double* fields[3] = {&cut.t, &cut.p, &cut.q};
  for (std::size_t i = 0; i < 3; ++i) {
    const double v = std::min(params_[i], remaining);
    *fields[i] = v;
    remaining -= v;
  }
  return DubinsPath(start_, word_, cut, rho_);
}

CanonicalProblem to_canonical(const Pose& start, const Pose& goal, double rho) {
  check_rho(rho);
  const double dx = goal.x() - start.x();
  const double dy = goal.y() - start.y();
  const double dist = std::hypot(dx, dy);
  if (dist < kDegenerateDistance * rho) throw DegenerateProblem("start and goal positions coincide");
  const double phi = std::atan2(dy, dx);
  return {dist / rho, mod2pi(start.theta() - phi), mod2pi(goal.theta() - phi)};
}

Pose apply_segment(const Pose& p, SegmentType seg, double v) { return advance(p, seg, v, 1.0); }

Pose from_canonical(const DubinsPath& path, double s) {
  const double slack = 1e-12 * std::max(1.0, path.length());
  if (!(s >= 0.0) || s > path.length() + slack) {
    throw OutOfRange("arc length " + std::to_string(s) + " outside [0, " + std::to_string(path.length()) + "]");
  }
  if (s == 0.0) return path.start();
  double remaining = std::min(s, path.length()) / path.rho();
  Pose pose = path.start();
  const auto segs = segments(path.word());
  for (std::size_t i = 0; i < 3 && remaining > 0.0; ++i) {
    const double v = std::min(path.params()[i], remaining);
    pose = advance(pose, segs[i], v, path.rho());
    remaining -= v;
  }
  return pose;
}

std::optional<WordParams> word_params(DubinsWord word, const CanonicalProblem& cp) {
  const Trig g(cp);
  switch (word) {
    case DubinsWord::LSL: return lsl(cp, g);
    case DubinsWord::RSR: return rsr(cp, g);
    case DubinsWord::LSR: return lsr(cp, g);
    case DubinsWord::RSL: return rsl(cp, g);
    case DubinsWord::RLR: return rlr(cp, g);
    case DubinsWord::LRL: return lrl(cp, g);
  }
  return std::nullopt;
}

std::array<WordCandidate, 6> evaluate_words(const Pose& start, const Pose& goal, double rho) {
  check_rho(rho);
  const CanonicalProblem cp = canonical_any(start, goal, rho);
  std::array<WordCandidate, 6> out{};
  for (std::size_t i = 0; i < kAllWords.size(); ++i) {
    WordCandidate& c = out[i];
    c.word = kAllWords[i];
    c.params = word_params(c.word, cp);
    if (c.params) {
      c.reconstructs = reconstructs(c.word, *c.params, cp);
      c.length = c.params->total() * rho;
    }
  }
  return out;
}

DubinsPath shortest_path(const Pose& start, const Pose& goal, double rho) {
  check_rho(rho);
  if (same_position(start, goal, rho) && angle_distance(start.theta(), goal.theta()) <= kDegenerateDistance) {
    return DubinsPath(start, DubinsWord::LSL, WordParams{}, rho);
  }
  const auto candidates = evaluate_words(start, goal, rho);
  const WordCandidate* best = nullptr;
  for (const auto& c : candidates) {
    if (!c.params || !c.reconstructs) continue;
    if (!best || c.params->total() < best->params->total() - kTieTol) best = &c;
  }
  if (!best) throw NoPath("no Dubins word reconstructs the goal pose");
  return DubinsPath(start, best->word, *best->params, rho);
}

}  // namespace dubins_rrt
