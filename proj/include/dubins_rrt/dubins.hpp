#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "dubins_rrt/pose.hpp"

namespace dubins_rrt {

enum class SegmentType { LeftTurn, Straight, RightTurn };

/// The six candidate words of a shortest Dubins path.
enum class DubinsWord { LSL, RSR, LSR, RSL, RLR, LRL };

/// All words in tie-break order: earlier words win exact ties.
inline constexpr std::array<DubinsWord, 6> kAllWords = {
    DubinsWord::LSL, DubinsWord::RSR, DubinsWord::LSR,
    DubinsWord::RSL, DubinsWord::RLR, DubinsWord::LRL};

std::array<SegmentType, 3> segments(DubinsWord word);
std::string_view to_string(DubinsWord word);
std::optional<DubinsWord> word_from_string(std::string_view name);

/// Word that traces the same curve backwards: letters reversed, L and R swapped.
DubinsWord reversed(DubinsWord word);

/// Start at (0, 0, alpha), goal at (d, 0, beta); lengths in units of the turning radius.
struct CanonicalProblem {
  double d = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Nondimensional segment lengths of a word.
struct WordParams {
  double t = 0.0;
  double p = 0.0;
  double q = 0.0;

  double total() const { return t + p + q; }
  double operator[](std::size_t i) const { return i == 0 ? t : (i == 1 ? p : q); }
};

/// A word with its parameters anchored at a world-frame start pose.
///
/// `length()` is (t + p + q) * rho, computed once at construction so that
/// planner costs sum exactly the same doubles every time.
class DubinsPath {
 public:
  DubinsPath(const Pose& start, DubinsWord word, const WordParams& params, double rho);

  const Pose& start() const { return start_; }
  DubinsWord word() const { return word_; }
  const WordParams& params() const { return params_; }
  double rho() const { return rho_; }
  double length() const { return length_; }

  /// Pose at the end of the path (replayed from start).
  Pose end() const;

  /// The same word cut at arc length `s`; later segments become zero-length.
  DubinsPath truncated(double s) const;

 private:
  Pose start_;
  DubinsWord word_;
  WordParams params_;
  double rho_;
  double length_;
};

/// Rotates and scales the problem so the start sits at the origin and the goal on +x.
/// Throws DegenerateProblem when start and goal positions coincide.
CanonicalProblem to_canonical(const Pose& start, const Pose& goal, double rho);

/// World-frame pose at arc length `s` along `path`. Throws OutOfRange outside [0, length].
Pose from_canonical(const DubinsPath& path, double s);

/// Unit-radius motion primitive: left arc, straight line or right arc of length v.
Pose apply_segment(const Pose& p, SegmentType seg, double v);

/// Closed-form segment lengths for one word, or nullopt when the word has no solution.
std::optional<WordParams> word_params(DubinsWord word, const CanonicalProblem& cp);

struct WordCandidate {
  DubinsWord word;
  std::optional<WordParams> params;
  bool reconstructs = false;
  double length = 0.0;  // world units, meaningful only when params is set
};

/// Evaluates every word for the query, as used by shortest_path.
std::array<WordCandidate, 6> evaluate_words(const Pose& start, const Pose& goal, double rho);

/// Shortest Dubins path. Coincident start and goal poses yield a zero-length LSL.
DubinsPath shortest_path(const Pose& start, const Pose& goal, double rho);

}  // namespace dubins_rrt
