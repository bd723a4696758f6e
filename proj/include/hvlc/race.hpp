#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "hvlc/geometry.hpp"
#include "hvlc/rng.hpp"

namespace hvlc {

struct RaceConfig {
  double epsilon = 1e-2;
  double delta = 1e-6;
  double gamma = 1.0;         ///< exponent slack in the per-round union bound, (0, 1]
  double alpha = 0.2;         ///< push target for the current minimum, as a fraction of the round target
  double round_shrink = 0.5;  ///< round target multiplier
  std::uint64_t seed = 0;
  bool enable_push = true;
  bool enable_exact_switch = true;
  double hso_cost_constant = 1.0;

  /// Throws InputError if any field is out of range.
  void validate() const;
};

/// Sampling statistics for one box of the race.
struct RaceState {
  std::size_t index = 0;
  ContributionBoundingBox bb;
  double bb_volume = 0.0;
  std::vector<std::size_t> influencers;  ///< scan order for membership tests
  std::uint64_t samples = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;
  double width = std::numeric_limits<double>::infinity();
  std::uint64_t ops = 0;  ///< coordinate comparisons spent on sampling
  bool exact = false;
  bool in_race = true;
  Rng rng;
};

/// Bounding box, influencer list and RNG stream for box `idx`.
RaceState make_race_state(const Front& front, std::size_t idx, std::uint64_t seed);

/// Confidence half-width after `samples` draws in round `round`:
///   sqrt(ln(2 n R^(1+gamma) (1+gamma) / (gamma delta)) / (2 samples)) * vol_bb.
double delta_of(double vol_bb, std::uint64_t samples, std::size_t n, std::uint64_t round, double gamma,
                double delta);

/// Smallest sample count m with delta_of(vol_bb, m, ...) <= target. Zero when vol_bb is 0.
std::uint64_t required_samples(double vol_bb, double target, std::size_t n, std::uint64_t round, double gamma,
                               double delta);

/// Draws one uniform point in the bounding box and tests it against the influencers.
/// Updates counts, the estimate and `ops`. Returns true if no influencer covers the point.
/// `scratch` must hold front.dimension() doubles.
bool sample_once(RaceState& state, const Front& front, std::span<double> scratch);
bool sample_once(RaceState& state, const Front& front);

/// Position (into `states`) of the in-race state with the smallest estimate; first wins ties.
std::size_t select_least(std::span<const RaceState> states);

/// Eliminate `a` if its lower confidence bound clears the upper bound of `least`.
bool should_delete(const RaceState& a, const RaceState& least);

/// True if every other in-race state certifies `least` as a (1 + epsilon)-minimal contributor.
bool abortion_holds(std::span<const RaceState> states, std::size_t least_pos, double epsilon);

enum class Termination {
  SingleBox,     ///< n == 1
  DominatedBox,  ///< a box with zero contribution was found without sampling
  LastSurvivor,  ///< all other boxes were eliminated
  Abortion,      ///< the (1 + epsilon) certificate held for every survivor
};

std::string_view to_string(Termination t) noexcept;

struct Elimination {
  std::size_t index;
  std::uint64_t round;

  bool operator==(const Elimination&) const = default;
};

struct SolveResult {
  std::size_t index = 0;
  double estimate = 0.0;
  bool was_exact = false;
  std::uint64_t rounds = 0;
  std::uint64_t total_samples = 0;
  std::uint64_t exact_switches = 0;
  std::vector<Elimination> eliminated;
  Termination termination = Termination::SingleBox;
  std::chrono::duration<double> elapsed{0.0};

  /// Equality of every field except the wall-clock time.
  bool same_outcome(const SolveResult& other) const;
};

/// State of the race at the end of a round, after widths meet the round target
/// and before eliminations are applied.
struct RoundSnapshot {
  std::uint64_t round;
  double target;
  std::span<const RaceState> states;
  std::size_t least;                  ///< position of the current minimum estimate
  std::span<const std::size_t> deleted;  ///< positions eliminated this round
  bool terminating;
};

using RoundObserver = std::function<void(const RoundSnapshot&)>;

/// Finds an epsilon-least contributor with probability at least 1 - delta.
SolveResult solve(const Front& front, const RaceConfig& config, const RoundObserver& observer = {});

/// Same as solve(); the result is a pure function of (front, config).
SolveResult solve_deterministic_replay(const Front& front, const RaceConfig& config);

}  // namespace hvlc
