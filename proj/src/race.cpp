#include "hvlc/race.hpp"

#include <algorithm>
#include <cmath>

#include "hvlc/error.hpp"
#include "hvlc/exact.hpp"

namespace hvlc {

void RaceConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InputError("epsilon must be > 0");
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("delta must lie in (0, 1)");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InputError("gamma must lie in (0, 1]");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  if (!(round_shrink > 0.0 && round_shrink < 1.0)) throw InputError("round shrink must lie in (0, 1)");
  if (!(hso_cost_constant > 0.0)) throw InputError("HSO cost constant must be > 0");
}

RaceState make_race_state(const Front& front, std::size_t idx, std::uint64_t seed) {
  RaceState s;
  s.index = idx;
  s.bb = contribution_bounding_box(front, idx);
  s.bb_volume = s.bb.volume();
  s.influencers = influencers(front, idx, s.bb);
  s.rng = Rng::stream(seed, idx);
  return s;
}

namespace {

double log_factor(std::size_t n, std::uint64_t round, double gamma, double delta) {
  return std::log(2.0 * static_cast<double>(n)) + (1.0 + gamma) * std::log(static_cast<double>(round)) +
         std::log((1.0 + gamma) / gamma) - std::log(delta);
}

}  // namespace

double delta_of(double vol_bb, std::uint64_t samples, std::size_t n, std::uint64_t round, double gamma,
                double delta) {
  if (vol_bb <= 0.0) return 0.0;
  if (samples == 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(log_factor(n, round, gamma, delta) / (2.0 * static_cast<double>(samples))) * vol_bb;
}

std::uint64_t required_samples(double vol_bb, double target, std::size_t n, std::uint64_t round, double gamma,
                               double delta) {
  if (vol_bb <= 0.0) return 0;
  const double ratio = vol_bb / target;
  const double approx = std::ceil(log_factor(n, round, gamma, delta) * 0.5 * ratio * ratio);
  if (!(approx < 0x1.0p62)) throw ResourceError("required sample count exceeds 2^62");
  auto m = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(approx));
  // Correct for rounding in the closed form.
  while (delta_of(vol_bb, m, n, round, gamma, delta) > target) ++m;
  while (m > 1 && delta_of(vol_bb, m - 1, n, round, gamma, delta) <= target) --m;
  return m;
}

bool sample_once(RaceState& state, const Front& front, std::span<double> scratch) {
  const std::size_t d = front.dimension();
  for (std::size_t i = 0; i < d; ++i) {
    scratch[i] = state.bb.lower[i] + state.rng.unit() * (state.bb.upper[i] - state.bb.lower[i]);
  }
  bool covered = false;
  for (std::size_t j : state.influencers) {
    const auto b = front[j];
    std::size_t i = 0;
    while (i < d) {
      ++state.ops;
      if (scratch[i] > b[i]) break;
      ++i;
    }
    if (i == d) {
      covered = true;
      break;
    }
  }
  ++state.samples;
  if (!covered) ++state.successes;
  state.estimate =
      static_cast<double>(state.successes) / static_cast<double>(state.samples) * state.bb_volume;
  return !covered;
}

bool sample_once(RaceState& state, const Front& front) {
  std::vector<double> scratch(front.dimension());
  return sample_once(state, front, scratch);
}

std::size_t select_least(std::span<const RaceState> states) {
  std::size_t best = states.size();
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!states[k].in_race) continue;
    if (best == states.size() || states[k].estimate < states[best].estimate) best = k;
  }
  return best;
}

bool should_delete(const RaceState& a, const RaceState& least) {
  return a.estimate - a.width > least.estimate + least.width;
}

bool abortion_holds(std::span<const RaceState> states, std::size_t least_pos, double epsilon) {
  const auto& lc = states[least_pos];
  const double upper = lc.estimate + lc.width;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (k == least_pos || !states[k].in_race) continue;
    const double lower = states[k].estimate - states[k].width;
    if (!(lower > 0.0) || upper / lower > 1.0 + epsilon) return false;
  }
  return true;
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::SingleBox: return "single_box";
    case Termination::DominatedBox: return "dominated_box";
    case Termination::LastSurvivor: return "last_survivor";
    case Termination::Abortion: return "abortion";
  }
  return "unknown";
}

bool SolveResult::same_outcome(const SolveResult& o) const {
  return index == o.index && estimate == o.estimate && was_exact == o.was_exact && rounds == o.rounds &&
         total_samples == o.total_samples && exact_switches == o.exact_switches && eliminated == o.eliminated &&
         termination == o.termination;
}

namespace {

class Race {
 public:
  Race(const Front& front, const RaceConfig& config)
      : front_(front), config_(config), n_(front.size()), scratch_(front.dimension()) {}

  SolveResult run(const RoundObserver& observer) {
    SolveResult result;
    if (n_ == 1) {
      result.index = 0;
      result.estimate = box_volume(std::vector<double>(front_.dimension(), 0.0), front_[0]);
      result.was_exact = true;
      result.termination = Termination::SingleBox;
      return result;
    }
    if (auto dominated = find_dominated(front_)) return zero_contributor(*dominated);

    states_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      states_.push_back(make_race_state(front_, i, config_.seed));
      if (states_.back().bb_volume <= 0.0) return zero_contributor(i);
    }
    costs_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      costs_[i] = estimated_hso_cost(states_[i].influencers.size(), front_.dimension(), config_.hso_cost_constant);
    }

    double target = 0.0;
    for (const auto& s : states_) target = std::max(target, s.bb_volume);
    std::uint64_t round = 0;
    std::size_t survivors = n_;
    std::vector<std::size_t> deleted;

    for (;;) {
      target *= config_.round_shrink;
      ++round;
      for (auto& s : states_) {
        // Widths never grow: the log factor rises with the round, so hold each
        // box to its previous width as well as the round target.
        if (s.in_race) refine(s, std::min(target, s.width), round);
      }
      std::size_t least = select_least(states_);
      if (config_.enable_push && !states_[least].exact) {
        refine(states_[least], std::min(config_.alpha * target, states_[least].width), round);
        least = select_least(states_);
      }

      deleted.clear();
      for (std::size_t k = 0; k < n_; ++k) {
        if (k != least && states_[k].in_race && should_delete(states_[k], states_[least])) deleted.push_back(k);
      }
      const std::size_t remaining = survivors - deleted.size();
      bool done = remaining == 1;
      if (!done) {
        for (std::size_t k : deleted) states_[k].in_race = false;
        done = abortion_holds(states_, least, config_.epsilon);
        for (std::size_t k : deleted) states_[k].in_race = true;
      }

      if (observer) observer(RoundSnapshot{round, target, states_, least, deleted, done});

      for (std::size_t k : deleted) {
        states_[k].in_race = false;
        result.eliminated.push_back({states_[k].index, round});
      }
      survivors = remaining;

      if (done) {
        const auto& lc = states_[least];
        result.index = lc.index;
        result.estimate = lc.estimate;
        result.was_exact = lc.exact;
        result.rounds = round;
        result.termination = remaining == 1 ? Termination::LastSurvivor : Termination::Abortion;
        break;
      }
    }
    for (const auto& s : states_) result.total_samples += s.samples;
    result.exact_switches = exact_switches_;
    return result;
  }

 private:
  SolveResult zero_contributor(std::size_t idx) const {
    SolveResult r;
    r.index = idx;
    r.estimate = 0.0;
    r.was_exact = true;
    r.termination = Termination::DominatedBox;
    return r;
  }

  /// Samples box `s` until its width at `round` is at most `goal`, switching
  /// to an exact computation once sampling has cost more than HSO would.
  void refine(RaceState& s, double goal, std::uint64_t round) {
    if (s.exact) return;
    const std::uint64_t needed =
        required_samples(s.bb_volume, goal, n_, round, config_.gamma, config_.delta);
    const std::uint64_t cost = costs_[s.index];
    while (s.samples < needed) {
      if (config_.enable_exact_switch && s.ops > cost) {
        switch_to_exact(s);
        return;
      }
      sample_once(s, front_, scratch_);
    }
    if (config_.enable_exact_switch && s.ops > cost) {
      switch_to_exact(s);
      return;
    }
    s.width = delta_of(s.bb_volume, s.samples, n_, round, config_.gamma, config_.delta);
  }

  void switch_to_exact(RaceState& s) {
    s.estimate = con_exact_in_bb(front_, s.index, s.bb, s.influencers);
    s.width = 0.0;
    s.exact = true;
    ++exact_switches_;
  }

  const Front& front_;
  const RaceConfig& config_;
  std::size_t n_;
  std::vector<double> scratch_;
  std::vector<RaceState> states_;
  std::vector<std::uint64_t> costs_;
  std::uint64_t exact_switches_ = 0;
};

}  // namespace

SolveResult solve(const Front& front, const RaceConfig& config, const RoundObserver& observer) {
  config.validate();
  if (front.empty()) throw InputError("cannot solve an empty front");
  const auto start = std::chrono::steady_clock::now();
  SolveResult result = Race(front, config).run(observer);
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SolveResult solve_deterministic_replay(const Front& front, const RaceConfig& config) {
  return solve(front, config);
}

}  // namespace hvlc
