#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hvlc/geometry.hpp"

namespace hvlc {

enum class ExactAlgo {
  Hso,                 ///< hypervolume by slicing objectives
  InclusionExclusion,  ///< 2^n subset sum; oracle only, n <= kInclusionExclusionMaxBoxes
};

inline constexpr std::size_t kInclusionExclusionMaxBoxes = 25;

/// Volume of the union of the boxes of `front`, all anchored at the origin.
double hyp(const Front& front, ExactAlgo algo = ExactAlgo::Hso);

/// hyp(front) - hyp(front without idx), clamped at 0.
double con_exact(const Front& front, std::size_t idx, ExactAlgo algo = ExactAlgo::Hso);

/// Contribution of box idx computed inside its bounding box: VOL(bb) minus the
/// union of the influencers clipped to bb and translated so bb.lower is the origin.
double con_exact_in_bb(const Front& front, std::size_t idx, const ContributionBoundingBox& bb,
                       std::span<const std::size_t> influencer_idxs);

struct LeastContributor {
  std::size_t index;
  double contribution;
};

/// Exact least contributor; smallest index wins exact ties.
LeastContributor mincon_lc_exact(const Front& front, ExactAlgo algo = ExactAlgo::Hso);

/// All n exact contributions, each via hyp(front) - hyp(front without i).
std::vector<double> all_contributions(const Front& front, ExactAlgo algo = ExactAlgo::Hso);

struct HardnessTerm {
  std::size_t index;
  double bb_volume;
  double contribution;
  /// sec-min(V) - MINCON for the least contributor, V_A - MINCON otherwise.
  double denominator;
};

struct HardnessReport {
  double H;  ///< +infinity when the least contributor is not unique
  std::vector<HardnessTerm> terms;
};

/// Instance hardness of the racing solver's expected sample count; diagnostic only.
HardnessReport hardness_H(const Front& front, double delta, ExactAlgo algo = ExactAlgo::Hso);

/// Operation-count estimate n_A * C(n_A + d - 2, d - 1) * constant for HSO on
/// n_A boxes in d dimensions; saturates at UINT64_MAX.
std::uint64_t estimated_hso_cost(std::size_t n_boxes, std::size_t d, double constant = 1.0);

}  // namespace hvlc
