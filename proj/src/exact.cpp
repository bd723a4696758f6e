#include "hvlc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hvlc/error.hpp"

namespace hvlc {

namespace {

using PointRefs = std::vector<const double*>;

/// Keeps only points not weakly dominated in the first k coordinates. Among
/// duplicates the first occurrence survives.
PointRefs nondominated(const PointRefs& pts, std::size_t k) {
  PointRefs out;
  out.reserve(pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < pts.size() && !dominated; ++b) {
      if (a == b) continue;
      bool ge = true;
      bool equal = true;
      for (std::size_t i = 0; i < k && ge; ++i) {
        ge = pts[b][i] >= pts[a][i];
        equal = equal && pts[b][i] == pts[a][i];
      }
      dominated = ge && (!equal || b < a);
    }
    if (!dominated) out.push_back(pts[a]);
  }
  return out;
}

double hso_2d(PointRefs pts) {
  std::sort(pts.begin(), pts.end(), [](const double* a, const double* b) { return a[1] > b[1]; });
  double vol = 0.0;
  double reach = 0.0;  // max x_0 seen so far
  for (std::size_t i = 0; i < pts.size(); ++i) {
    reach = std::max(reach, pts[i][0]);
    const double next = i + 1 < pts.size() ? pts[i + 1][1] : 0.0;
    vol += reach * (pts[i][1] - next);
  }
  return vol;
}

/// Union volume of the boxes in `pts` restricted to coordinates [0, k).
/// Slices along coordinate k-1, recursing on the boxes that reach each slab.
double hso(PointRefs pts, std::size_t k) {
  if (pts.empty()) return 0.0;
  if (k == 1) {
    double m = 0.0;
    for (const double* p : pts) m = std::max(m, p[0]);
    return m;
  }
  if (k == 2) return hso_2d(std::move(pts));

  const std::size_t axis = k - 1;
  std::sort(pts.begin(), pts.end(), [axis](const double* a, const double* b) { return a[axis] > b[axis]; });
  double vol = 0.0;
  PointRefs slab;
  slab.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    slab.push_back(pts[i]);
    const double next = i + 1 < pts.size() ? pts[i + 1][axis] : 0.0;
    const double depth = pts[i][axis] - next;
    if (depth <= 0.0) continue;
    slab = nondominated(slab, axis);
    vol += depth * hso(slab, axis);
  }
  return vol;
}

void inclexcl_rec(const Front& front, std::size_t start, std::vector<double>& mins, std::size_t depth,
                  double& acc) {
  const std::size_t d = front.dimension();
  std::vector<double> saved(d);
  for (std::size_t j = start; j < front.size(); ++j) {
    const auto b = front[j];
    std::copy(mins.begin(), mins.end(), saved.begin());
    double prod = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      mins[i] = std::min(mins[i], b[i]);
      prod *= mins[i];
    }
    acc += (depth % 2 == 0 ? prod : -prod);
    inclexcl_rec(front, j + 1, mins, depth + 1, acc);
    std::copy(saved.begin(), saved.end(), mins.begin());
  }
}

double hyp_inclusion_exclusion(const Front& front) {
  if (front.size() > kInclusionExclusionMaxBoxes) {
    throw InputError("inclusion-exclusion accepts at most " + std::to_string(kInclusionExclusionMaxBoxes) +
                     " boxes, got " + std::to_string(front.size()));
  }
  std::vector<double> mins(front.dimension(), std::numeric_limits<double>::infinity());
  double acc = 0.0;
  inclexcl_rec(front, 0, mins, 0, acc);
  return std::max(0.0, acc);
}

double clamped_log_log(double x) { return x > std::exp(1.0) ? std::log(std::log(x)) : 0.0; }

}  // namespace

double hyp(const Front& front, ExactAlgo algo) {
  if (front.empty()) return 0.0;
  if (algo == ExactAlgo::InclusionExclusion) return hyp_inclusion_exclusion(front);
  PointRefs pts;
  pts.reserve(front.size());
  for (std::size_t i = 0; i < front.size(); ++i) pts.push_back(front[i].data());
  const std::size_t d = front.dimension();
  return hso(nondominated(pts, d), d);
}

double con_exact(const Front& front, std::size_t idx, ExactAlgo algo) {
  if (idx >= front.size()) throw InputError("box index out of range");
  return std::max(0.0, hyp(front, algo) - hyp(front.without(idx), algo));
}

std::vector<double> all_contributions(const Front& front, ExactAlgo algo) {
  const double total = hyp(front, algo);
  std::vector<double> out(front.size());
  for (std::size_t i = 0; i < front.size(); ++i) {
    out[i] = std::max(0.0, total - hyp(front.without(i), algo));
  }
  return out;
}

double con_exact_in_bb(const Front& front, std::size_t idx, const ContributionBoundingBox& bb,
                       std::span<const std::size_t> influencer_idxs) {
  (void)idx;
  const double bb_vol = bb.volume();
  if (bb_vol <= 0.0) return 0.0;
  if (influencer_idxs.empty()) return bb_vol;

  const std::size_t d = front.dimension();
  std::vector<double> flat;
  flat.reserve(influencer_idxs.size() * d);
  for (std::size_t j : influencer_idxs) {
    const auto b = front[j];
    for (std::size_t i = 0; i < d; ++i) {
      flat.push_back(std::max(0.0, std::min(b[i], bb.upper[i]) - bb.lower[i]));
    }
  }
  const Front clipped(d, std::move(flat));
  return std::max(0.0, bb_vol - hyp(clipped, ExactAlgo::Hso));
}

LeastContributor mincon_lc_exact(const Front& front, ExactAlgo algo) {
  if (front.empty()) throw InputError("least contributor of an empty front");
  const auto cons = all_contributions(front, algo);
  const auto it = std::min_element(cons.begin(), cons.end());
  return {static_cast<std::size_t>(it - cons.begin()), *it};
}

HardnessReport hardness_H(const Front& front, double delta, ExactAlgo algo) {
  const std::size_t n = front.size();
  if (n < 2) throw InputError("hardness needs at least two boxes");
  if (!(delta > 0.0 && delta < 1.0)) throw InputError("delta must lie in (0, 1)");

  const auto cons = all_contributions(front, algo);
  const auto bbs = contribution_bounding_boxes(front);
  std::vector<double> vols(n);
  double max_vol = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    vols[i] = bbs[i].volume();
    max_vol = std::max(max_vol, vols[i]);
  }

  const auto lc = static_cast<std::size_t>(std::min_element(cons.begin(), cons.end()) - cons.begin());
  const double mincon = cons[lc];
  double sec_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (i != lc) sec_min = std::min(sec_min, cons[i]);
  }

  HardnessReport report{0.0, {}};
  const double log_term = std::log(static_cast<double>(n) / delta);
  bool undefined = sec_min == mincon;
  for (std::size_t i = 0; i < n; ++i) {
    const double gap = i == lc ? sec_min - mincon : cons[i] - mincon;
    report.terms.push_back({i, vols[i], cons[i], gap});
    if (gap <= 0.0) {
      undefined = true;
      continue;
    }
    const double ratio = vols[i] / gap;
    report.H += ratio * ratio * (log_term + clamped_log_log(max_vol / gap));
  }
  if (undefined) report.H = std::numeric_limits<double>::infinity();
  return report;
}

std::uint64_t estimated_hso_cost(std::size_t n_boxes, std::size_t d, double constant) {
  constexpr double kMax = static_cast<double>(std::numeric_limits<std::uint64_t>::max());
  if (n_boxes == 0 || d == 0) return 0;
  // C(n_A + d - 2, d - 1), evaluated multiplicatively with the smaller of k, top - k.
  const std::size_t top = n_boxes + d - 2;
  const std::size_t k = d - 1;
  if (k > top) return 0;
  const std::size_t kk = std::min(k, top - k);
  double binom = 1.0;
  for (std::size_t i = 1; i <= kk; ++i) {
    binom = binom * static_cast<double>(top - kk + i) / static_cast<double>(i);
    if (binom >= kMax) return std::numeric_limits<std::uint64_t>::max();
  }
  const double cost = constant * static_cast<double>(n_boxes) * std::round(binom);
  if (!(cost < kMax)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(cost);
}

}  // namespace hvlc
