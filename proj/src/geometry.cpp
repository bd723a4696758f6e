#include "hvlc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hvlc/error.hpp"

namespace hvlc {

namespace {

void check_coords(Coords coords) {
  if (coords.empty()) throw InputError("box must have dimension >= 1");
  for (double c : coords) {
    if (!std::isfinite(c) || c < 0.0) {
      throw InputError("box coordinates must be finite and nonnegative, got " + std::to_string(c));
    }
  }
}

}  // namespace

Box::Box(std::vector<double> coords) : coords_(std::move(coords)) { check_coords(coords_); }

Box::Box(std::initializer_list<double> coords) : Box(std::vector<double>(coords)) {}

Front::Front(const std::vector<Box>& boxes) {
  if (boxes.empty()) return;
  dimension_ = boxes.front().dimension();
  flat_.reserve(boxes.size() * dimension_);
  for (const auto& b : boxes) {
    if (b.dimension() != dimension_) {
      throw InputError("front boxes must share one dimension (" + std::to_string(dimension_) +
                       " vs " + std::to_string(b.dimension()) + ")");
    }
    flat_.insert(flat_.end(), b.coords().begin(), b.coords().end());
  }
}

Front::Front(std::initializer_list<Box> boxes) : Front(std::vector<Box>(boxes)) {}

Front::Front(std::size_t dimension, std::vector<double> flat)
    : dimension_(dimension), flat_(std::move(flat)) {
  if (dimension_ == 0) throw InputError("front dimension must be >= 1");
  if (flat_.size() % dimension_ != 0) {
    throw InputError("flat coordinate count is not a multiple of the dimension");
  }
  for (std::size_t i = 0; i < size(); ++i) check_coords((*this)[i]);
}

Box Front::box(std::size_t i) const {
  auto c = (*this)[i];
  return Box(std::vector<double>(c.begin(), c.end()));
}

Front Front::without(std::size_t idx) const {
  Front out;
  out.dimension_ = dimension_;
  out.flat_.reserve(flat_.size() - dimension_);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == idx) continue;
    auto c = (*this)[i];
    out.flat_.insert(out.flat_.end(), c.begin(), c.end());
  }
  return out;
}

Front Front::with_box(std::size_t idx, Coords coords) const {
  if (coords.size() != dimension_) throw InputError("replacement box has wrong dimension");
  check_coords(coords);
  Front out = *this;
  std::copy(coords.begin(), coords.end(), out.flat_.begin() + static_cast<std::ptrdiff_t>(idx * dimension_));
  return out;
}

double ContributionBoundingBox::volume() const { return box_volume(lower, upper); }

bool dominates(Coords a, Coords b) {
  if (a.size() != b.size()) throw InputError("dominance check on boxes of different dimension");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

bool dominates(const Box& a, const Box& b) { return dominates(a.coords(), b.coords()); }

bool covers(Coords box, Coords point) noexcept {
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (point[i] > box[i]) return false;
  }
  return true;
}

double box_volume(Coords lower, Coords upper) noexcept {
  double v = 1.0;
  for (std::size_t i = 0; i < upper.size(); ++i) v *= std::max(0.0, upper[i] - lower[i]);
  return v;
}

bool is_dominated(const Front& front, std::size_t idx) {
  const auto a = front[idx];
  for (std::size_t j = 0; j < front.size(); ++j) {
    if (j != idx && dominates(front[j], a)) return true;
  }
  return false;
}

std::optional<std::size_t> find_dominated(const Front& front) {
  const std::size_t n = front.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || !dominates(front[i], front[j])) continue;
      // A duplicate at a larger index is the one reported, not j.
      if (i > j && dominates(front[j], front[i])) continue;
      return j;
    }
  }
  return std::nullopt;
}

ContributionBoundingBox contribution_bounding_box(const Front& front, std::size_t idx) {
  const std::size_t d = front.dimension();
  const auto a = front[idx];
  ContributionBoundingBox bb{std::vector<double>(d, 0.0), std::vector<double>(a.begin(), a.end())};

  for (std::size_t j = 0; j < front.size(); ++j) {
    if (j == idx) continue;
    const auto b = front[j];
    std::size_t below = d;  // the single dimension where b < a, if any
    std::size_t count = 0;
    for (std::size_t i = 0; i < d && count < 2; ++i) {
      if (b[i] < a[i]) {
        below = i;
        ++count;
      }
    }
    if (count == 0) {
      bb.lower = bb.upper;
      return bb;
    }
    if (count == 1) bb.lower[below] = std::max(bb.lower[below], b[below]);
  }
  return bb;
}

std::vector<ContributionBoundingBox> contribution_bounding_boxes(const Front& front) {
  std::vector<ContributionBoundingBox> out;
  out.reserve(front.size());
  for (std::size_t i = 0; i < front.size(); ++i) out.push_back(contribution_bounding_box(front, i));
  return out;
}

std::vector<std::size_t> influencers(const Front& front, std::size_t idx,
                                     const ContributionBoundingBox& bb) {
  const std::size_t d = front.dimension();
  struct Entry {
    std::size_t index;
    double log_volume;
  };
  std::vector<Entry> entries;
  for (std::size_t j = 0; j < front.size(); ++j) {
    if (j == idx) continue;
    const auto b = front[j];
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) inside = b[i] > bb.lower[i];
    if (!inside) continue;
    // Ordered in log space: in high dimension the plain product underflows and
    // would collapse the ordering into index ties.
    double lv = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double extent = std::min(b[i], bb.upper[i]) - bb.lower[i];
      lv += extent > 0.0 ? std::log(extent) : -std::numeric_limits<double>::infinity();
    }
    entries.push_back({j, lv});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.log_volume > y.log_volume; });
  std::vector<std::size_t> out(entries.size());
  std::transform(entries.begin(), entries.end(), out.begin(), [](const Entry& e) { return e.index; });
  return out;
}

}  // namespace hvlc
