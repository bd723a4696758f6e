#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hvlc {

using Coords = std::span<const double>;

/// A point in the nonnegative orthant, identified with the box [0, a_1] x ... x [0, a_d].
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<double> coords);
  Box(std::initializer_list<double> coords);

  std::size_t dimension() const noexcept { return coords_.size(); }
  Coords coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const Box&) const = default;

 private:
  std::vector<double> coords_;
};

/// An ordered set of boxes sharing one dimension. Indices are stable identifiers.
///
/// Coordinates are stored row-major in one contiguous buffer; `operator[]`
/// hands out views into it. An empty front is representable (its dimension
/// is whatever it was constructed with), but most solvers require n >= 1.
class Front {
 public:
  Front() = default;
  explicit Front(const std::vector<Box>& boxes);
  Front(std::initializer_list<Box> boxes);
  /// Takes `n * dimension` row-major coordinates.
  Front(std::size_t dimension, std::vector<double> flat);

  std::size_t size() const noexcept { return dimension_ == 0 ? 0 : flat_.size() / dimension_; }
  bool empty() const noexcept { return flat_.empty(); }
  std::size_t dimension() const noexcept { return dimension_; }

  Coords operator[](std::size_t i) const { return {flat_.data() + i * dimension_, dimension_}; }
  Box box(std::size_t i) const;
  std::span<const double> flat() const noexcept { return flat_; }

  /// Copy without box `idx`; remaining boxes keep their relative order.
  Front without(std::size_t idx) const;
  /// Copy with box `idx` replaced.
  Front with_box(std::size_t idx, Coords coords) const;

  bool operator==(const Front&) const = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<double> flat_;
};

/// Minimal axis-aligned box enclosing the region dominated by one box and no other.
struct ContributionBoundingBox {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dimension() const noexcept { return upper.size(); }
  double volume() const;
};

/// Weak dominance: a_i >= b_i in every coordinate. Throws InputError on dimension mismatch.
bool dominates(Coords a, Coords b);
bool dominates(const Box& a, const Box& b);

/// True iff p_i <= b_i for all i, i.e. p lies in the box spanned by b.
bool covers(Coords box, Coords point) noexcept;

/// prod_i max(0, upper_i - lower_i).
double box_volume(Coords lower, Coords upper) noexcept;

/// Smallest index j weakly dominated by some other box. For an exact duplicate
/// pair the larger index is the dominated one.
std::optional<std::size_t> find_dominated(const Front& front);

/// True iff box `idx` is weakly dominated by some other box (duplicates count).
bool is_dominated(const Front& front, std::size_t idx);

ContributionBoundingBox contribution_bounding_box(const Front& front, std::size_t idx);
std::vector<ContributionBoundingBox> contribution_bounding_boxes(const Front& front);

/// Boxes that can cover a point of `bb`: every j != idx with b_j > bb.lower in all
/// coordinates, ordered by the volume of bb they cover (largest first, ties by index).
std::vector<std::size_t> influencers(const Front& front, std::size_t idx,
                                     const ContributionBoundingBox& bb);

}  // namespace hvlc
