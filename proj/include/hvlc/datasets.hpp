#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "hvlc/geometry.hpp"
#include "hvlc/rng.hpp"

namespace hvlc {

enum class DatasetKind { Linear, Spherical, Concave, Random1, Random2 };

std::string_view to_string(DatasetKind kind) noexcept;
std::optional<DatasetKind> parse_dataset_kind(std::string_view name) noexcept;

/// Standard normal variate by the polar Box-Muller method (one variate per call).
double gaussian(Rng& rng);

/// Redraw budget for the Random1/Random2 antichain loop, as a multiple of n.
inline constexpr std::uint64_t kDefaultRedrawsPerBox = 1'000'000;

/// Random front of `n` points in dimension `d`.
///
/// Linear, Spherical and Concave put points on the surfaces sum x = 1,
/// sum x^2 = 1 and sum sqrt(x) = 1 of the unit cube. Random1 (uniform in
/// [0,1]^d) and Random2 (|N(1,1)| per coordinate) redraw weakly dominated
/// points until the set is an antichain, throwing ResourceError once
/// `redraws_per_box * n` redraws are spent.
Front generate(DatasetKind kind, std::size_t n, std::size_t d, std::uint64_t seed,
               std::uint64_t redraws_per_box = kDefaultRedrawsPerBox);

}  // namespace hvlc
