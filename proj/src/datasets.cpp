#include "hvlc/datasets.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hvlc/error.hpp"

namespace hvlc {

std::string_view to_string(DatasetKind kind) noexcept {
  switch (kind) {
    case DatasetKind::Linear: return "linear";
    case DatasetKind::Spherical: return "spherical";
    case DatasetKind::Concave: return "concave";
    case DatasetKind::Random1: return "random1";
    case DatasetKind::Random2: return "random2";
  }
  return "unknown";
}

std::optional<DatasetKind> parse_dataset_kind(std::string_view name) noexcept {
  for (auto k : {DatasetKind::Linear, DatasetKind::Spherical, DatasetKind::Concave, DatasetKind::Random1,
                 DatasetKind::Random2}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

double gaussian(Rng& rng) {
  for (;;) {
    const double u = 2.0 * rng.unit() - 1.0;
    const double v = 2.0 * rng.unit() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

namespace {

void surface_point(DatasetKind kind, Rng& rng, std::span<double> out) {
  for (;;) {
    double norm = 0.0;
    for (double& y : out) {
      y = std::abs(gaussian(rng));
      switch (kind) {
        case DatasetKind::Linear: norm += y; break;
        case DatasetKind::Spherical: norm += y * y; break;
        default: norm += std::sqrt(y); break;
      }
    }
    if (kind == DatasetKind::Spherical) norm = std::sqrt(norm);
    if (kind == DatasetKind::Concave) norm = norm * norm;
    if (!(norm > 0.0)) continue;
    for (double& y : out) y /= norm;
    return;
  }
}

void space_point(DatasetKind kind, Rng& rng, std::span<double> out) {
  for (double& x : out) x = kind == DatasetKind::Random1 ? rng.unit() : std::abs(1.0 + gaussian(rng));
}

bool weakly_dominated(std::span<const double> flat, std::size_t n, std::size_t d, std::size_t j) {
  const std::span<const double> a = flat.subspan(j * d, d);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != j && dominates(flat.subspan(i * d, d), a)) return true;
  }
  return false;
}

}  // namespace

Front generate(DatasetKind kind, std::size_t n, std::size_t d, std::uint64_t seed, std::uint64_t redraws_per_box) {
  if (n == 0 || d == 0) throw InputError("dataset needs n >= 1 and d >= 1");
  Rng rng(seed);
  std::vector<double> flat(n * d);
  std::span<double> all(flat);

  const bool surface = kind == DatasetKind::Linear || kind == DatasetKind::Spherical || kind == DatasetKind::Concave;
  for (std::size_t j = 0; j < n; ++j) {
    auto p = all.subspan(j * d, d);
    if (surface) {
      surface_point(kind, rng, p);
    } else {
      space_point(kind, rng, p);
    }
  }
  if (surface) return Front(d, std::move(flat));

  const std::uint64_t budget = redraws_per_box * n;
  std::uint64_t redraws = 0;
  std::vector<std::size_t> dominated;
  for (;;) {
    dominated.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (weakly_dominated(flat, n, d, j)) dominated.push_back(j);
    }
    if (dominated.empty()) break;
    for (std::size_t j : dominated) {
      if (redraws++ >= budget) {
        throw ResourceError("antichain generation for " + std::string(to_string(kind)) + " (n=" +
                            std::to_string(n) + ", d=" + std::to_string(d) + ") exhausted " +
                            std::to_string(budget) + " redraws");
      }
      space_point(kind, rng, all.subspan(j * d, d));
    }
  }
  return Front(d, std::move(flat));
}

}  // namespace hvlc
