#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "hvlc/datasets.hpp"
#include "hvlc/race.hpp"

namespace hvlc {

/// One CSV row: `reps` solves on fresh fronts of one (kind, n, d) cell.
struct BenchRecord {
  DatasetKind kind = DatasetKind::Linear;
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  double median_seconds = 0.0;
  std::vector<double> run_seconds;
  std::vector<std::uint64_t> total_samples;
  std::vector<std::size_t> returned_index;
};

inline constexpr std::string_view kBenchCsvHeader =
    "dataset,n,d,seed,epsilon,delta,reps,median_seconds,run_seconds,total_samples,returned_index";

/// Distinct values floor(exp(k/100)) for k = 0, 1, ... that lie in [n_min, n_max].
std::vector<std::size_t> expk_grid(std::size_t n_min, std::size_t n_max);

/// Exact median; the mean of the two middle values for even counts.
double median(std::vector<double> values);

/// Runs one cell. Repetition r generates its front and seeds its solver from
/// (config.seed, n, r) only, so any cell can be rerun on its own.
BenchRecord run_bench_cell(DatasetKind kind, std::size_t n, std::size_t d, std::size_t reps,
                           const RaceConfig& config);

void write_bench_header(std::ostream& out);
/// Per-run columns are ';'-separated lists in run order.
void write_bench_row(std::ostream& out, const BenchRecord& record);
std::vector<BenchRecord> read_bench_csv(std::istream& in);

}  // namespace hvlc
