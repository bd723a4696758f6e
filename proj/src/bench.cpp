#include "hvlc/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "hvlc/error.hpp"

namespace hvlc {

std::vector<std::size_t> expk_grid(std::size_t n_min, std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0;; ++k) {
    const double v = std::floor(std::exp(static_cast<double>(k) / 100.0));
    if (v > static_cast<double>(n_max)) break;
    const auto n = static_cast<std::size_t>(v);
    if (n >= n_min && (out.empty() || out.back() != n)) out.push_back(n);
  }
  return out;
}

double median(std::vector<double> values) {
  if (values.empty()) throw InputError("median of no values");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lo + hi) / 2.0;
}

BenchRecord run_bench_cell(DatasetKind kind, std::size_t n, std::size_t d, std::size_t reps,
                           const RaceConfig& config) {
  if (reps == 0) throw InputError("bench needs at least one repetition");
  BenchRecord rec;
  rec.kind = kind;
  rec.n = n;
  rec.d = d;
  rec.seed = config.seed;
  rec.epsilon = config.epsilon;
  rec.delta = config.delta;

  Rng cell = Rng::stream(config.seed, n);
  for (std::size_t r = 0; r < reps; ++r) {
    const std::uint64_t instance_seed = cell();
    const Front front = generate(kind, n, d, instance_seed);
    RaceConfig run_config = config;
    run_config.seed = mix64(instance_seed);
    const SolveResult res = solve(front, run_config);
    rec.run_seconds.push_back(res.elapsed.count());
    rec.total_samples.push_back(res.total_samples);
    rec.returned_index.push_back(res.index);
  }
  rec.median_seconds = median(rec.run_seconds);
  return rec;
}

void write_bench_header(std::ostream& out) { out << kBenchCsvHeader << '\n'; }

void write_bench_row(std::ostream& out, const BenchRecord& r) {
  out << fmt::format("{},{},{},{},{:.17g},{:.17g},{},{:.17g},{:.17g},{},{}\n", to_string(r.kind), r.n, r.d, r.seed,
                     r.epsilon, r.delta, r.run_seconds.size(), r.median_seconds,
                     fmt::join(r.run_seconds, ";"), fmt::join(r.total_samples, ";"),
                     fmt::join(r.returned_index, ";"));
}

namespace {

template <typename T>
T parse_number(std::string_view s, std::size_t line) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ParseError(line, "bad numeric field '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <typename T>
std::vector<T> parse_list(std::string_view s, std::size_t line) {
  std::vector<T> out;
  for (auto part : split(s, ';')) out.push_back(parse_number<T>(part, line));
  return out;
}

}  // namespace

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader) throw ParseError(1, "unexpected bench CSV header");
  std::vector<BenchRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 11) throw ParseError(line_no, "expected 11 fields");
    BenchRecord r;
    const auto kind = parse_dataset_kind(f[0]);
    if (!kind) throw ParseError(line_no, "unknown dataset '" + std::string(f[0]) + "'");
    r.kind = *kind;
    r.n = parse_number<std::size_t>(f[1], line_no);
    r.d = parse_number<std::size_t>(f[2], line_no);
    r.seed = parse_number<std::uint64_t>(f[3], line_no);
    r.epsilon = parse_number<double>(f[4], line_no);
    r.delta = parse_number<double>(f[5], line_no);
    const auto reps = parse_number<std::size_t>(f[6], line_no);
    r.median_seconds = parse_number<double>(f[7], line_no);
    r.run_seconds = parse_list<double>(f[8], line_no);
    r.total_samples = parse_list<std::uint64_t>(f[9], line_no);
    r.returned_index = parse_list<std::size_t>(f[10], line_no);
    if (r.run_seconds.size() != reps || r.total_samples.size() != reps || r.returned_index.size() != reps) {
      throw ParseError(line_no, "per-run column length does not match reps");
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace hvlc
