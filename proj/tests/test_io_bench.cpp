#include <doctest.h>

#include <sstream>

#include "hvlc/bench.hpp"
#include "hvlc/datasets.hpp"
#include "hvlc/error.hpp"
#include "hvlc/front_io.hpp"

using namespace hvlc;

TEST_CASE("read_front parses boxes, comments and blank lines") {
  std::istringstream in("# two boxes\n2 1\n\n  1\t2  \n");
  const Front f = read_front(in);
  CHECK(f == Front{Box{2, 1}, Box{1, 2}});
}

TEST_CASE("read_front errors") {
  SUBCASE("ragged") {
    std::istringstream in("1 2\n3 4\n5\n");
    try {
      read_front(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("malformed") {
    std::istringstream in("# c\n1 x2\n");
    try {
      read_front(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("negative") {
    std::istringstream in("1 -2\n");
    CHECK_THROWS_AS(read_front(in), InputError);
  }
  SUBCASE("non-finite") {
    std::istringstream in("1 inf\n");
    CHECK_THROWS_AS(read_front(in), InputError);
  }
  SUBCASE("empty") {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_AS(read_front(in), ParseError);
  }
}

TEST_CASE("front files round-trip generated fronts") {
  for (auto kind : {DatasetKind::Linear, DatasetKind::Spherical, DatasetKind::Concave, DatasetKind::Random1,
                    DatasetKind::Random2}) {
    const Front f = generate(kind, 25, 6, 4);
    std::stringstream buf;
    write_front(f, buf);
    CHECK(read_front(buf) == f);
  }
}

TEST_CASE("expk grid") {
  const auto g = expk_grid(1, 20);
  std::vector<std::size_t> expected;
  for (std::size_t n = 1; n <= 20; ++n) expected.push_back(n);
  CHECK(g == expected);
  const auto big = expk_grid(100, 1000);
  REQUIRE_FALSE(big.empty());
  CHECK(big.front() == 100);
  for (std::size_t i = 1; i < big.size(); ++i) CHECK(big[i] > big[i - 1]);
  CHECK(big.back() <= 1000);
  // floor(exp(k/100)) values near 1000: k = 690 gives 992, k = 691 gives 1002.
  CHECK(big.back() == 992);
}

TEST_CASE("median") {
  CHECK(median({3.0}) == 3.0);
  CHECK(median({5.0, 1.0, 3.0}) == 3.0);
  CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
  CHECK_THROWS_AS(median({}), InputError);
}

TEST_CASE("bench cell CSV round trip and median consistency") {
  RaceConfig cfg;
  cfg.seed = 11;
  const auto rec = run_bench_cell(DatasetKind::Linear, 20, 5, 4, cfg);
  CHECK(rec.run_seconds.size() == 4);
  CHECK(rec.median_seconds == median(rec.run_seconds));

  std::stringstream csv;
  write_bench_header(csv);
  write_bench_row(csv, rec);
  const std::string text = csv.str();
  CHECK(text.substr(0, text.find('\n')) == kBenchCsvHeader);

  const auto rows = read_bench_csv(csv);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 20);
  CHECK(rows[0].d == 5);
  CHECK(rows[0].run_seconds == rec.run_seconds);
  CHECK(rows[0].median_seconds == median(rows[0].run_seconds));
  CHECK(rows[0].returned_index == rec.returned_index);
  CHECK(rows[0].total_samples == rec.total_samples);

  // A cell depends only on its own (seed, n, rep) inputs.
  const auto again = run_bench_cell(DatasetKind::Linear, 20, 5, 4, cfg);
  CHECK(again.returned_index == rec.returned_index);
  CHECK(again.total_samples == rec.total_samples);
}
