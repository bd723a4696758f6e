#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hvlc/datasets.hpp"
#include "hvlc/error.hpp"
#include "hvlc/exact.hpp"
#include "hvlc/rng.hpp"
#include "oracles.hpp"

using namespace hvlc;

namespace {

constexpr ExactAlgo kBoth[] = {ExactAlgo::Hso, ExactAlgo::InclusionExclusion};

Front integer_front(Rng& rng, std::size_t n, std::size_t d, std::uint64_t max_coord) {
  std::vector<Box> boxes;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> c(d);
    for (auto& x : c) x = static_cast<double>(1 + rng() % max_coord);
    boxes.emplace_back(c);
  }
  return Front(boxes);
}

Front random_front(Rng& rng, std::size_t n, std::size_t d) {
  if (d == 1) n = 1;  // a 1-D antichain has a single point
  return generate(rng() % 2 ? DatasetKind::Random1 : DatasetKind::Random2, n, d, rng());
}

}  // namespace

TEST_CASE("hyp examples") {
  for (auto algo : kBoth) {
    CHECK(hyp(Front{Box{2, 3}}, algo) == 6.0);
    CHECK(hyp(Front{Box{2, 1}, Box{1, 2}}, algo) == 3.0);
    CHECK(hyp(Front{}, algo) == 0.0);
  }
  CHECK(oracle::grid_union_volume(Front{Box{2, 1}, Box{1, 2}}, 2) == 3.0);
}

TEST_CASE("inclusion-exclusion refuses more than 25 boxes") {
  const Front f = generate(DatasetKind::Linear, 26, 2, 1);
  CHECK_THROWS_AS(hyp(f, ExactAlgo::InclusionExclusion), InputError);
  CHECK_NOTHROW(hyp(f.without(0), ExactAlgo::InclusionExclusion));
}

TEST_CASE("hyp matches unit-cell counting on integer fronts with duplicates and dominated boxes") {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 1 + rng() % 3, n = 1 + rng() % 7;
    const Front f = integer_front(rng, n, d, 6);
    const double expected = oracle::unit_cell_union_volume(f);
    for (auto algo : kBoth) CHECK(hyp(f, algo) == expected);
  }
}

TEST_CASE("con_exact examples") {
  const Front a{Box{2, 1}, Box{1, 2}};
  const Front b{Box{4, 1}, Box{2, 3}};
  for (auto algo : kBoth) {
    CHECK(con_exact(a, 0, algo) == 1.0);
    CHECK(con_exact(b, 1, algo) == 4.0);
    CHECK(con_exact(Front{Box{1, 2}, Box{2, 2}}, 0, algo) == 0.0);
  }
  CHECK(oracle::grid_contribution(a, 0, 2) == 1.0);
  CHECK(oracle::grid_contribution(b, 1, 12) == 4.0);
  CHECK_THROWS_AS(con_exact(a, 2), InputError);
}

TEST_CASE("con_exact_in_bb examples") {
  const Front f{Box{4, 1}, Box{2, 3}};
  ContributionBoundingBox bb{{2, 0}, {4, 1}};
  const std::vector<std::size_t> inf{1};
  CHECK(con_exact_in_bb(f, 0, bb, inf) == 2.0);
  CHECK(con_exact_in_bb(f, 0, bb, {}) == bb.volume());
  ContributionBoundingBox flat{{4, 1}, {4, 1}};
  CHECK(con_exact_in_bb(f, 0, flat, inf) == 0.0);
}

TEST_CASE("mincon_lc_exact examples") {
  for (auto algo : kBoth) {
    const auto a = mincon_lc_exact(Front{Box{4, 1}, Box{2, 3}}, algo);
    CHECK(a.index == 0);
    CHECK(a.contribution == 2.0);
    const auto b = mincon_lc_exact(Front{Box{3, 1}, Box{2, 2}, Box{1, 3}}, algo);
    CHECK(b.index == 0);
    CHECK(b.contribution == 1.0);
    const auto c = mincon_lc_exact(Front{Box{1, 1}}, algo);
    CHECK(c.index == 0);
    CHECK(c.contribution == 1.0);
  }
  CHECK_THROWS_AS(mincon_lc_exact(Front{}), InputError);
}

TEST_CASE("HSO agrees with inclusion-exclusion on random fronts") {
  Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12, d = 1 + rng() % 7;
    const Front f = trial % 3 == 0 ? integer_front(rng, n, d, 5) : random_front(rng, n, d);
    const double h = hyp(f, ExactAlgo::Hso);
    const double ie = hyp(f, ExactAlgo::InclusionExclusion);
    REQUIRE(std::abs(h - ie) <= 1e-9 * std::max(1.0, h));
  }
}

TEST_CASE("hyp is monotone under insertion") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 10, d = 1 + rng() % 5;
    const Front f = random_front(rng, n, d);
    std::vector<double> flat(f.flat().begin(), f.flat().end());
    for (std::size_t i = 0; i < d; ++i) flat.push_back(rng.unit() * 1.5);
    const Front g(d, flat);
    CHECK(hyp(g) >= hyp(f));
  }
}

TEST_CASE("contribution is zero exactly for weakly dominated boxes") {
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 6, d = 1 + rng() % 3;
    const Front f = integer_front(rng, n, d, 4);
    for (std::size_t idx = 0; idx < n; ++idx) {
      CHECK((con_exact(f, idx) == 0.0) == is_dominated(f, idx));
    }
  }
}

TEST_CASE("contribution inside the bounding box equals the global contribution") {
  Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 10, d = 2 + rng() % 5;
    const Front f = random_front(rng, n, d);
    for (std::size_t idx = 0; idx < n; ++idx) {
      const auto bb = contribution_bounding_box(f, idx);
      const auto inf = influencers(f, idx, bb);
      const double global = con_exact(f, idx);
      const double local = con_exact_in_bb(f, idx, bb, inf);
      REQUIRE(std::abs(global - local) <= 1e-9 * std::max(global, hyp(f) * 1e-6));
    }
  }
}

TEST_CASE("hyp and the least contribution are permutation invariant") {
  Rng rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 8, d = 2 + rng() % 4;
    const Front f = random_front(rng, n, d);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    std::vector<Box> boxes;
    for (std::size_t i : perm) boxes.push_back(f.box(i));
    const Front g(boxes);
    CHECK(hyp(g) == doctest::Approx(hyp(f)).epsilon(1e-12));
    const auto lf = mincon_lc_exact(f);
    const auto lg = mincon_lc_exact(g);
    CHECK(lg.contribution == doctest::Approx(lf.contribution).epsilon(1e-9));
    CHECK(con_exact(f, perm[lg.index]) == doctest::Approx(lf.contribution).epsilon(1e-9));
  }
}

TEST_CASE("hardness on a two-box front") {
  const Front f{Box{4, 1}, Box{2, 3}};
  const double delta = 0.5;
  const auto rep = hardness_H(f, delta);

  // Independent evaluation from grid-oracle contributions and bounding hulls.
  const double v0 = oracle::grid_contribution(f, 0, 12), v1 = oracle::grid_contribution(f, 1, 12);
  auto hull_vol = [&](std::size_t idx) {
    const auto [lo, hi] = oracle::grid_unique_hull(f, idx, 12);
    return (hi[0] - lo[0]) * (hi[1] - lo[1]);
  };
  const double b0 = hull_vol(0), b1 = hull_vol(1);
  CHECK(b0 == 2.0);
  CHECK(b1 == 4.0);
  const double gap = v1 - v0;
  const double max_vol = std::max(b0, b1);
  auto loglog = [](double x) { return x > std::exp(1.0) ? std::log(std::log(x)) : 0.0; };
  const double lc_term = (b0 * b0) / (gap * gap);
  const double other_term = (b1 * b1) / (gap * gap);
  CHECK(lc_term == 1.0);
  CHECK(other_term == 4.0);
  const double expected = lc_term * (std::log(2 / delta) + loglog(max_vol / gap)) +
                          other_term * (std::log(2 / delta) + loglog(max_vol / gap));
  CHECK(rep.H == doctest::Approx(expected).epsilon(1e-12));
  REQUIRE(rep.terms.size() == 2);
  CHECK(rep.terms[0].denominator == 2.0);
  CHECK(rep.terms[1].denominator == 2.0);
  CHECK(rep.terms[1].bb_volume == 4.0);
}

TEST_CASE("hardness is infinite with several least contributors") {
  CHECK(std::isinf(hardness_H(Front{Box{3, 1}, Box{2, 2}, Box{1, 3}}, 0.1).H));
  CHECK_THROWS_AS(hardness_H(Front{Box{1, 1}}, 0.1), InputError);
  CHECK_THROWS_AS(hardness_H(Front{Box{1, 2}, Box{2, 1}}, 1.0), InputError);
}

TEST_CASE("hardness lower bound (n-1) ln(n/delta)") {
  Rng rng(27);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 10, d = 2 + rng() % 4;
    const Front f = random_front(rng, n, d);
    const double delta = 1e-6 + rng.unit() * 0.5;
    const auto rep = hardness_H(f, delta);
    if (std::isinf(rep.H)) continue;
    CHECK(rep.H >= (static_cast<double>(n) - 1.0) * std::log(static_cast<double>(n) / delta) * (1 - 1e-12));
  }
}

TEST_CASE("estimated HSO cost") {
  CHECK(estimated_hso_cost(0, 5) == 0);
  CHECK(estimated_hso_cost(3, 2) == 9);        // 3 * C(3, 1)
  CHECK(estimated_hso_cost(9, 12) == 680238);  // 9 * C(19, 11)
  CHECK(estimated_hso_cost(4, 3, 2.5) == 100);  // 2.5 * 4 * C(5, 2)
  CHECK(estimated_hso_cost(999, 100) == UINT64_MAX);
  CHECK(estimated_hso_cost(5, 1) == 5);
}
