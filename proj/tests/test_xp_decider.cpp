#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mincorner/exact.hpp"
#include "mincorner/xp.hpp"
#include "support.hpp"

using namespace mincorner;
using namespace mincorner::testing;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
  return r;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<RowColoring> exhaustive_bounded(const RowColoring& row, std::uint64_t budget,
                                            const ColorSet& allowed) {
  std::vector<RowColoring> out;
  for (auto& h : enumerate_row_extensions(row, allowed))
    if (row_corners(h) <= CornerCount::finite(budget)) out.push_back(std::move(h));
  return out;
}

}  // namespace

TEST_CASE("segmentation round trip") {
  RowColoring r = row_from({1, 1, 0, 2, 2, 2, 0});
  Segmentation s = segmentation_of(r);
  CHECK(s.breakpoints == std::vector<std::size_t>{2, 3, 6});
  CHECK(s.segment_colors == std::vector<Color>{1, 0, 2, 0});
  CHECK(row_from_segmentation(r.size(), s) == r);
}

TEST_CASE("bounded extensions on references") {
  auto exts = bounded_row_extensions(row_from({0, 0}), 0, ColorSet{0, 1});
  REQUIRE(exts.size() == 1);
  CHECK(exts[0] == row_from({0, 0}));

  exts = bounded_row_extensions(row_from({0, 0}), 4, ColorSet{0, 1});
  CHECK(exts.size() == 4);

  exts = bounded_row_extensions(row_from({1, 2, 0, 0}), 2, ColorSet::all(2));
  CHECK(exts.empty());
}

TEST_CASE("bounded extensions match exhaustive filtering") {
  std::mt19937 rng(401);
  for (int t = 0; t < 400; ++t) {
    std::size_t n = 1 + t % 8;
    int k = 1 + t % 3;
    RowColoring row = random_row(rng, n, k);
    std::uniform_int_distribution<std::uint64_t> db(0, 6);
    std::uint64_t budget = 2 * db(rng);
    ColorSet allowed = ColorSet::all(k);
    auto fast = bounded_row_extensions(row, budget, allowed);
    auto slow = exhaustive_bounded(row, budget, allowed);
    std::sort(slow.begin(), slow.end());
    CHECK(fast == slow);
    for (const auto& h : fast) {
      CHECK(row_corners(h) <= CornerCount::finite(budget));
      Segmentation seg = segmentation_of(h);
      std::size_t colored = 0;
      for (Color c : seg.segment_colors)
        if (c != kWhite) ++colored;
      CHECK(colored <= budget / 4);
    }
  }
}

TEST_CASE("bounded extension count respects the combinatorial bound") {
  std::mt19937 rng(403);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 5 + t % 5;
    int k = 1 + t % 2;
    std::uint64_t budget = 2 * (t % 3);
    if (n <= budget) continue;  // bound applies to the segment regime
    RowColoring row = random_row(rng, n, k);
    auto exts = bounded_row_extensions(row, budget, ColorSet::all(k));
    CHECK(exts.size() <= binom(n - 1, budget / 2) *
                             ipow(static_cast<std::uint64_t>(k) + 1, budget / 2 + 1));
  }
}

TEST_CASE("decision agrees with the exact optimum") {
  std::mt19937 rng(407);
  for (int t = 0; t < 200; ++t) {
    ColorGrid g = random_grid(rng, 3, 3, 2);
    SolveOptions o;
    o.allowed = ColorSet::all(g.palette_size());
    CornerCount opt = optimal_value(g, o);
    for (std::uint64_t budget = 0; budget <= 12; budget += 2)
      CHECK(xp_decide(g, budget, o.allowed) == (opt <= CornerCount::finite(budget)));
  }
}

TEST_CASE("decision on references") {
  ColorGrid g = grid_from({{1, 0, 1}}, 1);
  CHECK(xp_decide(g, 4, ColorSet::all(1)));
  CHECK_FALSE(xp_decide(g, 2, ColorSet::all(1)));
  CHECK(xp_decide(ColorGrid(2, 2, 1), 0, ColorSet::all(1)));

  std::mt19937 rng(409);
  for (int t = 0; t < 50; ++t) {
    ColorGrid r = random_grid(rng, 3, 3, 2);
    CHECK(xp_decide(r, count_corners(r).value(), ColorSet::all(r.palette_size())));
  }
}

TEST_CASE("odd budgets behave like the next even one down") {
  // Corner counts are even, so an odd budget can never be tight.
  std::mt19937 rng(411);
  for (int t = 0; t < 100; ++t) {
    ColorGrid g = random_grid(rng, 3, 3, 2);
    ColorSet allowed = ColorSet::all(g.palette_size());
    for (std::uint64_t budget : {1, 3, 5, 7, 9})
      CHECK(xp_decide(g, budget, allowed) == xp_decide(g, budget - 1, allowed));
  }
}
