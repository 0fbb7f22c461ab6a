#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mincorner/oracle.hpp"
#include "support.hpp"

using namespace mincorner;
using namespace mincorner::testing;

TEST_CASE("brute force optimum on references") {
  CHECK(brute_force_optimum(grid_from({{1, 0, 1}}, 1), ColorSet{0, 1}).optimum ==
        CornerCount::finite(4));
  CHECK(brute_force_optimum(ColorGrid(2, 2, 2), ColorSet::all(2)).optimum ==
        CornerCount::finite(0));
  CHECK(brute_force_optimum(grid_from({{1, 0}, {0, 1}}, 1), ColorSet{0, 1}).optimum ==
        CornerCount::finite(4));
}

TEST_CASE("witness is the lexicographically smallest optimum") {
  std::mt19937 rng(131);
  for (int t = 0; t < 100; ++t) {
    ColorGrid g = random_grid(rng, 3, 3, 2);
    ColorSet allowed = ColorSet::all(g.palette_size());
    auto optima = enumerate_optima(g, allowed);
    REQUIRE(!optima.empty());
    CHECK(brute_force_optimum(g, allowed).extension == optima.front());
    for (std::size_t i = 1; i < optima.size(); ++i) CHECK(optima[i - 1].cells() < optima[i].cells());
    for (const auto& h : optima) {
      CHECK(is_extension(g, h, allowed));
      CHECK(count_corners(h) == brute_force_optimum(g, allowed).optimum);
    }
  }
}

TEST_CASE("optima enumeration on references") {
  auto optima = enumerate_optima(grid_from({{1, 0, 1}}, 1), ColorSet{0, 1});
  REQUIRE(optima.size() == 1);
  CHECK(optima[0] == grid_from({{1, 1, 1}}, 1));

  optima = enumerate_optima(ColorGrid(1, 1, 1), ColorSet::all(1));
  REQUIRE(optima.size() == 1);
  CHECK(optima[0] == ColorGrid(1, 1, 1));
}

TEST_CASE("oracle cap") {
  OracleOptions opts;
  opts.cap = 8;
  CHECK_THROWS_AS(brute_force_optimum(ColorGrid(2, 2, 1), ColorSet::all(1), opts),
                  ResourceLimitError);
}

TEST_CASE("grouped enumeration") {
  ColorGrid g = grid_from({{1, 0, 1}}, 1);
  auto optima = enumerate_optima_grouped(g, 1, {{{1, 2}}});
  REQUIRE(optima.size() == 1);
  CHECK(optima[0] == grid_from({{1, 1, 1}}, 1));

  // A group that is never worth coloring: the base grid is the sole optimum.
  ColorGrid h = grid_from({{1, 0, 0}}, 1);
  optima = enumerate_optima_grouped(h, 1, {{{1, 3}}});
  REQUIRE(optima.size() == 1);
  CHECK(optima[0] == h);

  CHECK_THROWS_AS(enumerate_optima_grouped(g, 1, {{{1, 1}}}), Error);
  CHECK_THROWS_AS(enumerate_optima_grouped(g, 1, {{{1, 2}}, {{1, 2}}}), Error);
  CHECK_THROWS_AS(enumerate_optima_grouped(g, 3, {{{1, 2}}}), Error);
}
