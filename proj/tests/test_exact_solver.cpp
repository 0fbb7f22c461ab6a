#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mincorner/exact.hpp"
#include "mincorner/oracle.hpp"
#include "support.hpp"

using namespace mincorner;
using namespace mincorner::testing;

namespace {

SolveOptions with_allowed(ColorSet s) {
  SolveOptions o;
  o.allowed = std::move(s);
  return o;
}

}  // namespace

TEST_CASE("row extension enumeration") {
  auto exts = enumerate_row_extensions(row_from({1, 1}), ColorSet::all(2));
  REQUIRE(exts.size() == 1);
  CHECK(exts[0] == row_from({1, 1}));

  exts = enumerate_row_extensions(row_from({0}), ColorSet{0, 1, 2});
  REQUIRE(exts.size() == 3);
  CHECK(exts[0] == row_from({0}));
  CHECK(exts[1] == row_from({1}));
  CHECK(exts[2] == row_from({2}));

  exts = enumerate_row_extensions(row_from({1, 0}), ColorSet{0, 1});
  REQUIRE(exts.size() == 2);
  CHECK(exts[0] == row_from({1, 0}));
  CHECK(exts[1] == row_from({1, 1}));

  // Lexicographic output order on a two-white row.
  exts = enumerate_row_extensions(row_from({0, 2, 0}), ColorSet{0, 1});
  REQUIRE(exts.size() == 4);
  CHECK(exts[0] == row_from({0, 2, 0}));
  CHECK(exts[1] == row_from({0, 2, 1}));
  CHECK(exts[2] == row_from({1, 2, 0}));
  CHECK(exts[3] == row_from({1, 2, 1}));

  CHECK(count_row_extensions(row_from({0, 2, 0}), ColorSet{0, 1}) == 4);
  CHECK_THROWS_AS(enumerate_row_extensions(RowColoring::bottom(), ColorSet{0}), Error);
}

TEST_CASE("solve_exact on the small references") {
  SolveResult r = solve_exact(grid_from({{1, 0, 1}}, 1), with_allowed({0, 1}));
  CHECK(r.optimum == CornerCount::finite(4));
  CHECK(r.extension == grid_from({{1, 1, 1}}, 1));

  r = solve_exact(grid_from({{1, 0}, {0, 1}}, 1), with_allowed({0, 1}));
  CHECK(r.optimum == CornerCount::finite(4));
  CHECK(r.extension == grid_from({{1, 1}, {1, 1}}, 1));

  r = solve_exact(ColorGrid(3, 4, 2), with_allowed(ColorSet::all(2)));
  CHECK(r.optimum == CornerCount::finite(0));
  CHECK(r.extension == ColorGrid(3, 4, 2));

  CHECK(optimal_value(grid_from({{1}, {0}, {2}}, 2), with_allowed(ColorSet::all(2))) ==
        CornerCount::finite(8));

  r = solve_exact(ColorGrid(0, 3, 1), with_allowed({0, 1}));
  CHECK(r.optimum == CornerCount::finite(0));
}

TEST_CASE("optimal_value equals solve_exact equals brute force") {
  std::mt19937 rng(101);
  for (int t = 0; t < 300; ++t) {
    ColorGrid g = random_grid(rng, 3, 3, 2);
    ColorSet allowed = ColorSet::all(g.palette_size());
    SolveResult exact = solve_exact(g, with_allowed(allowed));
    SolveResult oracle = brute_force_optimum(g, allowed);
    CHECK(exact.optimum == oracle.optimum);
    CHECK(optimal_value(g, with_allowed(allowed)) == oracle.optimum);
    CHECK(is_extension(g, exact.extension, allowed));
    CHECK(count_corners(exact.extension) == exact.optimum);
  }
}

TEST_CASE("restricting the fill domain never improves the optimum") {
  std::mt19937 rng(103);
  for (int t = 0; t < 200; ++t) {
    ColorGrid g = random_grid(rng, 3, 3, 3);
    CornerCount full = optimal_value(g, with_allowed(ColorSet::all(g.palette_size())));
    CornerCount restricted = optimal_value(g, with_allowed({0, 1}));
    CHECK(full <= restricted);
  }
}

TEST_CASE("solving the transpose gives the same optimum") {
  std::mt19937 rng(107);
  for (int t = 0; t < 100; ++t) {
    ColorGrid g = random_grid(rng, 3, 4, 2);
    SolveOptions o = with_allowed(ColorSet::all(g.palette_size()));
    o.auto_orient = false;
    CHECK(optimal_value(g, o) == optimal_value(transpose(g), o));
  }
}

TEST_CASE("solver is deterministic") {
  std::mt19937 rng(109);
  for (int t = 0; t < 50; ++t) {
    ColorGrid g = random_grid(rng, 3, 3, 2);
    SolveOptions o = with_allowed(ColorSet::all(g.palette_size()));
    SolveResult a = solve_exact(g, o);
    SolveResult b = solve_exact(g, o);
    CHECK(a.optimum == b.optimum);
    CHECK(a.extension == b.extension);
  }
}

TEST_CASE("single color objective") {
  // Only the corners of color 1 count; the fixed color-2 row is free.
  ColorGrid g = grid_from({{1, 0, 1}, {2, 2, 2}}, 2);
  SolveOptions o = with_allowed({0, 1});
  o.objective = Objective::single_color;
  o.objective_color = 1;
  SolveResult r = solve_exact(g, o);
  CHECK(r.optimum == CornerCount::finite(4));
  CHECK(count_corners_color(r.extension, 1) == CornerCount::finite(4));
}

TEST_CASE("per-row cap triggers a resource error") {
  SolveOptions o = with_allowed(ColorSet::all(1));
  o.per_row_cap = 4;
  o.auto_orient = false;
  CHECK_THROWS_AS(optimal_value(ColorGrid(1, 10, 1), o), ResourceLimitError);
}

TEST_CASE("full fill domains without white are usable") {
  // Minimum over complete two-colorings of a grid with colored corners.
  ColorGrid g = grid_from({{2, 0, 2}, {0, 1, 0}, {2, 0, 2}}, 2);
  SolveResult full = solve_exact(g, with_allowed({1, 2}));
  CHECK(full.extension.white_cell_count() == 0);
  SolveResult oracle = brute_force_optimum(g, ColorSet{1, 2});
  CHECK(full.optimum == oracle.optimum);
}

TEST_CASE("masked row-pair counting matches the definitional count") {
  std::mt19937 rng(113);
  for (int t = 0; t < 5000; ++t) {
    std::size_t n = 1 + t % 9;
    RowColoring a = random_row(rng, n, 3), b = random_row(rng, n, 3);
    std::vector<Color> colors = {1, 2, 3};
    auto ma = detail::row_masks(a, colors), mb = detail::row_masks(b, colors);
    CHECK(detail::dbar_masked(ma, mb, n) == corners_between_rows(a, b).value());
  }
}

TEST_CASE("all-optima enumeration agrees with the oracle") {
  std::mt19937 rng(127);
  for (int t = 0; t < 150; ++t) {
    ColorGrid g = random_grid(rng, 3, 3, 2);
    ColorSet allowed = ColorSet::all(g.palette_size());
    auto dp_optima = enumerate_exact_optima(g, with_allowed(allowed), 1 << 20);
    auto oracle_optima = enumerate_optima(g, allowed);
    CHECK(dp_optima == oracle_optima);
  }
}
