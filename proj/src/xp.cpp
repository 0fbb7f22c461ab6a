#include "mincorner/xp.hpp"

#include <algorithm>
#include <set>

#include "mincorner/errors.hpp"
#include "mincorner/exact.hpp"
#include "mincorner/row_dp.hpp"

namespace mincorner {

Segmentation segmentation_of(const RowColoring& row) {
  if (row.is_bottom()) throw Error("undefined row has no segmentation");
  Segmentation seg;
  const auto& cells = row.cell_vector();
  if (cells.empty()) return seg;
  seg.segment_colors.push_back(cells[0]);
  for (std::size_t x = 1; x < cells.size(); ++x)
    if (cells[x] != cells[x - 1]) {
      seg.breakpoints.push_back(x);
      seg.segment_colors.push_back(cells[x]);
    }
  return seg;
}

RowColoring row_from_segmentation(std::size_t n, const Segmentation& seg) {
  if (seg.segment_colors.size() != seg.breakpoints.size() + 1)
    throw Error("segmentation has mismatched colors and breakpoints");
  std::vector<Color> cells(n);
  std::size_t s = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (s < seg.breakpoints.size() && x == seg.breakpoints[s]) ++s;
    cells[x] = seg.segment_colors[s];
  }
  return RowColoring(std::move(cells));
}

namespace {

bool valid_candidate(const std::vector<Color>& base, const std::vector<Color>& cand,
                     const ColorSet& allowed) {
  for (std::size_t x = 0; x < base.size(); ++x) {
    if (base[x] != kWhite) {
      if (cand[x] != base[x]) return false;
    } else if (!allowed.contains(cand[x])) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<RowColoring> bounded_row_extensions(const RowColoring& row, std::uint64_t budget,
                                                const ColorSet& allowed, std::uint64_t cap) {
  if (row.is_bottom()) throw Error("cannot extend the undefined row");
  if (allowed.empty()) throw Error("the fill domain must not be empty");
  const std::size_t n = row.size();
  const CornerCount limit = CornerCount::finite(budget);

  if (n == 0) return {row};

  if (n <= budget) {
    // Narrow rows: plain enumeration beats the segment machinery.
    if (count_row_extensions(row, allowed) > cap)
      throw ResourceLimitError("row extension count exceeds the enumeration cap");
    std::vector<RowColoring> all = enumerate_row_extensions(row, allowed);
    std::vector<RowColoring> out;
    for (auto& h : all)
      if (row_corners(h) <= limit) out.push_back(std::move(h));
    return out;
  }

  // Wide rows: choose up to budget/2 breakpoints and a color per segment.
  // Candidate colors include the row's own fixed colors so that segments
  // covering fixed cells can be generated; validity is checked afterwards.
  const std::vector<Color>& base = row.cell_vector();
  ColorSet domain_set = allowed;
  for (Color c : base)
    if (c != kWhite) domain_set.insert(c);
  const std::vector<Color> domain = domain_set.to_vector();

  const std::size_t max_breaks = std::min<std::size_t>(budget / 2, n - 1);
  std::set<std::vector<Color>> results;
  std::uint64_t candidates = 0;

  std::vector<Color> cand(n);
  for (std::size_t b = 0; b <= max_breaks; ++b) {
    // Combinations of b breakpoints from 1..n-1, ascending.
    std::vector<std::size_t> pos(b);
    for (std::size_t t = 0; t < b; ++t) pos[t] = t + 1;
    while (true) {
      // Color tuples over the b+1 segments.
      std::vector<std::size_t> digit(b + 1, 0);
      while (true) {
        if (++candidates > cap)
          throw ResourceLimitError("bounded extension enumeration exceeds the cap");
        std::size_t s = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (s < b && x == pos[s]) ++s;
          cand[x] = domain[digit[s]];
        }
        if (valid_candidate(base, cand, allowed) && row_corners(RowColoring(cand)) <= limit)
          results.insert(cand);
        std::size_t d = b + 1;
        while (d > 0 && digit[d - 1] == domain.size() - 1) digit[--d] = 0;
        if (d == 0) break;
        ++digit[d - 1];
      }
      if (b == 0) break;
      // Next combination.
      std::size_t t = b;
      while (t > 0 && pos[t - 1] == n - 1 - (b - t)) --t;
      if (t == 0) break;
      ++pos[t - 1];
      for (std::size_t u = t; u < b; ++u) pos[u] = pos[u - 1] + 1;
    }
  }

  std::vector<RowColoring> out;
  out.reserve(results.size());
  for (const auto& cells : results) out.emplace_back(cells);
  return out;
}

bool xp_decide(const ColorGrid& grid, std::uint64_t budget, const ColorSet& allowed,
               std::uint64_t per_row_cap) {
  if (allowed.empty()) throw Error("the fill domain must not be empty");
  for (Color c : allowed.to_vector())
    if (c > grid.palette_size()) throw Error("fill color exceeds palette size");
  if (grid.empty()) return true;

  ExtensionProvider provider = [&grid, budget, allowed, per_row_cap](std::size_t i) {
    return bounded_row_extensions(grid.row(i), budget, allowed, per_row_cap);
  };
  RowDpResult dp = run_row_dp(grid, provider, DpObjective{Objective::total, 0}, false);
  return dp.value <= CornerCount::finite(budget);
}

}  // namespace mincorner
