#include "mincorner/row_dp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "mincorner/errors.hpp"

namespace mincorner {

namespace detail {

std::vector<std::uint64_t> row_masks(const RowColoring& row, const std::vector<Color>& colors) {
  // Cell x (1-based) occupies bit x; bits 0 and n+1 stay zero as the padding.
  std::vector<std::uint64_t> masks(colors.size(), 0);
  const auto& cells = row.cell_vector();
  for (std::size_t t = 0; t < colors.size(); ++t) {
    std::uint64_t m = 0;
    for (std::size_t x = 0; x < cells.size(); ++x)
      if (cells[x] == colors[t]) m |= std::uint64_t{1} << (x + 1);
    masks[t] = m;
  }
  return masks;
}

std::uint64_t dbar_masked(const std::vector<std::uint64_t>& top,
                          const std::vector<std::uint64_t>& bottom, std::size_t n) {
  const std::uint64_t window = (std::uint64_t{1} << (n + 1)) - 1;
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < top.size(); ++t) {
    const std::uint64_t g = top[t], h = bottom[t];
    const std::uint64_t x = g ^ h;
    if (x == 0) continue;
    const std::uint64_t s = g & ~h;
    const std::uint64_t one = (x ^ (x >> 1)) & window;
    const std::uint64_t both = (x & (x >> 1)) & (s ^ (s >> 1)) & window;
    total += static_cast<std::uint64_t>(std::popcount(one)) +
             2 * static_cast<std::uint64_t>(std::popcount(both));
  }
  return total;
}

}  // namespace detail

namespace {

constexpr std::uint64_t kAbsent = std::numeric_limits<std::uint64_t>::max();

// Colors whose corners the objective counts: the single color, or every
// non-white color that can appear in any extension of the grid.
std::vector<Color> active_colors(const ColorGrid& grid, const DpObjective& obj) {
  if (obj.kind == Objective::single_color) {
    if (obj.color == kWhite) throw Error("objective color must not be white");
    return {obj.color};
  }
  std::vector<bool> present(256, false);
  for (Color c : grid.cells()) present[c] = true;
  for (int c = 1; c <= grid.palette_size(); ++c) present[static_cast<std::size_t>(c)] = true;
  std::vector<Color> out;
  for (std::size_t c = 1; c < 256; ++c)
    if (present[c]) out.push_back(static_cast<Color>(c));
  return out;
}

std::uint64_t dbar_plain(const RowColoring& a, const RowColoring& b,
                         const std::vector<Color>& colors, const DpObjective& obj) {
  if (obj.kind == Objective::single_color)
    return corners_between_rows_color(a, b, obj.color).value();
  (void)colors;
  return corners_between_rows(a, b).value();
}

struct Layer {
  std::vector<RowColoring> exts;
  std::vector<std::uint64_t> bits;  // exts.size() * n_colors, row-major
  std::vector<std::uint64_t> cost;
  std::vector<std::uint32_t> pred;
};

struct Engine {
  const ColorGrid& grid;
  const ExtensionProvider& provider;
  DpObjective obj;
  std::vector<Color> colors;
  bool use_masks;
  std::size_t n;

  Engine(const ColorGrid& g, const ExtensionProvider& p, const DpObjective& o)
      : grid(g), provider(p), obj(o), colors(active_colors(g, o)), n(g.cols()) {
    use_masks = n + 2 <= 64;
  }

  Layer make_layer(std::size_t row_index, bool want_pred) const {
    Layer layer;
    layer.exts = provider(row_index);
    layer.cost.assign(layer.exts.size(), kAbsent);
    if (want_pred) layer.pred.assign(layer.exts.size(), 0);
    if (use_masks) {
      layer.bits.resize(layer.exts.size() * colors.size());
      for (std::size_t e = 0; e < layer.exts.size(); ++e) {
        auto m = detail::row_masks(layer.exts[e], colors);
        std::copy(m.begin(), m.end(), layer.bits.begin() + static_cast<std::ptrdiff_t>(e * colors.size()));
      }
    }
    return layer;
  }

  std::uint64_t dbar_between(const Layer& a, std::size_t ea, const Layer& b, std::size_t eb) const {
    if (use_masks) {
      const std::uint64_t window = (std::uint64_t{1} << (n + 1)) - 1;
      const std::uint64_t* ga = &a.bits[ea * colors.size()];
      const std::uint64_t* gb = &b.bits[eb * colors.size()];
      std::uint64_t total = 0;
      for (std::size_t t = 0; t < colors.size(); ++t) {
        const std::uint64_t x = ga[t] ^ gb[t];
        if (x == 0) continue;
        const std::uint64_t s = ga[t] & ~gb[t];
        const std::uint64_t one = (x ^ (x >> 1)) & window;
        const std::uint64_t both = (x & (x >> 1)) & (s ^ (s >> 1)) & window;
        total += static_cast<std::uint64_t>(std::popcount(one)) +
                 2 * static_cast<std::uint64_t>(std::popcount(both));
      }
      return total;
    }
    return dbar_plain(a.exts[ea], b.exts[eb], colors, obj);
  }

  std::uint64_t dbar_to_white(const Layer& a, std::size_t ea) const {
    if (use_masks) {
      const std::uint64_t window = (std::uint64_t{1} << (n + 1)) - 1;
      const std::uint64_t* ga = &a.bits[ea * colors.size()];
      std::uint64_t total = 0;
      for (std::size_t t = 0; t < colors.size(); ++t) {
        const std::uint64_t x = ga[t];
        if (x == 0) continue;
        const std::uint64_t one = (x ^ (x >> 1)) & window;
        total += static_cast<std::uint64_t>(std::popcount(one));
      }
      return total;
    }
    return dbar_plain(a.exts[ea], RowColoring::white(n), colors, obj);
  }
};

}  // namespace

RowDpResult run_row_dp(const ColorGrid& grid, const ExtensionProvider& provider,
                       const DpObjective& objective, bool want_witness) {
  const std::size_t m = grid.rows();
  if (grid.empty()) {
    RowDpResult r{CornerCount::finite(0), {}};
    if (want_witness)
      for (std::size_t i = 1; i <= m; ++i) r.witness_rows.push_back(grid.row(i));
    return r;
  }

  Engine eng(grid, provider, objective);

  std::vector<Layer> kept;  // all layers when a witness is wanted
  Layer prev = eng.make_layer(1, false);
  if (prev.exts.empty()) return {CornerCount::infinite(), {}};
  for (std::size_t e = 0; e < prev.exts.size(); ++e) prev.cost[e] = eng.dbar_to_white(prev, e);

  for (std::size_t i = 2; i <= m; ++i) {
    Layer cur = eng.make_layer(i, want_witness);
    if (cur.exts.empty()) return {CornerCount::infinite(), {}};
    for (std::size_t g = 0; g < cur.exts.size(); ++g) {
      std::uint64_t best = kAbsent;
      std::uint32_t bestp = 0;
      for (std::size_t h = 0; h < prev.exts.size(); ++h) {
        if (prev.cost[h] == kAbsent) continue;
        const std::uint64_t c = prev.cost[h] + eng.dbar_between(prev, h, cur, g);
        if (c < best) {
          best = c;
          bestp = static_cast<std::uint32_t>(h);
        }
      }
      cur.cost[g] = best;
      if (want_witness) cur.pred[g] = bestp;
    }
    if (want_witness) kept.push_back(std::move(prev));
    prev = std::move(cur);
  }

  std::uint64_t best = kAbsent;
  std::size_t best_last = 0;
  for (std::size_t h = 0; h < prev.exts.size(); ++h) {
    if (prev.cost[h] == kAbsent) continue;
    const std::uint64_t c = prev.cost[h] + eng.dbar_to_white(prev, h);
    if (c < best) {
      best = c;
      best_last = h;
    }
  }
  if (best == kAbsent) return {CornerCount::infinite(), {}};

  RowDpResult result{CornerCount::finite(best), {}};
  if (want_witness) {
    std::vector<RowColoring> rows(m);
    std::size_t e = best_last;
    rows[m - 1] = prev.exts[e];
    std::size_t p = m >= 2 ? prev.pred.empty() ? 0 : prev.pred[e] : 0;
    for (std::size_t i = m; i-- > 1;) {
      const Layer& layer = kept[i - 1];
      rows[i - 1] = layer.exts[p];
      if (i >= 2) p = layer.pred.empty() ? 0 : layer.pred[p];
    }
    result.witness_rows = std::move(rows);
  }
  return result;
}

std::vector<ColorGrid> run_row_dp_all_optima(const ColorGrid& grid,
                                             const ExtensionProvider& provider,
                                             const DpObjective& objective,
                                             std::size_t max_results) {
  const std::size_t m = grid.rows();
  if (grid.empty()) return {grid};

  Engine eng(grid, provider, objective);

  std::vector<Layer> layers;
  layers.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    layers.push_back(eng.make_layer(i, false));
    if (layers.back().exts.empty()) return {};
  }
  Layer& first = layers[0];
  for (std::size_t e = 0; e < first.exts.size(); ++e) first.cost[e] = eng.dbar_to_white(first, e);
  for (std::size_t i = 1; i < m; ++i) {
    Layer& prev = layers[i - 1];
    Layer& cur = layers[i];
    for (std::size_t g = 0; g < cur.exts.size(); ++g) {
      std::uint64_t best = kAbsent;
      for (std::size_t h = 0; h < prev.exts.size(); ++h) {
        if (prev.cost[h] == kAbsent) continue;
        const std::uint64_t c = prev.cost[h] + eng.dbar_between(prev, h, cur, g);
        best = std::min(best, c);
      }
      cur.cost[g] = best;
    }
  }
  std::uint64_t opt = kAbsent;
  Layer& last = layers[m - 1];
  for (std::size_t h = 0; h < last.exts.size(); ++h)
    if (last.cost[h] != kAbsent) opt = std::min(opt, last.cost[h] + eng.dbar_to_white(last, h));
  if (opt == kAbsent) return {};

  // Every optimal extension has tight layer prefixes, so walking equality
  // backwards enumerates exactly the optimal row sequences.
  std::vector<ColorGrid> out;
  std::vector<std::size_t> choice(m);
  auto emit = [&]() {
    std::vector<Color> cells;
    cells.reserve(m * grid.cols());
    for (std::size_t i = 0; i < m; ++i) {
      const auto& v = layers[i].exts[choice[i]].cell_vector();
      cells.insert(cells.end(), v.begin(), v.end());
    }
    if (out.size() >= max_results)
      throw ResourceLimitError("too many optimal extensions to enumerate");
    out.emplace_back(m, grid.cols(), grid.palette_size(), std::move(cells));
  };
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    // choice[i] fixed with required prefix cost layers[i].cost[choice[i]].
    if (i == 0) {
      emit();
      return;
    }
    const Layer& prev = layers[i - 1];
    const Layer& cur = layers[i];
    const std::uint64_t target = cur.cost[choice[i]];
    for (std::size_t h = 0; h < prev.exts.size(); ++h) {
      if (prev.cost[h] == kAbsent) continue;
      if (prev.cost[h] + eng.dbar_between(prev, h, cur, choice[i]) == target) {
        choice[i - 1] = h;
        walk(i - 1);
      }
    }
  };
  for (std::size_t h = 0; h < last.exts.size(); ++h) {
    if (last.cost[h] == kAbsent) continue;
    if (last.cost[h] + eng.dbar_to_white(last, h) == opt) {
      choice[m - 1] = h;
      walk(m - 1);
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ColorGrid& a, const ColorGrid& b) { return a.cells() < b.cells(); });
  return out;
}

}  // namespace mincorner
