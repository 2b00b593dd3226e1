#include "cyclord/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cyclord {

const Rat& FunctionSample::value(const Label& l) const {
  auto it = values.find(l);
  if (it == values.end()) throw InputError("sample has no value for " + l);
  return it->second;
}

FunctionSample FunctionSample::on_order(const FiniteCyclicOrder& x,
                                        std::unordered_map<Label, Rat> values) {
  FunctionSample f{true, x.arrangement(), std::move(values)};
  for (const auto& l : f.order) f.value(l);
  return f;
}

FunctionSample FunctionSample::on_cut(const LinearCut& cut,
                                      std::unordered_map<Label, Rat> values) {
  FunctionSample f{false, cut.order, std::move(values)};
  for (const auto& l : f.order) f.value(l);
  return f;
}

Rat variation(const FunctionSample& f) {
  if (f.order.size() < 2) return Rat(0);
  Rat sum = 0;
  for (std::size_t i = 0; i + 1 < f.order.size(); ++i) {
    Rat d = f.value(f.order[i + 1]) - f.value(f.order[i]);
    sum += d < 0 ? -d : d;
  }
  if (f.circular) {
    Rat d = f.value(f.order.front()) - f.value(f.order.back());
    sum += d < 0 ? -d : d;
  }
  return sum;
}

Rat value_diameter(const FunctionSample& f) {
  if (f.order.empty()) return Rat(0);
  Rat lo = f.value(f.order[0]), hi = lo;
  for (const auto& l : f.order) {
    const Rat& v = f.value(l);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

CutVariationReport variation_cut_inequality(const FunctionSample& f0,
                                            const Label& c) {
  if (!f0.circular) throw InputError("f0 must live on a circular sample");
  FiniteCyclicOrder x(f0.order);
  LinearCut cut = cut_at(x, c);
  std::unordered_map<Label, Rat> lifted;
  lifted.emplace(cut.order.front(), f0.value(c));
  lifted.emplace(cut.order.back(), f0.value(c));
  for (std::size_t i = 1; i + 1 < cut.order.size(); ++i)
    lifted.emplace(cut.order[i], f0.value(cut.order[i]));
  FunctionSample f = FunctionSample::on_cut(cut, std::move(lifted));
  CutVariationReport report;
  report.cut_variation = variation(f);
  report.circular_variation = variation(f0);
  report.diam = value_diameter(f0);
  report.sandwich_ok = report.cut_variation <= report.circular_variation &&
                       report.circular_variation <=
                           report.cut_variation + report.diam;
  return report;
}

CopVariationReport cop_variation_preservation(const FunctionSample& f,
                                              const PointMap& s) {
  VerdictReport v = is_cop(s);
  if (!v.cop) throw InputError("map is not COP (" + v.reason + ")");
  if (!f.circular) throw InputError("expected a circular sample");
  if (s.codomain.arrangement() != f.order)
    throw InputError("map codomain must match the sample domain");
  std::unordered_map<Label, Rat> composed_values;
  for (const auto& l : s.domain.arrangement())
    composed_values.emplace(l, f.value(s.apply(l)));
  FunctionSample composed =
      FunctionSample::on_order(s.domain, std::move(composed_values));
  CopVariationReport report;
  report.composed = variation(composed);
  report.original = variation(f);
  report.ok = report.composed <= report.original;
  return report;
}

SeparatingFunction separating_function(const FiniteCyclicOrder& x,
                                       const Label& a, const Label& b) {
  if (x.size() < 3) throw InputError("separating function needs |X| >= 3");
  if (a == b) throw InputError("points to separate must differ");
  x.position(a);
  x.position(b);
  // cut so that a precedes b whenever some third point allows it
  std::vector<Label> behind = x.interval(b, a);
  Label c = !behind.empty() ? behind.front() : x.interval(a, b).front();
  LinearCut cut = cut_at(x, c);
  std::size_t pa = 0, pb = 0;
  for (std::size_t i = 0; i < cut.order.size(); ++i) {
    if (cut.order[i] == a) pa = i;
    if (cut.order[i] == b) pb = i;
  }
  std::size_t last = cut.order.size() - 1;
  std::unordered_map<Label, Rat> vals;
  auto ramp = [](std::size_t i, std::size_t from, std::size_t to) {
    return Rat((long)(i - from), (long)(to - from));  // 0 at from, 1 at to
  };
  if (pa < pb) {
    for (std::size_t i = 0; i <= pa; ++i) vals[cut.order[i]] = 0;
    for (std::size_t i = pa + 1; i <= pb; ++i)
      vals[cut.order[i]] = ramp(i, pa, pb);
    for (std::size_t i = pb + 1; i <= last; ++i)
      vals[cut.order[i]] = 1 - ramp(i, pb, last);
  } else {
    // b comes first: ramp up from c-, down to a, zero afterwards
    for (std::size_t i = 0; i < pb; ++i) vals[cut.order[i]] = ramp(i, 0, pb);
    vals[cut.order[pb]] = 1;
    for (std::size_t i = pb + 1; i < pa; ++i)
      vals[cut.order[i]] = 1 - ramp(i, pb, pa);
    for (std::size_t i = pa; i <= last; ++i) vals[cut.order[i]] = 0;
  }
  SeparatingFunction out{c, FunctionSample::on_cut(cut, vals), {}};
  std::unordered_map<Label, Rat> base_vals;
  base_vals.emplace(c, vals.at(cut.order.front()));
  for (std::size_t i = 1; i < last; ++i)
    base_vals.emplace(cut.order[i], vals.at(cut.order[i]));
  out.on_base = FunctionSample::on_order(x, std::move(base_vals));
  return out;
}

namespace {

using Mask = std::vector<std::uint64_t>;

Mask make_mask(std::size_t bits) { return Mask((bits + 63) / 64, 0); }
void set_bit(Mask& m, std::size_t i) { m[i / 64] |= (std::uint64_t)1 << (i % 64); }
bool get_bit(const Mask& m, std::size_t i) {
  return (m[i / 64] >> (i % 64)) & 1;
}
bool mask_any(const Mask& m) {
  for (auto w : m)
    if (w) return true;
  return false;
}
int first_bit(const Mask& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) return (int)(i * 64 + __builtin_ctzll(m[i]));
  return -1;
}

}  // namespace

IndependenceResult independence_max(
    const std::vector<std::vector<std::uint8_t>>& family, int cap,
    long long budget) {
  if (family.empty() || cap < 1) return {};
  std::size_t npoints = family[0].size();
  for (const auto& f : family)
    if (f.size() != npoints)
      throw InputError("family members must share the sample");
  if (npoints == 0) return {};
  int fcount = (int)family.size();
  int m_top = std::min<int>(cap, fcount);

  // refuse upfront if the cap level alone would blow the budget
  long double subsets = 1;
  for (int i = 0; i < m_top; ++i)
    subsets = subsets * (fcount - i) / (i + 1);
  long double ops =
      subsets * (long double)(1ll << m_top) * ((npoints + 63) / 64);
  if (ops > (long double)budget)
    throw BudgetError("independence search over cap " + std::to_string(cap) +
                      " needs about " + std::to_string((long long)ops) +
                      " ops, budget is " + std::to_string(budget));

  std::vector<Mask> pos(fcount, make_mask(npoints)), neg(fcount, make_mask(npoints));
  for (int f = 0; f < fcount; ++f)
    for (std::size_t i = 0; i < npoints; ++i)
      set_bit(family[f][i] ? pos[f] : neg[f], i);

  for (int m = m_top; m >= 1; --m) {
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      // all 2^m patterns must be realized by some sample point
      std::vector<int> witnesses;
      bool all = true;
      for (unsigned pat = 0; pat < (1u << m) && all; ++pat) {
        Mask cell = make_mask(npoints);
        for (auto& w : cell) w = ~(std::uint64_t)0;
        for (int j = 0; j < m; ++j) {
          const Mask& side = (pat >> j) & 1 ? pos[idx[j]] : neg[idx[j]];
          for (std::size_t w = 0; w < cell.size(); ++w) cell[w] &= side[w];
        }
        // clear padding bits
        if (npoints % 64)
          cell.back() &= (~(std::uint64_t)0) >> (64 - npoints % 64);
        int point = first_bit(cell);
        if (point < 0) all = false;
        else witnesses.push_back(point);
      }
      if (all) return {m, idx, witnesses};
      // next combination
      int j = m - 1;
      while (j >= 0 && idx[j] == fcount - m + j) --j;
      if (j < 0) break;
      ++idx[j];
      for (int t = j + 1; t < m; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return {};
}

std::vector<std::uint8_t> arc_indicator(const RotationContext& ctx,
                                        const CirclePoint& start,
                                        const CirclePoint& end,
                                        const std::vector<CirclePoint>& sample) {
  if (ctx.compare(start, end).equal)
    throw InputError("arc endpoints must differ");
  Real vs = ctx.value(start);
  Real len = (ctx.value(end) - vs).fractional();
  std::vector<std::uint8_t> out;
  out.reserve(sample.size());
  for (const auto& p : sample) {
    Real off = (ctx.value(p) - vs).fractional();
    // open arc (start, end): strictly between
    bool inside = off.sign() > 0 && (len - off).sign() > 0;
    out.push_back(inside ? 1 : 0);
  }
  return out;
}

std::pair<std::vector<std::uint8_t>, std::vector<std::size_t>>
level_set_indicator(const std::vector<int>& symbols, int lo, int hi) {
  std::vector<std::uint8_t> bits;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] == hi) {
      bits.push_back(1);
      positions.push_back(i);
    } else if (symbols[i] == lo) {
      bits.push_back(0);
      positions.push_back(i);
    }
  }
  return {bits, positions};
}

ComplexityReport factor_complexity(const RotationContext& ctx,
                                   const CodingSpec& spec, int n, long window) {
  if (ctx.k() != 1) throw InputError("factor_complexity expects k = 1");
  if (n < 1 || window < 1) throw InputError("need n >= 1 and window >= 1");
  long total = 2 * window + n;
  if (Int(total) > ctx.limits().max_box_volume)
    throw BudgetError("window exceeds box volume limit");
  std::vector<char> symbols;
  symbols.reserve(total);
  for (long p = 0; p < total; ++p)
    symbols.push_back((char)('0' + symbol_at(ctx, spec, GroupElement{{Int(p)}})));
  std::string text(symbols.begin(), symbols.end());
  auto count = [&](long w) {
    std::unordered_set<std::string> seen;
    for (long p = 0; p < w; ++p) seen.insert(text.substr(p, n));
    return (long long)seen.size();
  };
  ComplexityReport report;
  report.count = count(window);
  report.doubled_count = count(2 * window);
  report.stable = report.count == report.doubled_count;
  return report;
}

ComplexityReport factor_complexity_box(const RotationContext& ctx,
                                       const CodingSpec& spec,
                                       const std::vector<long>& shape,
                                       long extent) {
  int k = ctx.k();
  if ((int)shape.size() != k) throw InputError("shape dimension mismatch");
  for (long s : shape)
    if (s < 1) throw InputError("shape entries must be positive");
  if (extent < 1) throw InputError("extent must be positive");

  // symbols on the grid [0, 2*extent + shape_i), flattened row-major
  std::vector<long> grid(k);
  Int volume = 1;
  for (int i = 0; i < k; ++i) {
    grid[i] = 2 * extent + shape[i];
    volume *= grid[i];
  }
  if (volume > ctx.limits().max_box_volume)
    throw BudgetError("grid exceeds box volume limit");
  Box grid_box;
  for (int i = 0; i < k; ++i) grid_box.ranges.push_back({Int(0), Int(grid[i] - 1)});
  SymbolicPattern field = coding_pattern(ctx, spec, grid_box);

  std::vector<long> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * grid[i + 1];
  auto pattern_key = [&](const std::vector<long>& at) {
    std::string key;
    std::vector<long> off(k, 0);
    while (true) {
      long idx = 0;
      for (int i = 0; i < k; ++i) idx += (at[i] + off[i]) * stride[i];
      key.push_back((char)('0' + field.symbols[idx]));
      int i = k - 1;
      for (; i >= 0; --i) {
        if (off[i] + 1 < shape[i]) {
          ++off[i];
          for (int j = i + 1; j < k; ++j) off[j] = 0;
          break;
        }
      }
      if (i < 0) break;
    }
    return key;
  };
  auto count = [&](long w) {
    std::unordered_set<std::string> seen;
    std::vector<long> at(k, 0);
    while (true) {
      seen.insert(pattern_key(at));
      int i = k - 1;
      for (; i >= 0; --i) {
        if (at[i] + 1 < w) {
          ++at[i];
          for (int j = i + 1; j < k; ++j) at[j] = 0;
          break;
        }
      }
      if (i < 0) break;
    }
    return (long long)seen.size();
  };
  ComplexityReport report;
  report.count = count(extent);
  report.doubled_count = count(2 * extent);
  report.stable = report.count == report.doubled_count;
  return report;
}

// ---------------------------------------------------------------------------
// Arc covers: atoms, cells and exact minimal subcovers.

namespace {

// Endpoints sorted around the circle; atom 2i is the endpoint point e_i and
// atom 2i+1 the open interval (e_i, e_{i+1 mod m}).
struct Atlas {
  std::vector<CirclePoint> pts;
  std::vector<Real> vals;

  std::size_t atom_count() const { return 2 * pts.size(); }
  int find(const RotationContext& ctx, const CirclePoint& p) const {
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (ctx.compare(pts[i], p).equal) return (int)i;
    return -1;
  }
};

Atlas build_atlas(const RotationContext& ctx,
                  const std::vector<CirclePoint>& endpoints) {
  Atlas atlas;
  for (const auto& p : endpoints) {
    if (atlas.find(ctx, p) < 0) atlas.pts.push_back(p);
  }
  std::sort(atlas.pts.begin(), atlas.pts.end(),
            [&](const CirclePoint& a, const CirclePoint& b) {
              return ctx.order_compare(a, b) < 0;
            });
  for (const auto& p : atlas.pts) atlas.vals.push_back(ctx.value(p));
  return atlas;
}

// contiguous cyclic atom range of the open arc (pts[i], pts[j])
std::pair<std::size_t, std::size_t> arc_range(const Atlas& atlas, int i, int j) {
  std::size_t m2 = atlas.atom_count();
  std::size_t first = (2 * i + 1) % m2;
  std::size_t last = (2 * j + m2 - 1) % m2;
  std::size_t count = (last + m2 - first) % m2 + 1;
  return {first, count};
}

Mask range_mask(std::size_t total, std::size_t first, std::size_t count) {
  Mask m = make_mask(total);
  for (std::size_t t = 0; t < count; ++t) set_bit(m, (first + t) % total);
  return m;
}

bool mask_full(const Mask& m, std::size_t total) {
  for (std::size_t i = 0; i < total; ++i)
    if (!get_bit(m, i)) return false;
  return true;
}

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// number of cyclic blocks of set bits; 1 means contiguous
int cyclic_blocks(const Mask& m, std::size_t total) {
  int blocks = 0;
  for (std::size_t i = 0; i < total; ++i) {
    bool cur = get_bit(m, i);
    bool prev = get_bit(m, (i + total - 1) % total);
    if (cur && !prev) ++blocks;
  }
  return blocks;
}

std::pair<std::size_t, std::size_t> as_range(const Mask& m, std::size_t total) {
  // precondition: exactly one cyclic block
  std::size_t first = 0;
  for (std::size_t i = 0; i < total; ++i) {
    if (get_bit(m, i) && !get_bit(m, (i + total - 1) % total)) {
      first = i;
      break;
    }
  }
  std::size_t count = 0;
  while (count < total && get_bit(m, (first + count) % total)) ++count;
  return {first, count};
}

// exact minimal circular cover by contiguous ranges (classical greedy over
// anchors)
int min_cover_ranges(const std::vector<std::pair<std::size_t, std::size_t>>& rs,
                     std::size_t total) {
  int best = -1;
  for (std::size_t anchor = 0; anchor < rs.size(); ++anchor) {
    std::size_t start = rs[anchor].first;
    std::size_t covered = rs[anchor].second;
    int used = 1;
    bool dead = false;
    while (covered < total) {
      std::size_t next = (start + covered) % total;
      std::size_t best_ext = 0;
      for (const auto& r : rs) {
        std::size_t rel = (next + total - r.first) % total;
        if (rel < r.second) {  // r contains atom `next`
          std::size_t ext = r.second - rel;
          if (ext > best_ext) best_ext = ext;
        }
      }
      if (best_ext == 0) {
        dead = true;  // cannot extend; this anchor fails
        break;
      }
      covered += best_ext;
      ++used;
      if (used > (int)rs.size()) {
        dead = true;
        break;
      }
    }
    if (!dead && (best < 0 || used < best)) best = used;
  }
  if (best < 0) throw InputError("sets do not cover the circle");
  return best;
}

long long count_uncovered(const Mask& covered, std::size_t total) {
  long long c = 0;
  for (std::size_t i = 0; i < total; ++i)
    if (!get_bit(covered, i)) ++c;
  return c;
}

void branch_and_bound(const std::vector<Mask>& sets, const Mask& covered,
                      std::size_t total, int depth, int& best) {
  if (depth >= best) return;
  int pick = -1;
  for (std::size_t i = 0; i < total; ++i)
    if (!get_bit(covered, i)) {
      pick = (int)i;
      break;
    }
  if (pick < 0) {
    best = depth;
    return;
  }
  // branch over the sets containing the first uncovered atom, biggest gain
  // first
  std::vector<std::pair<long long, int>> cands;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (!get_bit(sets[s], pick)) continue;
    Mask merged = covered;
    for (std::size_t w = 0; w < merged.size(); ++w) merged[w] |= sets[s][w];
    cands.push_back({-count_uncovered(merged, total), (int)s});
  }
  std::sort(cands.begin(), cands.end());
  for (const auto& [neg_gain, s] : cands) {
    (void)neg_gain;
    Mask merged = covered;
    for (std::size_t w = 0; w < merged.size(); ++w) merged[w] |= sets[s][w];
    branch_and_bound(sets, merged, total, depth + 1, best);
  }
}

int min_cover_masks(const std::vector<Mask>& cells, std::size_t total) {
  bool all_contiguous = true;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (const auto& c : cells) {
    if (mask_full(c, total)) return 1;
    int blocks = cyclic_blocks(c, total);
    if (blocks != 1) {
      all_contiguous = false;
      break;
    }
    ranges.push_back(as_range(c, total));
  }
  if (all_contiguous) return min_cover_ranges(ranges, total);
  // general case: greedy upper bound, then exact branch and bound
  Mask covered = make_mask(total);
  int greedy = 0;
  while (count_uncovered(covered, total) > 0) {
    long long best_gain = 0;
    int best_set = -1;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      Mask merged = covered;
      for (std::size_t w = 0; w < merged.size(); ++w) merged[w] |= cells[s][w];
      long long gain =
          count_uncovered(covered, total) - count_uncovered(merged, total);
      if (gain > best_gain) {
        best_gain = gain;
        best_set = (int)s;
      }
    }
    if (best_set < 0) throw InputError("sets do not cover the circle");
    for (std::size_t w = 0; w < covered.size(); ++w)
      covered[w] |= cells[best_set][w];
    ++greedy;
  }
  int best = greedy;
  branch_and_bound(cells, make_mask(total), total, 0, best);
  return best;
}

std::vector<Mask> prune_dominated(std::vector<Mask> cells) {
  std::vector<Mask> out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cells.size() && !dominated; ++j) {
      if (i == j) continue;
      if (subset_of(cells[i], cells[j]) &&
          (cells[i] != cells[j] || j < i))
        dominated = true;
    }
    if (!dominated) out.push_back(cells[i]);
  }
  return out;
}

std::vector<Mask> cover_masks_at_shift(const RotationContext& ctx,
                                       const ArcCover& cover, const Int& shift,
                                       const Atlas& atlas) {
  std::vector<Mask> out;
  GroupElement g{{-shift}};
  for (const auto& arc : cover.arcs) {
    CirclePoint s = ctx.act(g, arc.start), e = ctx.act(g, arc.end);
    int i = atlas.find(ctx, s), j = atlas.find(ctx, e);
    if (i < 0 || j < 0) throw std::logic_error("endpoint missing from atlas");
    auto [first, count] = arc_range(atlas, i, j);
    out.push_back(range_mask(atlas.atom_count(), first, count));
  }
  return out;
}

void validate_cover(const RotationContext& ctx, const ArcCover& cover) {
  if (cover.arcs.empty()) throw InputError("cover must contain arcs");
  for (const auto& arc : cover.arcs)
    if (ctx.compare(arc.start, arc.end).equal)
      throw InputError("arc endpoints must differ (arcs are proper)");
}

}  // namespace

int min_subcover_count(const RotationContext& ctx, const ArcCover& cover) {
  validate_cover(ctx, cover);
  std::vector<CirclePoint> endpoints;
  for (const auto& arc : cover.arcs) {
    endpoints.push_back(arc.start);
    endpoints.push_back(arc.end);
  }
  Atlas atlas = build_atlas(ctx, endpoints);
  std::vector<Mask> masks = cover_masks_at_shift(ctx, cover, Int(0), atlas);
  Mask all = make_mask(atlas.atom_count());
  for (const auto& m : masks)
    for (std::size_t w = 0; w < all.size(); ++w) all[w] |= m[w];
  if (!mask_full(all, atlas.atom_count()))
    throw InputError("arcs do not cover the circle");
  return min_cover_masks(masks, atlas.atom_count());
}

CoverGrowthReport join_cover_growth(const RotationContext& ctx,
                                    const ArcCover& cover,
                                    const std::vector<Int>& shifts, int n_max) {
  if (ctx.k() != 1) throw InputError("join_cover_growth expects k = 1");
  validate_cover(ctx, cover);
  if (n_max < 1 || (int)shifts.size() < n_max)
    throw InputError("need n_max >= 1 shifts");
  min_subcover_count(ctx, cover);  // validates genuine coverage

  std::vector<CirclePoint> endpoints;
  for (int i = 0; i < n_max; ++i) {
    GroupElement g{{-shifts[i]}};
    for (const auto& arc : cover.arcs) {
      endpoints.push_back(ctx.act(g, arc.start));
      endpoints.push_back(ctx.act(g, arc.end));
    }
  }
  Atlas atlas = build_atlas(ctx, endpoints);
  std::size_t total = atlas.atom_count();

  CoverGrowthReport report;
  report.cover_size = (int)cover.arcs.size();
  std::vector<Mask> cells;
  for (int n = 0; n < n_max; ++n) {
    std::vector<Mask> level = cover_masks_at_shift(ctx, cover, shifts[n], atlas);
    if (n == 0) {
      cells = level;
    } else {
      std::vector<Mask> joined;
      std::set<Mask> seen;
      for (const auto& c : cells)
        for (const auto& a : level) {
          Mask inter = c;
          for (std::size_t w = 0; w < inter.size(); ++w) inter[w] &= a[w];
          if (!mask_any(inter)) continue;  // empty cell, discarded
          if (seen.insert(inter).second) joined.push_back(inter);
        }
      cells = prune_dominated(std::move(joined));
    }
    report.counts.push_back(min_cover_masks(cells, total));
  }

  int k2 = 2 * report.cover_size;
  report.step_bound_ok = true;
  for (std::size_t n = 0; n + 1 < report.counts.size(); ++n)
    if (report.counts[n + 1] > report.counts[n] + k2)
      report.step_bound_ok = false;
  report.linear_bound_ok = true;
  for (std::size_t n = 0; n < report.counts.size(); ++n)
    if (report.counts[n] > k2 * (int)(n + 1)) report.linear_bound_ok = false;
  for (std::size_t n = 0; n < report.counts.size(); ++n)
    report.entropy.push_back(std::log((double)report.counts[n]) / (double)(n + 1));
  return report;
}

// ---------------------------------------------------------------------------
// Language equality between the direct coding and the split-system reading.

namespace {

// decide whether z lies in the orbit A = G E of the cut set, searching group
// elements in [-search, search]^k
bool in_cut_orbit(const RotationContext& ctx, const Coloring& coloring,
                  const CirclePoint& z, long search) {
  Box box;
  for (int i = 0; i < ctx.k(); ++i)
    box.ranges.push_back({Int(-search), Int(search)});
  bool found = false;
  for_each_box_point(box, [&](const GroupElement& s) {
    if (found) return;
    for (const auto& c : coloring.partition.cuts)
      if (ctx.compare(ctx.act(s, c), z).equal) {
        found = true;
        return;
      }
  });
  return found;
}

}  // namespace

LanguageReport language_equality(const RotationContext& ctx,
                                 const CodingSpec& spec, int window,
                                 long sample_extent, long membership_search) {
  if (window < 1 || sample_extent < 1)
    throw InputError("window and sample extent must be positive");
  int k = ctx.k();
  Int positions = 1;
  for (int i = 0; i < k; ++i) positions *= Int(2 * sample_extent + window);
  if (positions > ctx.limits().max_box_volume)
    throw BudgetError("language sample exceeds box volume limit");

  // the split set is the orbit of the cut set; the orbit of z+ stays on the
  // plus side, so the reading point is z+ when z lies in A and plain z
  // otherwise
  PointSide side = in_cut_orbit(ctx, spec.coloring, spec.z, membership_search)
                       ? PointSide::Plus
                       : PointSide::Plain;
  SplitColoring fplus =
      split_coloring(ctx, spec.coloring, spec.coloring.partition.cuts);

  Box base_box;
  for (int i = 0; i < k; ++i)
    base_box.ranges.push_back({Int(-sample_extent), Int(sample_extent)});

  std::set<std::string> coding_lang, split_lang;
  for_each_box_point(base_box, [&](const GroupElement& at) {
    std::string wa, wb;
    Box rel;
    for (int i = 0; i < k; ++i) rel.ranges.push_back({Int(0), Int(window - 1)});
    for_each_box_point(rel, [&](const GroupElement& off) {
      GroupElement s = at + off;
      wa.push_back((char)('0' + symbol_at(ctx, spec, s)));
      wb.push_back((char)('0' + fplus(ctx.act(s, spec.z), side)));
    });
    coding_lang.insert(wa);
    split_lang.insert(wb);
  });

  LanguageReport report;
  report.window = window;
  report.coding_words = coding_lang.size();
  report.split_words = split_lang.size();
  report.equal = coding_lang == split_lang;
  return report;
}

}  // namespace cyclord
