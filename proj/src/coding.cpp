#include "cyclord/coding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cyclord {

CyclicPartition make_partition(const RotationContext& ctx,
                               std::vector<CirclePoint> cuts) {
  if (cuts.empty()) throw InputError("partition needs at least one cut");
  // distinct, and listed in cyclic order starting anywhere: offsets from the
  // first cut must be strictly increasing
  Real v0 = ctx.value(cuts[0]);
  Real prev{0};
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (ctx.compare(cuts[i], cuts[0]).equal)
      throw InputError("partition cuts must be distinct");
    Real off = (ctx.value(cuts[i]) - v0).fractional();
    if (i > 1 && (off - prev).sign() <= 0)
      throw InputError("partition cuts must be listed in cyclic order");
    prev = off;
  }
  return CyclicPartition{std::move(cuts)};
}

int Coloring::alphabet_size() const {
  int m = 0;
  for (int c : colors) m = std::max(m, c + 1);
  return m;
}

bool Coloring::proper() const {
  std::set<int> seen(colors.begin(), colors.end());
  for (int s = 0; s < alphabet_size(); ++s)
    if (!seen.count(s)) return false;
  return (int)seen.size() == arc_count();
}

Coloring Coloring::standard(CyclicPartition p) {
  Coloring c{std::move(p), {}};
  for (int i = 0; i < c.arc_count(); ++i) c.colors.push_back(i);
  return c;
}

int arc_index(const RotationContext& ctx, const CyclicPartition& p,
              const CirclePoint& t) {
  int m = p.arc_count();
  // closed-left: t equal to a cut belongs to the arc starting there; going
  // through compare() also enforces the certification margin
  for (int i = 0; i < m; ++i)
    if (ctx.compare(t, p.cuts[i]).equal) return i;
  if (m == 1) return 0;
  // t is now certified away from every cut; locate by offsets from c_0
  Real v0 = ctx.value(p.cuts[0]);
  Real off = (ctx.value(t) - v0).fractional();
  int best = 0;
  for (int i = 1; i < m; ++i) {
    Real ci = (ctx.value(p.cuts[i]) - v0).fractional();
    if ((off - ci).sign() > 0) best = i;
  }
  return best;
}

int color(const RotationContext& ctx, const Coloring& c, const CirclePoint& t) {
  return c.colors.at(arc_index(ctx, c.partition, t));
}

std::vector<int> sturmian_bisequence(const RotationContext& ctx,
                                     const CirclePoint& t,
                                     const CirclePoint& z, long n0, long n1) {
  if (ctx.k() != 1) throw InputError("sturmian_bisequence needs k = 1");
  if (n0 > n1) throw InputError("empty range");
  Real threshold = ctx.value(t);
  if (threshold.is_zero()) throw InputError("cut t must lie in (0,1)");
  CirclePoint zero = ctx.rational_point(0);
  std::vector<int> out;
  out.reserve(n1 - n0 + 1);
  for (long n = n0; n <= n1; ++n) {
    CirclePoint pn = ctx.act(GroupElement{{Int(n)}}, z);
    if (ctx.compare(pn, zero).equal) {
      out.push_back(0);  // 0 is the left end of [0,t)
      continue;
    }
    if (ctx.compare(pn, t).equal) {
      out.push_back(1);  // closed-left arc [t,1)
      continue;
    }
    // certified away from both cut points, so the sign is decisive
    out.push_back((ctx.value(pn) - threshold).sign() < 0 ? 0 : 1);
  }
  return out;
}

std::string SymbolicPattern::key() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) os << ',';
    os << symbols[i];
  }
  return os.str();
}

SymbolicPattern coding_pattern(const RotationContext& ctx,
                               const CodingSpec& spec, const Box& box) {
  if (box.volume() > ctx.limits().max_box_volume)
    throw BudgetError("box volume exceeds limit");
  SymbolicPattern pat{box, {}};
  for_each_box_point(box, [&](const GroupElement& s) {
    pat.symbols.push_back(color(ctx, spec.coloring, ctx.act(s, spec.z)));
  });
  return pat;
}

int symbol_at(const RotationContext& ctx, const CodingSpec& spec,
              const GroupElement& s) {
  return color(ctx, spec.coloring, ctx.act(s, spec.z));
}

SplitColoring::SplitColoring(const RotationContext& ctx, Coloring coloring,
                             std::vector<CirclePoint> split_set)
    : ctx_(ctx), coloring_(std::move(coloring)), split_set_(std::move(split_set)) {
  for (const auto& c : coloring_.partition.cuts) {
    bool found = false;
    for (const auto& a : split_set_)
      if (ctx_.compare(c, a).equal) { found = true; break; }
    if (!found)
      throw InputError("split set must contain every cut point");
  }
}

int SplitColoring::cut_index(const CirclePoint& t) const {
  for (int i = 0; i < coloring_.arc_count(); ++i)
    if (ctx_.compare(t, coloring_.partition.cuts[i]).equal) return i;
  return -1;
}

int SplitColoring::operator()(const CirclePoint& t, PointSide side) const {
  int ci = cut_index(t);
  if (ci < 0 || side == PointSide::Plain || side == PointSide::Plus) {
    if (ci >= 0) return coloring_.colors[ci];  // arc starting at the cut
    return color(ctx_, coloring_, t);
  }
  int m = coloring_.arc_count();
  return coloring_.colors[(ci - 1 + m) % m];  // minus copy: preceding arc
}

SplitColoring split_coloring(const RotationContext& ctx, const Coloring& c,
                             const std::vector<CirclePoint>& split_set) {
  return SplitColoring(ctx, c, split_set);
}

}  // namespace cyclord
