#pragma once

#include <string>
#include <vector>

#include "cyclord/rotation.hpp"

namespace cyclord {

// Cut points c_0, ..., c_d listed in cyclic order; arc i is the half-open
// interval [c_i, c_{i+1}) with c_{d+1} = c_0.
struct CyclicPartition {
  std::vector<CirclePoint> cuts;

  int arc_count() const { return (int)cuts.size(); }
};

CyclicPartition make_partition(const RotationContext& ctx,
                               std::vector<CirclePoint> cuts);

struct Coloring {
  CyclicPartition partition;
  std::vector<int> colors;  // arc index -> symbol

  int arc_count() const { return partition.arc_count(); }
  int alphabet_size() const;
  bool proper() const;  // onto {0, ..., max color}

  static Coloring standard(CyclicPartition p);  // colors(i) = i
};

// Index of the arc containing t (closed-left convention: t equal to a cut
// belongs to the arc starting there).
int arc_index(const RotationContext& ctx, const CyclicPartition& p,
              const CirclePoint& t);

int color(const RotationContext& ctx, const Coloring& c, const CirclePoint& t);

// s_n = 0 iff {z + n*alpha} lies in [0, t), else 1; n in [n0, n1].
// Implemented directly on the field values, independently of Coloring.
std::vector<int> sturmian_bisequence(const RotationContext& ctx,
                                     const CirclePoint& t,
                                     const CirclePoint& z, long n0, long n1);

struct CodingSpec {
  Coloring coloring;
  CirclePoint z;
};

// Word (k=1) or box pattern (k>=2) over the alphabet, row-major with the
// first axis slowest.
struct SymbolicPattern {
  Box box;
  std::vector<int> symbols;

  Int volume() const { return box.volume(); }
  std::string key() const;  // canonical serialization of the symbol grid
};

SymbolicPattern coding_pattern(const RotationContext& ctx,
                               const CodingSpec& spec, const Box& box);

int symbol_at(const RotationContext& ctx, const CodingSpec& spec,
              const GroupElement& s);

enum class PointSide { Plain, Minus, Plus };

// The induced coloring f+ on split points: constant on each [c_{i-1}+, c_i+),
// so a plus copy at a cut takes that arc's color, a minus copy at a cut takes
// the preceding arc's color, and points away from the cuts keep the color of
// their enclosing arc.
class SplitColoring {
 public:
  SplitColoring(const RotationContext& ctx, Coloring coloring,
                std::vector<CirclePoint> split_set);

  int operator()(const CirclePoint& t, PointSide side) const;
  const Coloring& base() const { return coloring_; }

 private:
  const RotationContext& ctx_;
  Coloring coloring_;
  std::vector<CirclePoint> split_set_;
  int cut_index(const CirclePoint& t) const;  // -1 when t is not a cut
};

SplitColoring split_coloring(const RotationContext& ctx, const Coloring& c,
                             const std::vector<CirclePoint>& split_set);

}  // namespace cyclord
