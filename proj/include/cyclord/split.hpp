#pragma once

#include <unordered_map>
#include <vector>

#include "cyclord/coding.hpp"
#include "cyclord/corder.hpp"
#include "cyclord/rotation.hpp"

namespace cyclord {

// Split(X; A): every a in A doubled into a- immediately followed by a+,
// other points kept as they are, with the projection nu back onto X.
struct SplitOrder {
  FiniteCyclicOrder base;
  std::vector<Label> split_set;
  FiniteCyclicOrder order;
  std::unordered_map<Label, Label> nu;

  PointMap nu_map() const;
};

SplitOrder split(const FiniteCyclicOrder& base, const std::vector<Label>& a_set);

struct SplitIsomorphismReport {
  bool ok = false;
  std::unordered_map<Label, Label> iso;  // M label -> Split(base, A) label
  std::string failure;
};

// Uniqueness of the split order: any COP map gamma with fibers of size two
// exactly over A induces a canonical isomorphism onto Split(base, A).
SplitIsomorphismReport split_uniqueness_check(const FiniteCyclicOrder& m_order,
                                              const PointMap& gamma);

// Finite sample of Split(T, R_alpha; A): base sample is the orbit of z and of
// the generators of A over |n| <= window, split at the A points.
struct SplitActionSample {
  FiniteCyclicOrder base_order;  // sample circle order, labels q000, q001, ...
  SplitOrder split;
  std::unordered_map<Label, CirclePoint> points;  // base label -> point
  std::vector<Label> a_labels;
  long window = 0;

  const CirclePoint& point_of(const Label& base_label) const;
};

SplitActionSample split_action(const RotationContext& ctx,
                               const std::vector<CirclePoint>& a_generators,
                               const CirclePoint& z, long window);

// Translation by shift*alpha restricted to the sample points that stay
// inside it; a partial map, returned on the induced sub-order.
PointMap sample_translation(const RotationContext& ctx,
                            const SplitActionSample& sample, long shift = 1);

// Factor map X_{A2} -> X_{A1} for nested split sets over one base sample.
PointMap split_factor_map(const SplitActionSample& fine,
                          const SplitActionSample& coarse);

// n-point double circle: the lexicographic product of an n-point circle with
// (-,+). Markers model isolated orbit elements: marker s<j> is inserted right
// after j+, so [j+, s<j>, j-] holds and s<j> is the only point in that gap.
FiniteCyclicOrder double_circle_sample(int n, int markers = 0);

struct RotationNumberReport {
  double estimate = 0.0;
  long sample_size = 0;
  long ones = 0;
};

// Frequency of symbol 1 among the first N entries of a binary coding.
RotationNumberReport rotation_number_estimate(const std::vector<int>& symbols,
                                              long sample_size);

}  // namespace cyclord
