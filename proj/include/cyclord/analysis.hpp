#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclord/coding.hpp"
#include "cyclord/corder.hpp"
#include "cyclord/rotation.hpp"

namespace cyclord {

// Real-valued function on a finite circularly or linearly ordered sample.
struct FunctionSample {
  bool circular = true;
  std::vector<Label> order;  // arrangement (circular) or chain (linear)
  std::unordered_map<Label, Rat> values;

  const Rat& value(const Label& l) const;
  static FunctionSample on_order(const FiniteCyclicOrder& x,
                                 std::unordered_map<Label, Rat> values);
  static FunctionSample on_cut(const LinearCut& cut,
                               std::unordered_map<Label, Rat> values);
};

// Total variation. On a finite sample the sup over chains (linear case) or
// cycles (circular case, wraparound term included) is reached by the full
// arrangement: by the triangle inequality, inserting a point between two
// chain neighbours never decreases the sum, so the consecutive sum is
// already maximal.
Rat variation(const FunctionSample& f);

Rat value_diameter(const FunctionSample& f);  // max - min of the values

struct CutVariationReport {
  Rat cut_variation;       // of f = f0 o q on X(c)
  Rat circular_variation;  // of f0 on X
  Rat diam;
  bool sandwich_ok = false;
};

CutVariationReport variation_cut_inequality(const FunctionSample& f0,
                                            const Label& c);

struct CopVariationReport {
  Rat composed;
  Rat original;
  bool ok = false;  // composed <= original
};

CopVariationReport cop_variation_preservation(const FunctionSample& f,
                                              const PointMap& s);

struct SeparatingFunction {
  Label cut_point;
  FunctionSample on_cut;   // three ramp pieces, variation <= 2
  FunctionSample on_base;  // descended f0, variation <= 3
};

// Builds f0 with f0(a) = 0, f0(b) = 1 and variation at most 3: zero up to
// one of the marked points on the cut, a linear ramp between them, a ramp
// back to zero after (mirrored when the cut forces b before a).
SeparatingFunction separating_function(const FiniteCyclicOrder& x,
                                       const Label& a, const Label& b);

struct IndependenceResult {
  int size = 0;
  std::vector<int> subfamily;        // indices into the family
  std::vector<int> pattern_points;   // realizing sample index per pattern
};

// Largest m <= cap such that some m functions realize all 2^m sign patterns
// somewhere on the sample. Exhaustive over subfamilies and patterns.
IndependenceResult independence_max(
    const std::vector<std::vector<std::uint8_t>>& family, int cap,
    long long budget = 400000000);

// 0/1 family over sample points from arc indicators.
std::vector<std::uint8_t> arc_indicator(const RotationContext& ctx,
                                        const CirclePoint& start,
                                        const CirclePoint& end,
                                        const std::vector<CirclePoint>& sample);

// Level-set indicators of a symbol sequence: 1 where the symbol equals hi,
// 0 where it equals lo, points with other symbols dropped from both. Returns
// the mask restricted to positions carrying lo or hi, plus those positions.
std::pair<std::vector<std::uint8_t>, std::vector<std::size_t>>
level_set_indicator(const std::vector<int>& symbols, int lo, int hi);

struct ComplexityReport {
  long long count = 0;
  long long doubled_count = 0;
  bool stable = false;  // the doubled window did not add factors
};

// Number of distinct length-n factors seen in a window of the coding (k=1).
ComplexityReport factor_complexity(const RotationContext& ctx,
                                   const CodingSpec& spec, int n, long window);

// Box-shaped pattern counting for k >= 2.
ComplexityReport factor_complexity_box(const RotationContext& ctx,
                                       const CodingSpec& spec,
                                       const std::vector<long>& shape,
                                       long extent);

// Open circular arc (start, end), counterclockwise.
struct Arc {
  CirclePoint start, end;
};

struct ArcCover {
  std::vector<Arc> arcs;
};

// Minimal number of arcs still covering the circle; exact.
int min_subcover_count(const RotationContext& ctx, const ArcCover& cover);

struct CoverGrowthReport {
  int cover_size = 0;             // k = |U|
  std::vector<int> counts;        // N_1 .. N_nmax
  bool step_bound_ok = false;     // N_{n+1} <= N_n + 2k
  bool linear_bound_ok = false;   // N_n <= 2kn
  std::vector<double> entropy;    // (1/n) log N_n
};

// Join growth along the shift sequence: N_n is the minimal subcover count of
// the join of the first n rotated covers, computed exactly on the cell
// decomposition (cells are arc unions).
CoverGrowthReport join_cover_growth(const RotationContext& ctx,
                                    const ArcCover& cover,
                                    const std::vector<Int>& shifts, int n_max);

struct LanguageReport {
  bool equal = false;
  int window = 0;
  std::size_t coding_words = 0;
  std::size_t split_words = 0;
};

// Compares the n-window language of the coding with the f+ coloring read
// along the split-system orbit (split set = orbit of the cut set). Exact set
// equality over the sampled range.
LanguageReport language_equality(const RotationContext& ctx,
                                 const CodingSpec& spec, int window,
                                 long sample_extent,
                                 long membership_search = 4);

}  // namespace cyclord
