#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cyclord/exact.hpp"

namespace cyclord {

struct Angle {
  enum class Kind { Decimal, Golden, Sqrt2m1 };
  Kind kind = Kind::Decimal;
  Rat decimal_value{0};  // only for Kind::Decimal, already reduced mod 1

  bool irrational() const { return kind != Kind::Decimal; }
  Real value() const;
  std::string describe() const;

  static Angle decimal(const Rat& v);
  static Angle named(const std::string& name);  // "golden" | "sqrt2m1"
};

struct AngleSpec {
  std::vector<Angle> angles;
  int precision = 60;  // P: decimal inputs are taken at P digits

  int k() const { return (int)angles.size(); }
  bool any_irrational() const;
  Rat margin() const { return pow10(-(precision - 5)); }  // comparison delta

  static AngleSpec single(Angle a, int precision = 60);
};

struct GroupElement {
  std::vector<Int> e;

  static GroupElement zero(int k) { return {std::vector<Int>(k, 0)}; }
  GroupElement operator+(const GroupElement& o) const;
};

// Exact point of the circle: a rational base offset plus an integer
// combination of the generator angles. Symbolic identity is (base, coeffs)
// equality; the value lives in Q(sqrt2, sqrt5) and is evaluated on demand.
struct CirclePoint {
  Rat base{0};              // in [0,1)
  std::vector<Int> coeffs;  // length k

  bool operator==(const CirclePoint& o) const {
    return base == o.base && coeffs == o.coeffs;
  }
  bool operator!=(const CirclePoint& o) const { return !(*this == o); }
};

struct CompareOutcome {
  bool equal = false;
  Real gap;  // certified circular distance when distinct
};

struct Box {
  // inclusive integer ranges per dimension
  std::vector<std::pair<Int, Int>> ranges;

  int dim() const { return (int)ranges.size(); }
  Int volume() const;
  static Box segment(const Int& lo, const Int& hi) { return {{{lo, hi}}}; }
};

struct EngineLimits {
  Int max_box_volume = 1000000;
};

// Immutable evaluation context for one AngleSpec. All operations are pure.
class RotationContext {
 public:
  explicit RotationContext(AngleSpec spec, EngineLimits limits = {});

  const AngleSpec& spec() const { return spec_; }
  int k() const { return spec_.k(); }
  const EngineLimits& limits() const { return limits_; }

  CirclePoint point(const Rat& base, std::vector<Int> coeffs) const;
  CirclePoint rational_point(const Rat& base) const;

  // t |-> t + h(s): adds s to the coefficient vector.
  CirclePoint act(const GroupElement& s, const CirclePoint& p) const;

  // Exact value in [0,1).
  Real value(const CirclePoint& p) const;

  // Equal iff the exact values coincide (covers symbolic identity and forced
  // coincidence at rational specs). Distinct points carry a certified gap.
  // A purely rational gap below the margin raises PrecisionExhausted; gaps
  // with an irrational part are resolved exactly and never raise.
  CompareOutcome compare(const CirclePoint& p, const CirclePoint& q) const;

  // -1/0/+1 by representative in [0,1), under the compare contract.
  int order_compare(const CirclePoint& p, const CirclePoint& q) const;

  // Sign criterion (y-x)(z-y)(z-x) > 0 on representatives in [0,1).
  bool circular_betweenness(const CirclePoint& a, const CirclePoint& b,
                            const CirclePoint& c) const;

  std::vector<std::pair<GroupElement, CirclePoint>> orbit_sample(
      const CirclePoint& z, const Box& box) const;

 private:
  void check_dim(std::size_t got, const char* what) const;
  AngleSpec spec_;
  EngineLimits limits_;
  std::vector<Real> angle_values_;
};

// Enumerates the lattice points of a box in row-major order (first axis
// slowest), calling fn(GroupElement).
template <typename Fn>
void for_each_box_point(const Box& box, Fn&& fn) {
  GroupElement s;
  s.e.reserve(box.ranges.size());
  for (const auto& r : box.ranges) {
    if (r.first > r.second) return;  // empty box
    s.e.push_back(r.first);
  }
  while (true) {
    fn(const_cast<const GroupElement&>(s));
    int i = (int)s.e.size() - 1;
    for (; i >= 0; --i) {
      if (s.e[i] < box.ranges[i].second) {
        ++s.e[i];
        for (std::size_t j = i + 1; j < s.e.size(); ++j)
          s.e[j] = box.ranges[j].first;
        break;
      }
    }
    if (i < 0) break;
  }
}

}  // namespace cyclord
