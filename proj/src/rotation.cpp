#include "cyclord/rotation.hpp"

#include <stdexcept>

namespace cyclord {

Real Angle::value() const {
  switch (kind) {
    case Kind::Decimal: return Real(decimal_value);
    case Kind::Golden: return Real::golden();
    case Kind::Sqrt2m1: return Real::sqrt2_minus_1();
  }
  throw std::logic_error("unknown angle kind");
}

std::string Angle::describe() const {
  switch (kind) {
    case Kind::Decimal: return rat_to_decimal(decimal_value, 12);
    case Kind::Golden: return "golden";
    case Kind::Sqrt2m1: return "sqrt2m1";
  }
  return "?";
}

Angle Angle::decimal(const Rat& v) {
  Angle a;
  a.kind = Kind::Decimal;
  a.decimal_value = v - Rat(rat_floor(v));
  return a;
}

Angle Angle::named(const std::string& name) {
  Angle a;
  if (name == "golden") a.kind = Kind::Golden;
  else if (name == "sqrt2m1") a.kind = Kind::Sqrt2m1;
  else throw InputError("unknown named angle: " + name);
  return a;
}

bool AngleSpec::any_irrational() const {
  for (const auto& a : angles)
    if (a.irrational()) return true;
  return false;
}

AngleSpec AngleSpec::single(Angle a, int precision) {
  AngleSpec s;
  s.angles.push_back(std::move(a));
  s.precision = precision;
  return s;
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  if (e.size() != o.e.size()) throw InputError("group element dimension mismatch");
  GroupElement r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Int Box::volume() const {
  Int v = 1;
  for (const auto& r : ranges) {
    if (r.first > r.second) return 0;
    v *= (r.second - r.first + 1);
  }
  return v;
}

RotationContext::RotationContext(AngleSpec spec, EngineLimits limits)
    : spec_(std::move(spec)), limits_(std::move(limits)) {
  if (spec_.angles.empty()) throw InputError("angle spec must have k >= 1");
  if (spec_.precision < 10) throw InputError("precision must be at least 10");
  for (const auto& a : spec_.angles) angle_values_.push_back(a.value());
}

void RotationContext::check_dim(std::size_t got, const char* what) const {
  if ((int)got != k())
    throw InputError(std::string(what) + ": dimension mismatch");
}

CirclePoint RotationContext::point(const Rat& base,
                                   std::vector<Int> coeffs) const {
  check_dim(coeffs.size(), "point");
  CirclePoint p;
  p.base = base - Rat(rat_floor(base));
  p.coeffs = std::move(coeffs);
  return p;
}

CirclePoint RotationContext::rational_point(const Rat& base) const {
  return point(base, std::vector<Int>(k(), 0));
}

CirclePoint RotationContext::act(const GroupElement& s,
                                 const CirclePoint& p) const {
  check_dim(s.e.size(), "act");
  check_dim(p.coeffs.size(), "act");
  CirclePoint q = p;
  for (std::size_t i = 0; i < q.coeffs.size(); ++i) q.coeffs[i] += s.e[i];
  return q;
}

Real RotationContext::value(const CirclePoint& p) const {
  check_dim(p.coeffs.size(), "value");
  Real v{p.base};
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (p.coeffs[i] != 0) v = v + angle_values_[i].scaled(Rat(p.coeffs[i]));
  }
  return v.fractional();
}

namespace {

int suggest_precision(const Real& gap) {
  // smallest P whose margin 10^-(P-5) sits safely below the gap
  Rat lo, hi;
  gap.enclose(128, lo, hi);
  if (lo <= 0) lo = hi / 2;  // gap known nonzero; fall back to upper half
  int digits = 0;
  Rat x = lo;
  while (x < 1 && digits < 100000) {
    x *= 10;
    ++digits;
  }
  return digits + 7;
}

}  // namespace

CompareOutcome RotationContext::compare(const CirclePoint& p,
                                        const CirclePoint& q) const {
  Real diff = value(p) - value(q);
  if (diff.is_zero()) return {true, Real{}};
  Real dist = diff.abs();               // in (0,1)
  Real wrapped = Real(1) - dist;
  Real gap = (dist - wrapped).sign() <= 0 ? dist : wrapped;
  if (gap.is_rational() && gap.rat_part() < spec_.margin()) {
    // decimal-only data: refuse to certify a symbol this close to a tie
    throw PrecisionExhausted("circular gap below certification margin",
                             suggest_precision(gap));
  }
  return {false, gap};
}

int RotationContext::order_compare(const CirclePoint& p,
                                   const CirclePoint& q) const {
  CompareOutcome r = compare(p, q);
  if (r.equal) return 0;
  return (value(p) - value(q)).sign();
}

bool RotationContext::circular_betweenness(const CirclePoint& a,
                                           const CirclePoint& b,
                                           const CirclePoint& c) const {
  if (compare(a, b).equal || compare(b, c).equal || compare(a, c).equal)
    throw InputError("circular betweenness requires pairwise distinct points");
  Real x = value(a), y = value(b), z = value(c);
  int s = (y - x).sign() * (z - y).sign() * (z - x).sign();
  return s > 0;
}

std::vector<std::pair<GroupElement, CirclePoint>> RotationContext::orbit_sample(
    const CirclePoint& z, const Box& box) const {
  check_dim(box.ranges.size(), "orbit_sample");
  if (box.volume() > limits_.max_box_volume)
    throw BudgetError("box volume exceeds limit");
  std::vector<std::pair<GroupElement, CirclePoint>> out;
  for_each_box_point(box, [&](const GroupElement& s) {
    out.emplace_back(s, act(s, z));
  });
  return out;
}

}  // namespace cyclord
