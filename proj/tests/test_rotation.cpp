#include <doctest.h>

#include <algorithm>
#include <random>

#include "cyclord/rotation.hpp"

using namespace cyclord;

namespace {

RotationContext golden_ctx() {
  return RotationContext(AngleSpec::single(Angle::named("golden")));
}

}  // namespace

TEST_CASE("acting by zero is the identity") {
  auto ctx = golden_ctx();
  CirclePoint p = ctx.point(Rat(1, 4), {Int(2)});
  CHECK(ctx.act(GroupElement::zero(1), p) == p);
}

TEST_CASE("one golden step lands on the golden mean") {
  auto ctx = golden_ctx();
  CirclePoint p = ctx.act(GroupElement{{Int(1)}}, ctx.rational_point(0));
  CHECK(ctx.value(p).decimal(10) == "0.6180339887");
  CHECK(ctx.value(p).decimal(30) == "0.618033988749894848204586834365");
}

TEST_CASE("the action law holds symbolically") {
  auto ctx = golden_ctx();
  CirclePoint p = ctx.point(Rat(3, 7), {Int(-4)});
  GroupElement s1{{Int(5)}}, s2{{Int(-11)}};
  CHECK(ctx.act(s1, ctx.act(s2, p)) == ctx.act(s1 + s2, p));
}

TEST_CASE("symbolically identical points compare equal") {
  auto ctx = golden_ctx();
  CirclePoint p = ctx.point(Rat(1, 3), {Int(7)});
  CHECK(ctx.compare(p, p).equal);
}

TEST_CASE("golden gap between 0 and alpha is 1 - alpha") {
  auto ctx = golden_ctx();
  CirclePoint zero = ctx.rational_point(0);
  CirclePoint alpha = ctx.act(GroupElement{{Int(1)}}, zero);
  auto outcome = ctx.compare(zero, alpha);
  CHECK_FALSE(outcome.equal);
  CHECK(outcome.gap.decimal(10) == "0.3819660112");
}

TEST_CASE("rational coincidence is detected exactly") {
  auto ctx = RotationContext(
      AngleSpec::single(Angle::decimal(Rat(1, 3))));
  CirclePoint a = ctx.point(Rat(0), {Int(0)});
  CirclePoint b = ctx.point(Rat(0), {Int(3)});
  CHECK(ctx.compare(a, b).equal);
  CHECK_FALSE(ctx.spec().any_irrational());
}

TEST_CASE("close rational data exhausts the precision budget") {
  AngleSpec spec = AngleSpec::single(Angle::decimal(Rat(1, 2)));
  spec.precision = 60;  // margin 10^-55
  RotationContext ctx(spec);
  CirclePoint a = ctx.rational_point(Rat(1, 4));
  CirclePoint b = ctx.rational_point(Rat(1, 4) + pow10(-58));
  try {
    ctx.compare(a, b);
    FAIL("expected PrecisionExhausted");
  } catch (const PrecisionExhausted& e) {
    CHECK(e.suggested_precision > 60);
  }
  // wrap-around closeness is caught as well
  CirclePoint lo = ctx.rational_point(pow10(-58));
  CirclePoint hi = ctx.rational_point(Rat(1) - pow10(-58));
  CHECK_THROWS_AS(ctx.compare(lo, hi), PrecisionExhausted);
}

TEST_CASE("golden workloads never exhaust precision") {
  auto ctx = golden_ctx();
  std::mt19937_64 rng(31);
  CirclePoint z = ctx.rational_point(0);
  for (int t = 0; t < 300; ++t) {
    long n = (long)(rng() % 2000) - 1000, m = (long)(rng() % 2000) - 1000;
    if (n == m) continue;
    auto out = ctx.compare(ctx.act(GroupElement{{Int(n)}}, z),
                           ctx.act(GroupElement{{Int(m)}}, z));
    CHECK_FALSE(out.equal);
    CHECK(out.gap.sign() == 1);
  }
}

TEST_CASE("circular betweenness by the sign criterion") {
  auto ctx = golden_ctx();
  auto pt = [&](const char* d) { return ctx.rational_point(parse_decimal(d, 60)); };
  CHECK(ctx.circular_betweenness(pt("0.1"), pt("0.2"), pt("0.3")));
  CHECK_FALSE(ctx.circular_betweenness(pt("0.1"), pt("0.3"), pt("0.2")));
  CHECK(ctx.circular_betweenness(pt("0.9"), pt("0.05"), pt("0.2")));
  CHECK_THROWS_AS(ctx.circular_betweenness(pt("0.1"), pt("0.1"), pt("0.2")),
                  InputError);
}

TEST_CASE("betweenness is invariant under the action") {
  auto ctx = golden_ctx();
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    Rat a(rng() % 1000, 1009), b(rng() % 1000, 1013), c(rng() % 1000, 1019);
    CirclePoint pa = ctx.rational_point(a), pb = ctx.rational_point(b),
                pc = ctx.rational_point(c);
    if (ctx.compare(pa, pb).equal || ctx.compare(pb, pc).equal ||
        ctx.compare(pa, pc).equal)
      continue;
    GroupElement s{{Int((long)(rng() % 200) - 100)}};
    CHECK(ctx.circular_betweenness(pa, pb, pc) ==
          ctx.circular_betweenness(ctx.act(s, pa), ctx.act(s, pb),
                                   ctx.act(s, pc)));
  }
}

TEST_CASE("orbit samples enumerate the box") {
  auto ctx = golden_ctx();
  CirclePoint z = ctx.rational_point(0);
  auto single = ctx.orbit_sample(z, Box::segment(0, 0));
  REQUIRE(single.size() == 1);
  CHECK(single[0].second == z);

  auto row = ctx.orbit_sample(z, Box::segment(0, 4));
  REQUIRE(row.size() == 5);
  const char* expect[] = {"0.0000", "0.6180", "0.2360", "0.8541", "0.4721"};
  for (int i = 0; i < 5; ++i)
    CHECK(ctx.value(row[i].second).decimal(4) == expect[i]);

  AngleSpec two;
  two.angles = {Angle::named("golden"), Angle::decimal(Rat(1, 4))};
  RotationContext ctx2(two);
  Box square{{{Int(0), Int(1)}, {Int(0), Int(1)}}};
  auto grid = ctx2.orbit_sample(ctx2.rational_point(0), square);
  REQUIRE(grid.size() == 4);
  CHECK(ctx2.value(grid[1].second).decimal(4) == "0.2500");
  CHECK(ctx2.value(grid[2].second).decimal(4) == "0.6180");
  CHECK(ctx2.value(grid[3].second).decimal(4) == "0.8680");
}

TEST_CASE("boxes above the volume limit are refused") {
  EngineLimits limits;
  limits.max_box_volume = 10;
  RotationContext ctx(AngleSpec::single(Angle::named("golden")), limits);
  CHECK_THROWS_AS(ctx.orbit_sample(ctx.rational_point(0), Box::segment(0, 100)),
                  BudgetError);
}

TEST_CASE("the first ten thousand golden orbit points are distinct") {
  auto ctx = golden_ctx();
  const int N = 10000;
  std::vector<Real> values;
  values.reserve(N);
  CirclePoint z = ctx.rational_point(0);
  for (int n = 0; n < N; ++n)
    values.push_back(ctx.value(ctx.act(GroupElement{{Int(n)}}, z)));
  std::sort(values.begin(), values.end(),
            [](const Real& a, const Real& b) { return (a - b).sign() < 0; });
  for (int i = 0; i + 1 < N; ++i)
    CHECK((values[i + 1] - values[i]).sign() == 1);
}

TEST_CASE("golden orbits equidistribute at the 0.01 scale") {
  auto ctx = golden_ctx();
  const int N = 10000;
  CirclePoint z = ctx.rational_point(0);
  std::vector<Real> values;
  for (int n = 0; n < N; ++n)
    values.push_back(ctx.value(ctx.act(GroupElement{{Int(n)}}, z)));
  auto fraction_below = [&](const Real& t) {
    int count = 0;
    for (const auto& v : values)
      if ((v - t).sign() < 0) ++count;
    return (double)count / N;
  };
  struct Case { Real t; double expect; };
  Case cases[] = {{Real(Rat(1, 4)), 0.25},
                  {Real(1) - Real::golden(), 0.381966},
                  {Real(Rat(7, 10)), 0.7}};
  for (const auto& c : cases) {
    double frac = fraction_below(c.t);
    CHECK(std::abs(frac - c.expect) < 0.01);
  }
}
