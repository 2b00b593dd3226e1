#include "cyclord/split.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cyclord {

PointMap SplitOrder::nu_map() const {
  return PointMap(order, base, nu);
}

SplitOrder split(const FiniteCyclicOrder& base, const std::vector<Label>& a_set) {
  std::set<Label> a(a_set.begin(), a_set.end());
  for (const auto& l : a) base.position(l);  // A must sit inside the base
  std::vector<Label> arrangement;
  std::unordered_map<Label, Label> nu;
  for (const auto& l : base.arrangement()) {
    if (a.count(l)) {
      arrangement.push_back(minus_copy(l));
      arrangement.push_back(plus_copy(l));
      nu.emplace(minus_copy(l), l);
      nu.emplace(plus_copy(l), l);
    } else {
      arrangement.push_back(l);
      nu.emplace(l, l);
    }
  }
  SplitOrder out{base, std::vector<Label>(a.begin(), a.end()),
                 FiniteCyclicOrder(std::move(arrangement)), std::move(nu)};
  return out;
}

SplitIsomorphismReport split_uniqueness_check(const FiniteCyclicOrder& m_order,
                                              const PointMap& gamma) {
  if (gamma.domain != m_order)
    throw InputError("gamma must be defined on the given order");
  VerdictReport v = is_cop(gamma);
  if (!v.cop) throw InputError("gamma is not COP (" + v.reason + ")");

  std::unordered_map<Label, std::vector<Label>> fibers;
  for (const auto& l : m_order.arrangement())
    fibers[gamma.apply(l)].push_back(l);
  std::vector<Label> a_set;
  for (const auto& x : gamma.codomain.arrangement()) {
    auto it = fibers.find(x);
    if (it == fibers.end())
      throw InputError("gamma is not onto: nothing maps to " + x);
    if (it->second.size() > 2)
      throw InputError("fiber over " + x + " has more than two points");
    if (it->second.size() == 2) a_set.push_back(x);
  }

  SplitOrder expected = split(gamma.codomain, a_set);
  SplitIsomorphismReport report;
  for (const auto& x : gamma.codomain.arrangement()) {
    const auto& fib = fibers[x];
    if (fib.size() == 1) {
      report.iso.emplace(fib[0], x);
      continue;
    }
    // doubled fiber: the two points must be adjacent; the earlier one is x-
    const Label &m1 = fib[0], &m2 = fib[1];
    if (m_order.successor(m1) == m2) {
      report.iso.emplace(m1, minus_copy(x));
      report.iso.emplace(m2, plus_copy(x));
    } else if (m_order.successor(m2) == m1) {
      report.iso.emplace(m2, minus_copy(x));
      report.iso.emplace(m1, plus_copy(x));
    } else {
      report.failure = "fiber over " + x + " is not adjacent in the domain";
      return report;
    }
  }
  std::vector<Label> relabeled;
  for (const auto& l : m_order.arrangement())
    relabeled.push_back(report.iso.at(l));
  if (FiniteCyclicOrder(relabeled) != expected.order) {
    report.failure = "induced relabeling does not match Split(base, A)";
    report.iso.clear();
    return report;
  }
  report.ok = true;
  return report;
}

namespace {

std::string sample_label(std::size_t i, std::size_t total) {
  std::size_t width = std::to_string(total).size();
  std::string digits = std::to_string(i);
  return "q" + std::string(width - digits.size(), '0') + digits;
}

struct RawSamplePoint {
  CirclePoint p;
  bool in_a = false;
};

}  // namespace

const CirclePoint& SplitActionSample::point_of(const Label& base_label) const {
  auto it = points.find(base_label);
  if (it == points.end()) throw InputError("unknown sample label: " + base_label);
  return it->second;
}

SplitActionSample split_action(const RotationContext& ctx,
                               const std::vector<CirclePoint>& a_generators,
                               const CirclePoint& z, long window) {
  if (ctx.k() != 1) throw InputError("split_action expects a k = 1 spec");
  if (window < 0) throw InputError("window must be nonnegative");
  Int budget = Int(2 * window + 1) * Int(a_generators.size() + 1);
  if (budget > ctx.limits().max_box_volume)
    throw BudgetError("sample size exceeds box volume limit");

  std::vector<RawSamplePoint> raw;
  auto add = [&](const CirclePoint& p, bool in_a) {
    for (auto& r : raw) {
      if (ctx.compare(r.p, p).equal) {
        r.in_a = r.in_a || in_a;
        return;
      }
    }
    raw.push_back({p, in_a});
  };
  for (long n = -window; n <= window; ++n) {
    GroupElement g{{Int(n)}};
    add(ctx.act(g, z), false);
    for (const auto& gen : a_generators) add(ctx.act(g, gen), true);
  }
  std::sort(raw.begin(), raw.end(), [&](const RawSamplePoint& a,
                                        const RawSamplePoint& b) {
    return ctx.order_compare(a.p, b.p) < 0;
  });

  std::vector<Label> arrangement, a_labels;
  std::unordered_map<Label, CirclePoint> points;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Label l = sample_label(i, raw.size());
    arrangement.push_back(l);
    points.emplace(l, raw[i].p);
    if (raw[i].in_a) a_labels.push_back(l);
  }
  FiniteCyclicOrder base_order(std::move(arrangement));
  SplitOrder sp = split(base_order, a_labels);
  return SplitActionSample{std::move(base_order), std::move(sp),
                           std::move(points), std::move(a_labels), window};
}

PointMap sample_translation(const RotationContext& ctx,
                            const SplitActionSample& sample, long shift) {
  GroupElement g{{Int(shift)}};
  std::set<Label> a_set(sample.a_labels.begin(), sample.a_labels.end());
  auto locate = [&](const CirclePoint& p) -> const Label* {
    for (const auto& [label, q] : sample.points)
      if (ctx.compare(p, q).equal) return &label;
    return nullptr;
  };
  std::vector<Label> domain;
  std::unordered_map<Label, Label> map;
  for (const auto& l : sample.split.order.arrangement()) {
    const Label& base_label = sample.split.nu.at(l);
    const Label* target = locate(ctx.act(g, sample.point_of(base_label)));
    if (!target) continue;  // image leaves the finite sample
    bool source_split = a_set.count(base_label) != 0;
    bool target_split = a_set.count(*target) != 0;
    if (source_split != target_split) continue;  // sign copies must transport
    if (!source_split) {
      domain.push_back(l);
      map.emplace(l, *target);
    } else if (l == minus_copy(base_label)) {
      domain.push_back(l);
      map.emplace(l, minus_copy(*target));
    } else {
      domain.push_back(l);
      map.emplace(l, plus_copy(*target));
    }
  }
  if (domain.empty()) throw InputError("translation leaves the whole sample");
  return PointMap(FiniteCyclicOrder(domain), sample.split.order, std::move(map));
}

PointMap split_factor_map(const SplitActionSample& fine,
                          const SplitActionSample& coarse) {
  if (fine.base_order != coarse.base_order)
    throw InputError("factor map needs matching base samples");
  std::set<Label> coarse_a(coarse.a_labels.begin(), coarse.a_labels.end());
  std::set<Label> fine_a(fine.a_labels.begin(), fine.a_labels.end());
  for (const auto& l : coarse.a_labels)
    if (!fine_a.count(l))
      throw InputError("coarse split set must be contained in the fine one");
  std::unordered_map<Label, Label> map;
  for (const auto& l : fine.split.order.arrangement()) {
    const Label& base_label = fine.split.nu.at(l);
    if (coarse_a.count(base_label)) {
      map.emplace(l, l == minus_copy(base_label) ? minus_copy(base_label)
                                                 : plus_copy(base_label));
    } else {
      map.emplace(l, base_label);
    }
  }
  return PointMap(fine.split.order, coarse.split.order, std::move(map));
}

FiniteCyclicOrder double_circle_sample(int n, int markers) {
  if (n < 1) throw InputError("double circle needs n >= 1");
  if (markers < 0 || markers > n)
    throw InputError("marker count must lie in [0, n]");
  std::vector<Label> base_labels;
  for (int i = 0; i < n; ++i) base_labels.push_back(std::to_string(i));
  FiniteCyclicOrder product =
      lex_product(FiniteCyclicOrder(base_labels), {"-", "+"});
  if (markers == 0) return product;
  std::vector<Label> arrangement;
  for (const auto& l : product.arrangement()) {
    arrangement.push_back(l);
    if (!l.empty() && l.back() == '+') {
      int j = std::stoi(l.substr(0, l.size() - 1));
      if (j < markers) arrangement.push_back("s" + std::to_string(j));
    }
  }
  return FiniteCyclicOrder(std::move(arrangement));
}

RotationNumberReport rotation_number_estimate(const std::vector<int>& symbols,
                                              long sample_size) {
  if (sample_size < 1 || sample_size > (long)symbols.size())
    throw InputError("sample size must lie in [1, len(symbols)]");
  long ones = 0;
  for (long i = 0; i < sample_size; ++i)
    if (symbols[i] != 0) ++ones;
  return {(double)ones / (double)sample_size, sample_size, ones};
}

}  // namespace cyclord
