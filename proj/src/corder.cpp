#include "cyclord/corder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclord {

FiniteCyclicOrder::FiniteCyclicOrder(std::vector<Label> arrangement)
    : arrangement_(std::move(arrangement)) {
  if (arrangement_.empty()) throw InputError("arrangement must be nonempty");
  auto least = std::min_element(arrangement_.begin(), arrangement_.end());
  std::rotate(arrangement_.begin(), least, arrangement_.end());
  for (std::size_t i = 0; i < arrangement_.size(); ++i) {
    if (!positions_.emplace(arrangement_[i], i).second)
      throw InputError("duplicate label in arrangement: " + arrangement_[i]);
  }
}

std::size_t FiniteCyclicOrder::position(const Label& l) const {
  auto it = positions_.find(l);
  if (it == positions_.end()) throw InputError("unknown label: " + l);
  return it->second;
}

const Label& FiniteCyclicOrder::successor(const Label& l) const {
  return arrangement_[(position(l) + 1) % size()];
}

bool FiniteCyclicOrder::betweenness(const Label& a, const Label& b,
                                    const Label& c) const {
  std::size_t pa = position(a), pb = position(b), pc = position(c);
  if (pa == pb || pb == pc || pa == pc) return false;
  std::size_t n = size();
  std::size_t rb = (pb + n - pa) % n, rc = (pc + n - pa) % n;
  return rb < rc;
}

std::vector<Label> FiniteCyclicOrder::interval(const Label& a,
                                               const Label& b) const {
  if (a == b) throw InputError("interval endpoints must differ");
  std::size_t pa = position(a), pb = position(b), n = size();
  std::vector<Label> out;
  for (std::size_t i = (pa + 1) % n; i != pb; i = (i + 1) % n)
    out.push_back(arrangement_[i]);
  return out;
}

std::vector<Label> FiniteCyclicOrder::closed_interval(const Label& a,
                                                      const Label& b) const {
  std::vector<Label> out{a};
  auto mid = interval(a, b);
  out.insert(out.end(), mid.begin(), mid.end());
  out.push_back(b);
  return out;
}

TernaryRelation FiniteCyclicOrder::derived_relation() const {
  TernaryRelation rel;
  rel.ground = arrangement_;
  std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // positions i<j<k are cyclically ascending; emit all three rotations
        rel.triples.push_back({arrangement_[i], arrangement_[j], arrangement_[k]});
        rel.triples.push_back({arrangement_[j], arrangement_[k], arrangement_[i]});
        rel.triples.push_back({arrangement_[k], arrangement_[i], arrangement_[j]});
      }
  return rel;
}

namespace {

// Dense view of a ternary relation for axiom checking: labels mapped to
// 0..n-1, membership in a flat bitset indexed by a*n^2 + b*n + c.
struct DenseRelation {
  std::size_t n = 0;
  std::vector<Label> labels;
  std::unordered_map<Label, std::size_t> index;
  std::vector<bool> present;
  std::vector<std::array<std::size_t, 3>> triples;  // deduplicated

  std::size_t code(std::size_t a, std::size_t b, std::size_t c) const {
    return (a * n + b) * n + c;
  }
  bool has(std::size_t a, std::size_t b, std::size_t c) const {
    return present[code(a, b, c)];
  }
};

DenseRelation densify(const TernaryRelation& rel) {
  DenseRelation d;
  d.labels = rel.ground;
  d.n = rel.ground.size();
  for (std::size_t i = 0; i < d.n; ++i) {
    if (!d.index.emplace(rel.ground[i], i).second)
      throw InputError("duplicate label in ground set: " + rel.ground[i]);
  }
  d.present.assign(d.n * d.n * d.n, false);
  for (const auto& t : rel.triples) {
    std::array<std::size_t, 3> ix{};
    for (int j = 0; j < 3; ++j) {
      auto it = d.index.find(t[j]);
      if (it == d.index.end())
        throw InputError("triple label outside ground set: " + t[j]);
      ix[j] = it->second;
    }
    std::size_t c = d.code(ix[0], ix[1], ix[2]);
    if (!d.present[c]) {
      d.present[c] = true;
      d.triples.push_back(ix);
    }
  }
  return d;
}

Triple relabel(const DenseRelation& d, std::size_t a, std::size_t b,
               std::size_t c) {
  return {d.labels[a], d.labels[b], d.labels[c]};
}

}  // namespace

ValidationReport validate_circular_order(const TernaryRelation& rel,
                                         const ValidationConfig& cfg) {
  if (rel.ground.empty()) throw InputError("ground set must be nonempty");
  if (rel.ground.size() > cfg.max_ground)
    throw InputError("ground set exceeds validation limit (" +
                     std::to_string(cfg.max_ground) + ")");
  DenseRelation d = densify(rel);
  ValidationReport report;
  auto violated = [&](const std::string& axiom, std::vector<Triple> wit) {
    report.violations.push_back({axiom, std::move(wit)});
  };

  // Cyclicity: [a,b,c] => [b,c,a]
  for (const auto& t : d.triples) {
    if (!d.has(t[1], t[2], t[0])) {
      violated("Cyclicity", {relabel(d, t[0], t[1], t[2])});
      if (cfg.early_exit) return report;
      break;
    }
  }
  // Asymmetry: [a,b,c] => not [a,c,b]
  for (const auto& t : d.triples) {
    if (d.has(t[0], t[2], t[1])) {
      violated("Asymmetry",
               {relabel(d, t[0], t[1], t[2]), relabel(d, t[0], t[2], t[1])});
      if (cfg.early_exit) return report;
      break;
    }
  }
  // Transitivity: [a,b,c] and [a,c,d] => [a,b,d]
  bool done = false;
  for (const auto& t : d.triples) {
    for (std::size_t x = 0; x < d.n && !done; ++x) {
      if (d.has(t[0], t[2], x) && !d.has(t[0], t[1], x)) {
        violated("Transitivity",
                 {relabel(d, t[0], t[1], t[2]), relabel(d, t[0], t[2], x)});
        if (cfg.early_exit) return report;
        done = true;
      }
    }
    if (done) break;
  }
  // Totality: distinct a,b,c => [a,b,c] or [a,c,b]
  done = false;
  for (std::size_t a = 0; a < d.n && !done; ++a)
    for (std::size_t b = a + 1; b < d.n && !done; ++b)
      for (std::size_t c = b + 1; c < d.n && !done; ++c) {
        if (!d.has(a, b, c) && !d.has(a, c, b)) {
          violated("Totality", {relabel(d, a, b, c)});
          if (cfg.early_exit) return report;
          done = true;
        }
      }

  report.is_corder = report.violations.empty();
  if (!report.is_corder) return report;

  // Derived consequences; a failure here after the axioms passed is a
  // contradiction, not a property of the input.
  for (const auto& t : d.triples) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      throw std::logic_error("axioms passed but a triple has repeated entries");
  }
  for (const auto& t : d.triples) {  // [c,a,x] and [c,x,b] => [a,x,b]
    std::size_t c = t[0], a = t[1], x = t[2];
    for (std::size_t b = 0; b < d.n; ++b) {
      if (d.has(c, x, b) && a != b && a != x && x != b && !d.has(a, x, b))
        throw std::logic_error("axioms passed but split transitivity fails");
    }
  }
  return report;
}

Label minus_copy(const Label& l) { return l + "-"; }
Label plus_copy(const Label& l) { return l + "+"; }

LinearCut cut_at(const FiniteCyclicOrder& order, const Label& c) {
  std::size_t pc = order.position(c), n = order.size();
  if (order.contains(minus_copy(c)) || order.contains(plus_copy(c)))
    throw InputError("cut copy labels collide with existing labels of " + c);
  LinearCut cut{order, c, {}};
  cut.order.push_back(minus_copy(c));
  for (std::size_t i = 1; i < n; ++i)
    cut.order.push_back(order.at(pc + i));
  cut.order.push_back(plus_copy(c));
  return cut;
}

FiniteCyclicOrder LinearCut::as_corder() const {
  return standard_corder_from_linear(order);
}

FiniteCyclicOrder standard_corder_from_linear(const std::vector<Label>& seq) {
  return FiniteCyclicOrder(seq);  // duplicate labels rejected there
}

FiniteCyclicOrder restore_from_cut(const LinearCut& cut) {
  std::vector<Label> arrangement;
  arrangement.push_back(cut.cutpoint);
  for (std::size_t i = 1; i + 1 < cut.order.size(); ++i)
    arrangement.push_back(cut.order[i]);
  return FiniteCyclicOrder(std::move(arrangement));
}

bool is_cycle(const FiniteCyclicOrder& order, const std::vector<Label>& v) {
  for (const auto& l : v) order.position(l);  // label check
  std::size_t m = v.size();
  // (1) index triples in cyclic ascending order with distinct values
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        if (v[i] == v[j] || v[j] == v[k] || v[i] == v[k]) continue;
        if (!order.betweenness(v[i], v[j], v[k])) return false;
      }
  // (2) equal entries force constancy along one of the two index arcs
  auto arc_constant = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i != to; i = (i + 1) % m)
      if (v[i] != v[from]) return false;
    return true;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (i == k || v[i] != v[k]) continue;
      if (!arc_constant(i, k) && !arc_constant(k, i)) return false;
    }
  return true;
}

PointMap::PointMap(FiniteCyclicOrder dom, FiniteCyclicOrder cod,
                   std::unordered_map<Label, Label> m)
    : domain(std::move(dom)), codomain(std::move(cod)), map(std::move(m)) {
  for (const auto& l : domain.arrangement()) {
    auto it = map.find(l);
    if (it == map.end()) throw InputError("map not total: missing " + l);
    if (!codomain.contains(it->second))
      throw InputError("map value outside codomain: " + it->second);
  }
}

const Label& PointMap::apply(const Label& l) const {
  auto it = map.find(l);
  if (it == map.end()) throw InputError("label outside map domain: " + l);
  return it->second;
}

PointMap PointMap::identity(const FiniteCyclicOrder& x) {
  std::unordered_map<Label, Label> m;
  for (const auto& l : x.arrangement()) m.emplace(l, l);
  return PointMap(x, x, std::move(m));
}

PointMap cut_projection(const LinearCut& cut) {
  std::unordered_map<Label, Label> m;
  m.emplace(cut.order.front(), cut.cutpoint);
  m.emplace(cut.order.back(), cut.cutpoint);
  for (std::size_t i = 1; i + 1 < cut.order.size(); ++i)
    m.emplace(cut.order[i], cut.order[i]);
  return PointMap(cut.as_corder(), cut.base, std::move(m));
}

VerdictReport is_cop(const PointMap& f) {
  const auto& dom = f.domain.arrangement();
  std::size_t n = dom.size();
  // (1) triples with distinct images must keep their orientation
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!f.domain.betweenness(dom[i], dom[j], dom[k])) continue;
        const Label &a = f.apply(dom[i]), &b = f.apply(dom[j]),
                    &c = f.apply(dom[k]);
        if (a == b || b == c || a == c) continue;
        if (!f.codomain.betweenness(a, b, c))
          return {false, "betweenness", {dom[i], dom[j], dom[k]}};
      }
  // (2) equal images force constancy on a closed interval between preimages
  auto constant_on = [&](const Label& from, const Label& to) {
    const Label& value = f.apply(from);
    std::size_t p = f.domain.position(from), q = f.domain.position(to);
    for (std::size_t i = p; i != q; i = (i + 1) % n)
      if (f.apply(dom[i]) != value) return false;
    return f.apply(to) == value;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      if (f.apply(dom[i]) != f.apply(dom[k])) continue;
      if (!constant_on(dom[i], dom[k]) && !constant_on(dom[k], dom[i]))
        return {false, "collapse", {dom[i], dom[k]}};
    }
  return {true, "", {}};
}

PointMap compose_cop(const PointMap& f, const PointMap& g) {
  if (f.codomain != g.domain)
    throw InputError("compose: codomain of first map differs from domain of second");
  std::unordered_map<Label, Label> m;
  for (const auto& l : f.domain.arrangement()) m.emplace(l, g.apply(f.apply(l)));
  return PointMap(f.domain, g.codomain, std::move(m));
}

FiniteCyclicOrder lex_product(const FiniteCyclicOrder& k_factor,
                              const std::vector<Label>& linear_factor) {
  if (linear_factor.empty()) throw InputError("linear factor must be nonempty");
  std::vector<Label> arrangement;
  for (const auto& k : k_factor.arrangement())
    for (const auto& l : linear_factor) arrangement.push_back(k + l);
  return FiniteCyclicOrder(std::move(arrangement));
}

}  // namespace cyclord
