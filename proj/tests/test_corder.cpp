#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyclord/corder.hpp"

using namespace cyclord;

namespace {

FiniteCyclicOrder cn(int n) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FiniteCyclicOrder(labels);
}

std::vector<Label> random_labels(int n, std::mt19937_64& rng) {
  std::vector<Label> labels;
  for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::shuffle(labels.begin(), labels.end(), rng);
  return labels;
}

}  // namespace

TEST_CASE("the three-element cyclic order validates") {
  TernaryRelation rel;
  rel.ground = {"0", "1", "2"};
  rel.triples = {{"0", "1", "2"}, {"1", "2", "0"}, {"2", "0", "1"}};
  auto report = validate_circular_order(rel);
  CHECK(report.is_corder);
  CHECK(report.violations.empty());
}

TEST_CASE("an added reversed triple breaks asymmetry") {
  TernaryRelation rel;
  rel.ground = {"0", "1", "2"};
  rel.triples = {{"0", "1", "2"}, {"1", "2", "0"}, {"2", "0", "1"},
                 {"0", "2", "1"}};
  auto report = validate_circular_order(rel);
  CHECK_FALSE(report.is_corder);
  bool has_asym = false;
  for (const auto& v : report.violations)
    if (v.axiom == "Asymmetry") has_asym = true;
  CHECK(has_asym);
}

TEST_CASE("derived relations of arrangements satisfy all axioms") {
  for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 12, 20, 40, 60}) {
    auto report = validate_circular_order(cn(n).derived_relation());
    CAPTURE(n);
    CHECK(report.is_corder);
  }
}

TEST_CASE("validation refuses oversized ground sets") {
  TernaryRelation rel;
  for (int i = 0; i < 61; ++i) rel.ground.push_back(std::to_string(i));
  CHECK_THROWS_AS(validate_circular_order(rel), InputError);
  CHECK_THROWS_AS(
      validate_circular_order(TernaryRelation{{}, {}}), InputError);
  TernaryRelation bad;
  bad.ground = {"0"};
  bad.triples = {{"0", "0", "x"}};
  CHECK_THROWS_AS(validate_circular_order(bad), InputError);
}

TEST_CASE("betweenness on the four-element order") {
  auto x = cn(4);
  CHECK(x.betweenness("0", "1", "2"));
  CHECK_FALSE(x.betweenness("0", "2", "1"));
  CHECK(x.betweenness("3", "0", "2"));
  CHECK_FALSE(x.betweenness("0", "0", "1"));
  CHECK_THROWS_AS(x.betweenness("0", "9", "1"), InputError);
}

TEST_CASE("betweenness agrees with the derived relation") {
  std::mt19937_64 rng(7);
  auto labels = random_labels(6, rng);
  FiniteCyclicOrder x(labels);
  TernaryRelation rel = x.derived_relation();
  std::set<Triple> in_rel(rel.triples.begin(), rel.triples.end());
  for (const auto& a : labels)
    for (const auto& b : labels)
      for (const auto& c : labels)
        CHECK(x.betweenness(a, b, c) == (in_rel.count({a, b, c}) != 0));
}

TEST_CASE("intervals enumerate betweenness") {
  auto x4 = cn(4);
  CHECK(x4.interval("0", "2") == std::vector<Label>{"1"});
  CHECK(x4.interval("2", "0") == std::vector<Label>{"3"});
  auto x6 = cn(6);
  CHECK(x6.interval("4", "1") == std::vector<Label>{"5", "0"});
  CHECK(x6.closed_interval("4", "1") ==
        std::vector<Label>{"4", "5", "0", "1"});
  CHECK_THROWS_AS(x6.interval("4", "4"), InputError);
  // small ground sets have empty betweenness
  CHECK(cn(2).interval("0", "1").empty());
}

TEST_CASE("cuts open the circle at the chosen point") {
  LinearCut cut = cut_at(cn(4), "2");
  CHECK(cut.order == std::vector<Label>{"2-", "3", "0", "1", "2+"});
  LinearCut cut0 = cut_at(cn(3), "0");
  CHECK(cut0.order == std::vector<Label>{"0-", "1", "2", "0+"});
}

TEST_CASE("cut then restore is the identity") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 20; ++n) {
    FiniteCyclicOrder x(random_labels(n, rng));
    for (const auto& c : x.arrangement()) {
      LinearCut cut = cut_at(x, c);
      CHECK(restore_from_cut(cut) == x);
    }
  }
}

TEST_CASE("standard c-order from a linear arrangement") {
  std::vector<Label> seq{"b", "c", "a"};
  FiniteCyclicOrder x = standard_corder_from_linear(seq);
  CHECK(x.betweenness("b", "c", "a"));
  CHECK_THROWS_AS(standard_corder_from_linear({"a", "a"}), InputError);
  std::mt19937_64 rng(13);
  auto labels = random_labels(10, rng);
  CHECK(standard_corder_from_linear(labels) == FiniteCyclicOrder(labels));
}

TEST_CASE("cycles in the five-element order") {
  auto x = cn(5);
  CHECK(is_cycle(x, {"0", "1", "2", "3", "4"}));
  CHECK_FALSE(is_cycle(x, {"0", "2", "1"}));
  CHECK(is_cycle(x, {"0", "0", "2", "2", "4"}));
  CHECK(is_cycle(x, {"3", "4", "0", "1"}));
  // equal entries interleaved with a different value on both arcs
  CHECK_FALSE(is_cycle(x, {"0", "2", "0", "3"}));
  CHECK(is_cycle(x, {"1"}));
  CHECK(is_cycle(x, {}));
}

TEST_CASE("identity, constants and gap gluings are COP") {
  auto c5 = cn(5);
  CHECK(is_cop(PointMap::identity(c5)).cop);

  std::unordered_map<Label, Label> constant;
  for (const auto& l : c5.arrangement()) constant.emplace(l, "1");
  CHECK(is_cop(PointMap(c5, cn(3), constant)).cop);

  auto c4 = cn(4);
  std::unordered_map<Label, Label> glue{{"0", "0"}, {"1", "1"}, {"2", "2"},
                                        {"3", "0"}};
  CHECK(is_cop(PointMap(c4, c4, glue)).cop);

  std::unordered_map<Label, Label> swap{{"0", "0"}, {"1", "2"}, {"2", "1"},
                                        {"3", "3"}};
  VerdictReport v = is_cop(PointMap(c4, c4, swap));
  CHECK_FALSE(v.cop);
  CHECK(v.reason == "betweenness");

  // equal images on opposite points with no constant interval between them
  std::unordered_map<Label, Label> pinch{{"0", "0"}, {"1", "1"}, {"2", "0"},
                                         {"3", "1"}};
  VerdictReport p = is_cop(PointMap(c4, c4, pinch));
  CHECK_FALSE(p.cop);
  CHECK(p.reason == "collapse");
}

TEST_CASE("composition preserves COP") {
  auto c6 = cn(6);
  auto rotation = [&](int s) {
    std::unordered_map<Label, Label> m;
    for (int i = 0; i < 6; ++i)
      m.emplace(std::to_string(i), std::to_string((i + s) % 6));
    return PointMap(c6, c6, m);
  };
  PointMap id = PointMap::identity(c6);
  CHECK(compose_cop(id, id).map == id.map);
  PointMap r23 = compose_cop(rotation(2), rotation(3));
  CHECK(r23.map == rotation(5).map);
  CHECK_THROWS_AS(compose_cop(rotation(1), PointMap::identity(cn(5))),
                  InputError);
}

namespace {

// all maps C_m -> C_p as vectors of image indices
std::vector<std::vector<int>> all_maps(int m, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  while (true) {
    out.push_back(cur);
    int i = m - 1;
    for (; i >= 0; --i) {
      if (cur[i] + 1 < p) {
        ++cur[i];
        for (int j = i + 1; j < m; ++j) cur[j] = 0;
        break;
      }
    }
    if (i < 0) break;
  }
  return out;
}

PointMap map_from_images(const FiniteCyclicOrder& dom,
                         const FiniteCyclicOrder& cod,
                         const std::vector<int>& img) {
  std::unordered_map<Label, Label> m;
  for (std::size_t i = 0; i < dom.size(); ++i)
    m.emplace(dom.arrangement()[i], cod.arrangement()[img[i]]);
  return PointMap(dom, cod, m);
}

// all tuples over the domain labels of length <= len
void all_tuples(const std::vector<Label>& labels, int len,
                std::vector<std::vector<Label>>& out) {
  std::vector<std::vector<Label>> frontier{{}};
  for (int l = 1; l <= len; ++l) {
    std::vector<std::vector<Label>> next;
    for (const auto& t : frontier)
      for (const auto& lab : labels) {
        auto u = t;
        u.push_back(lab);
        next.push_back(u);
        out.push_back(u);
      }
    frontier = std::move(next);
  }
}

}  // namespace

TEST_CASE("random composites of verified COP maps remain COP") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + (int)(rng() % 5);  // up to 7
    auto x = cn(n);
    auto random_cop = [&]() {
      // a rotation optionally composed with an interval collapse
      std::unordered_map<Label, Label> m;
      int s = (int)(rng() % n);
      for (int i = 0; i < n; ++i)
        m.emplace(std::to_string(i), std::to_string((i + s) % n));
      PointMap f(x, x, m);
      if (rng() % 2) {
        int from = (int)(rng() % n), len = (int)(rng() % n);
        std::unordered_map<Label, Label> g;
        for (int i = 0; i < n; ++i) g.emplace(std::to_string(i), std::to_string(i));
        for (int t = 1; t <= len; ++t)
          g[std::to_string((from + t) % n)] = std::to_string(from);
        f = compose_cop(f, PointMap(x, x, g));
      }
      return f;
    };
    PointMap f = random_cop(), g = random_cop();
    REQUIRE(is_cop(f).cop);
    REQUIRE(is_cop(g).cop);
    CHECK(is_cop(compose_cop(f, g)).cop);
  }
}

TEST_CASE("injective COP self-maps are exactly the rotations") {
  for (int n = 3; n <= 7; ++n) {
    auto x = cn(n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    int cop_count = 0;
    do {
      PointMap f = map_from_images(x, x, perm);
      bool cop = is_cop(f).cop;
      bool rotation = false;
      for (int s = 0; s < n && !rotation; ++s) {
        bool match = true;
        for (int i = 0; i < n; ++i)
          if (perm[i] != (i + s) % n) match = false;
        rotation = match;
      }
      CHECK(cop == rotation);
      if (cop) ++cop_count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(cop_count == n);
  }
}

TEST_CASE("is_cop agrees with cycle transport on all small maps") {
  for (int m = 1; m <= 5; ++m) {
    auto dom = cn(m);
    std::vector<std::vector<Label>> tuples;
    all_tuples(dom.arrangement(), std::max(3, m), tuples);
    std::vector<std::vector<Label>> cycles;
    for (const auto& t : tuples)
      if (is_cycle(dom, t)) cycles.push_back(t);
    for (int p = 1; p <= 5; ++p) {
      auto cod = cn(p);
      for (const auto& img : all_maps(m, p)) {
        PointMap f = map_from_images(dom, cod, img);
        bool direct = true;
        for (const auto& cyc : cycles) {
          std::vector<Label> image;
          image.reserve(cyc.size());
          for (const auto& l : cyc) image.push_back(f.apply(l));
          if (!is_cycle(cod, image)) {
            direct = false;
            break;
          }
        }
        CAPTURE(m);
        CAPTURE(p);
        CHECK(is_cop(f).cop == direct);
      }
    }
  }
}

TEST_CASE("cut projections are COP") {
  std::mt19937_64 rng(23);
  for (int n : {3, 5, 9}) {
    FiniteCyclicOrder x(random_labels(n, rng));
    for (const auto& c : x.arrangement()) {
      PointMap q = cut_projection(cut_at(x, c));
      CHECK(is_cop(q).cop);
    }
  }
}

TEST_CASE("lexicographic products") {
  FiniteCyclicOrder dc = lex_product(cn(2), {"-", "+"});
  CHECK(dc == FiniteCyclicOrder({"0-", "0+", "1-", "1+"}));
  CHECK(dc.successor("0-") == "0+");
  CHECK(dc.successor("1-") == "1+");

  CHECK(lex_product(cn(3), {""}) == cn(3));

  FiniteCyclicOrder t = lex_product(cn(3), {"-", "0", "+"});
  CHECK(t.size() == 9);
  CHECK(validate_circular_order(t.derived_relation()).is_corder);
  CHECK_THROWS_AS(lex_product(cn(3), {}), InputError);
}

TEST_CASE("single-triple mutations of derived relations are rejected") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4 + (int)(rng() % 3);
    FiniteCyclicOrder x(random_labels(n, rng));
    TernaryRelation rel = x.derived_relation();
    ValidationConfig fast;
    fast.early_exit = true;
    // removals
    for (std::size_t i = 0; i < rel.triples.size(); ++i) {
      TernaryRelation mutated = rel;
      mutated.triples.erase(mutated.triples.begin() + i);
      CHECK_FALSE(validate_circular_order(mutated, fast).is_corder);
    }
    // additions of absent triples
    std::set<Triple> present(rel.triples.begin(), rel.triples.end());
    for (const auto& a : rel.ground)
      for (const auto& b : rel.ground)
        for (const auto& c : rel.ground) {
          Triple t{a, b, c};
          if (present.count(t)) continue;
          TernaryRelation mutated = rel;
          mutated.triples.push_back(t);
          CHECK_FALSE(validate_circular_order(mutated, fast).is_corder);
        }
  }
}
