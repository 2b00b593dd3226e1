#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclord/exact.hpp"

namespace cyclord {

using Label = std::string;
using Triple = std::array<Label, 3>;

// Untrusted input form: an explicit ternary relation over a finite ground set.
struct TernaryRelation {
  std::vector<Label> ground;
  std::vector<Triple> triples;
};

// A finite circular order, stored as its arrangement read cyclically and
// normalized so the lexicographically least label comes first. Equality of
// circular orders is then plain sequence equality.
class FiniteCyclicOrder {
 public:
  explicit FiniteCyclicOrder(std::vector<Label> arrangement);

  std::size_t size() const { return arrangement_.size(); }
  const std::vector<Label>& arrangement() const { return arrangement_; }
  bool contains(const Label& l) const { return positions_.count(l) != 0; }
  std::size_t position(const Label& l) const;
  const Label& at(std::size_t i) const { return arrangement_[i % size()]; }
  const Label& successor(const Label& l) const;

  // [a,b,c]: a, b, c distinct and encountered in this cyclic order.
  bool betweenness(const Label& a, const Label& b, const Label& c) const;

  std::vector<Label> interval(const Label& a, const Label& b) const;
  std::vector<Label> closed_interval(const Label& a, const Label& b) const;

  TernaryRelation derived_relation() const;

  bool operator==(const FiniteCyclicOrder& o) const {
    return arrangement_ == o.arrangement_;
  }
  bool operator!=(const FiniteCyclicOrder& o) const { return !(*this == o); }

 private:
  std::vector<Label> arrangement_;
  std::unordered_map<Label, std::size_t> positions_;
};

struct ValidationConfig {
  std::size_t max_ground = 60;  // refuse larger inputs rather than subsample
  bool early_exit = false;      // stop at the first violation
};

struct ValidationReport {
  struct Violation {
    std::string axiom;            // Cyclicity | Asymmetry | Transitivity | Totality
    std::vector<Triple> witness;  // offending triple(s)
  };
  bool is_corder = false;
  std::vector<Violation> violations;
};

// Checks the four circular-order axioms; if they hold, additionally verifies
// the two derived consequences (entry distinctness and the split form of
// transitivity). A derived-consequence failure after the axioms pass would be
// a contradiction, so it is raised as an internal error instead of reported.
ValidationReport validate_circular_order(const TernaryRelation& rel,
                                         const ValidationConfig& cfg = {});

// Linear cut X(c): the circle opened at c, with duplicated endpoints.
// The copies are labelled c + "-" and c + "+".
struct LinearCut {
  FiniteCyclicOrder base;
  Label cutpoint;
  std::vector<Label> order;  // c- first, c+ last

  FiniteCyclicOrder as_corder() const;  // standard c-order of the chain
};

Label minus_copy(const Label& l);
Label plus_copy(const Label& l);

LinearCut cut_at(const FiniteCyclicOrder& order, const Label& c);
FiniteCyclicOrder standard_corder_from_linear(const std::vector<Label>& seq);
FiniteCyclicOrder restore_from_cut(const LinearCut& cut);

// A cycle: distinct entries respect the cyclic order and equal entries are
// consecutive along one of the two index arcs.
bool is_cycle(const FiniteCyclicOrder& order, const std::vector<Label>& v);

struct PointMap {
  FiniteCyclicOrder domain;
  FiniteCyclicOrder codomain;
  std::unordered_map<Label, Label> map;

  PointMap(FiniteCyclicOrder dom, FiniteCyclicOrder cod,
           std::unordered_map<Label, Label> m);
  const Label& apply(const Label& l) const;
  static PointMap identity(const FiniteCyclicOrder& x);
};

// Projection q : X(c) -> X collapsing the duplicated endpoints.
PointMap cut_projection(const LinearCut& cut);

struct VerdictReport {
  bool cop = false;
  std::string reason;           // empty when cop
  std::vector<Label> witness;   // offending triple or pair (preimages)
};

// c-order preservation: betweenness respected on triples with distinct
// images, and any two points with equal image bound an interval on which the
// map is constant.
VerdictReport is_cop(const PointMap& f);

PointMap compose_cop(const PointMap& f, const PointMap& g);  // g after f

// Ground K x L listed lexicographically; product labels are concatenations.
FiniteCyclicOrder lex_product(const FiniteCyclicOrder& k_factor,
                              const std::vector<Label>& linear_factor);

}  // namespace cyclord
