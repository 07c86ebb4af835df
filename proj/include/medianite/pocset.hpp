#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "medianite/bits.hpp"
#include "medianite/errors.hpp"

namespace medianite {

/// Elements are identified by ids in [0, 2*walls): id 2w is the positive
/// side of wall w, id 2w+1 its complement. The two trivial elements are not
/// stored; every stored element is proper.
using Element = int;

inline Element star(Element e) { return e ^ 1; }
inline int wall_of(Element e) { return e >> 1; }
inline bool positive(Element e) { return (e & 1) == 0; }
inline Element pos_element(int wall) { return 2 * wall; }
inline Element neg_element(int wall) { return 2 * wall + 1; }

/// A finite poc set: a partial order on 2n proper halfspace elements with an
/// order-reversing involution, plus a nonnegative weight per wall. The order
/// is stored as its full reflexive-transitive closure; construction validates
/// every axiom, so an invalid PocSet cannot exist. Immutable after
/// construction.
class PocSet {
 public:
  PocSet() = default;

  /// Closes the generator relations (together with their involution images)
  /// and validates. Relations are pairs (a, b) meaning a <= b.
  /// Empty `weights` means unit weights; a partial map is a MissingWeight.
  static PocSet from_generators(int n_walls,
                                std::span<const std::pair<Element, Element>> relations,
                                std::vector<double> weights = {},
                                std::vector<std::string> labels = {});

  /// k totally ordered walls a0 < a1 < ... < a{k-1} (positive sides).
  static PocSet linear(int k, std::vector<double> weights = {});

  /// One wall per tree edge, ordered by containment of the components of
  /// T - e. The result is nested. Edge (u, v): the positive side is the
  /// component of v.
  static PocSet from_tree(std::span<const std::pair<int, int>> edges);

  /// The seven-wall family on four points A..D: singleton walls of weight
  /// 1-t and the three A-pairs of weight t. Its dual is a 3-cube with four
  /// pendant edges.
  static PocSet xt(double t);

  int walls() const { return n_; }
  int elements() const { return 2 * n_; }

  bool leq(Element a, Element b) const { return rows_[a].test(b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }

  /// True iff one of a<=b, a*<=b, a<=b*, a*<=b* holds. A pair on the same
  /// wall is improper and reports nested by convention.
  bool nested(Element a, Element b) const;

  /// Negation of nested. Throws SameWall for a pair on one wall.
  bool transverse(Element a, Element b) const;

  double weight(int wall) const { return weights_[wall]; }
  const std::vector<double>& weights() const { return weights_; }
  bool unit_weights() const;

  /// Same order and walls, different weights.
  PocSet with_weights(std::vector<double> weights) const;

  const std::string& label(int wall) const { return labels_[wall]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string element_name(Element e) const;

  /// Row of the closure matrix: all b with a <= b.
  const Bits& ups(Element a) const { return rows_[a]; }

  /// Drops zero-weight walls. Returns the reduced poc set and the wall map
  /// old -> new (nullopt for dropped walls).
  std::pair<PocSet, std::vector<std::optional<int>>> reduce_degenerate() const;

  bool operator==(const PocSet& o) const {
    return n_ == o.n_ && rows_ == o.rows_ && weights_ == o.weights_;
  }

  /// Internal: adopt an already transitively closed matrix. Validates the
  /// axioms but not closure.
  static PocSet from_closed(int n_walls, std::vector<Bits> rows,
                            std::vector<double> weights,
                            std::vector<std::string> labels);

 private:
  void validate() const;
  void finish_labels();

  int n_ = 0;
  std::vector<Bits> rows_;         // rows_[a].test(b)  <=>  a <= b
  std::vector<double> weights_;    // per wall
  std::vector<std::string> labels_;
};

/// Disjoint union of walls with no cross relations; every element of p is
/// transverse to every element of q. The dual is the box product of the duals.
PocSet wedge_sum(const PocSet& p, const PocSet& q);

}  // namespace medianite
