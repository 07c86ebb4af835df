#include "medianite/pocset.hpp"

#include <algorithm>
#include <cmath>

namespace medianite {

namespace {

// Reflexive-transitive closure via bit-parallel Floyd-Warshall.
void close(std::vector<Bits>& rows) {
  const int m = int(rows.size());
  for (int i = 0; i < m; ++i) rows[i].set(i);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (i != k && rows[i].test(k)) rows[i] |= rows[k];
}

}  // namespace

void PocSet::validate() const {
  const int m = elements();
  for (Element a = 0; a < m; ++a) {
    if (leq(a, star(a)))
      throw AxiomViolation(AxiomViolation::Kind::dagger, a, star(a),
                           "dagger violation: " + element_name(a) + " <= " +
                               element_name(star(a)));
  }
  for (Element a = 0; a < m; ++a) {
    for (Element b = a + 1; b < m; ++b) {
      if (leq(a, b) && leq(b, a))
        throw AxiomViolation(AxiomViolation::Kind::antisymmetry, a, b,
                             "antisymmetry violation: " + element_name(a) +
                                 " and " + element_name(b) + " collapse");
    }
  }
  // Involution must reverse the order.
  for (Element a = 0; a < m; ++a)
    for (Element b = 0; b < m; ++b)
      if (leq(a, b) != leq(star(b), star(a)))
        throw AxiomViolation(AxiomViolation::Kind::degenerate_pair, a, b,
                             "involution is not order-reversing at (" +
                                 element_name(a) + ", " + element_name(b) + ")");
  // At most one nesting relation per proper pair. Given the checks above this
  // is unreachable, but it is the axiom stated for pairs, so check it.
  for (int w1 = 0; w1 < n_; ++w1) {
    for (int w2 = w1 + 1; w2 < n_; ++w2) {
      Element a = pos_element(w1), b = pos_element(w2);
      int k = int(leq(a, b)) + int(leq(star(a), b)) + int(leq(a, star(b))) +
              int(leq(star(a), star(b)));
      if (k > 1)
        throw AxiomViolation(AxiomViolation::Kind::degenerate_pair, a, b,
                             "pair (" + element_name(a) + ", " + element_name(b) +
                                 ") satisfies " + std::to_string(k) +
                                 " nesting relations");
    }
  }
  for (int w = 0; w < n_; ++w)
    if (!(weights_[w] >= 0.0))
      throw Error("negative weight on wall " + labels_[w]);
}

void PocSet::finish_labels() {
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int w = 0; w < n_; ++w) labels_[w] = "w" + std::to_string(w);
  }
  if (int(labels_.size()) != n_) throw Error("label count does not match wall count");
}

std::string PocSet::element_name(Element e) const {
  return positive(e) ? labels_[wall_of(e)] : labels_[wall_of(e)] + "*";
}

PocSet PocSet::from_generators(int n_walls,
                               std::span<const std::pair<Element, Element>> relations,
                               std::vector<double> weights,
                               std::vector<std::string> labels) {
  PocSet p;
  p.n_ = n_walls;
  p.rows_.assign(2 * n_walls, Bits(2 * n_walls));
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= 2 * n_walls || b >= 2 * n_walls)
      throw Error("relation references an element out of range");
    p.rows_[a].set(b);
    p.rows_[star(b)].set(star(a));
  }
  close(p.rows_);
  if (weights.empty()) {
    p.weights_.assign(n_walls, 1.0);
  } else {
    if (int(weights.size()) != n_walls)
      throw MissingWeight(int(weights.size()),
                          "weights cover " + std::to_string(weights.size()) +
                              " of " + std::to_string(n_walls) + " walls");
    p.weights_ = std::move(weights);
  }
  p.labels_ = std::move(labels);
  p.finish_labels();
  p.validate();
  return p;
}

PocSet PocSet::from_closed(int n_walls, std::vector<Bits> rows,
                           std::vector<double> weights,
                           std::vector<std::string> labels) {
  PocSet p;
  p.n_ = n_walls;
  p.rows_ = std::move(rows);
  p.weights_ = std::move(weights);
  p.labels_ = std::move(labels);
  p.finish_labels();
  p.validate();
  return p;
}

PocSet PocSet::linear(int k, std::vector<double> weights) {
  std::vector<std::pair<Element, Element>> rels;
  for (int i = 0; i + 1 < k; ++i) rels.emplace_back(pos_element(i), pos_element(i + 1));
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = "a" + std::to_string(i + 1);
  return from_generators(k, rels, std::move(weights), std::move(labels));
}

PocSet PocSet::from_tree(std::span<const std::pair<int, int>> edges) {
  int n_nodes = 0;
  for (auto [u, v] : edges) n_nodes = std::max({n_nodes, u + 1, v + 1});
  const int n_edges = int(edges.size());
  if (n_edges == 0) return from_generators(0, {});
  if (n_edges != n_nodes - 1) throw NotATree("edge count is not node count - 1");

  // Component of v after deleting edge e, as a node bitmask per edge side.
  std::vector<std::vector<int>> adj(n_nodes);
  for (int e = 0; e < n_edges; ++e) {
    adj[edges[e].first].push_back(e);
    adj[edges[e].second].push_back(e);
  }
  auto component = [&](int start, int banned_edge) {
    Bits seen(n_nodes);
    std::vector<int> stack{start};
    seen.set(start);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e : adj[u]) {
        if (e == banned_edge) continue;
        int w = edges[e].first == u ? edges[e].second : edges[e].first;
        if (!seen.test(w)) {
          seen.set(w);
          stack.push_back(w);
        }
      }
    }
    return seen;
  };
  // Connectivity check: without deleting anything we must reach every node.
  if (component(0, -1).count() != n_nodes) throw NotATree("tree is not connected");

  std::vector<Bits> side(2 * n_edges);
  for (int e = 0; e < n_edges; ++e) {
    side[pos_element(e)] = component(edges[e].second, e);
    side[neg_element(e)] = component(edges[e].first, e);
    if (side[pos_element(e)].count() + side[neg_element(e)].count() != n_nodes)
      throw NotATree("edge lies on a cycle");
  }
  auto subset = [&](const Bits& x, const Bits& y) {
    for (std::size_t w = 0; w < x.words().size(); ++w)
      if (x.words()[w] & ~y.words()[w]) return false;
    return true;
  };
  std::vector<std::pair<Element, Element>> rels;
  for (Element a = 0; a < 2 * n_edges; ++a)
    for (Element b = 0; b < 2 * n_edges; ++b)
      if (wall_of(a) != wall_of(b) && subset(side[a], side[b])) rels.emplace_back(a, b);
  std::vector<std::string> labels(n_edges);
  for (int e = 0; e < n_edges; ++e) labels[e] = "e" + std::to_string(e);
  return from_generators(n_edges, rels, {}, std::move(labels));
}

PocSet PocSet::xt(double t) {
  if (t < 0.0 || t > 1.0) throw Error("xt parameter must lie in [0, 1]");
  // Walls as subsets of {A,B,C,D}, encoded in 4 bits.
  const int sets[7] = {1, 2, 4, 8, 3, 5, 9};  // {A},{B},{C},{D},{A,B},{A,C},{A,D}
  const std::string names[7] = {"A", "B", "C", "D", "AB", "AC", "AD"};
  auto set_of = [&](Element e) {
    int s = sets[wall_of(e)];
    return positive(e) ? s : 15 ^ s;
  };
  std::vector<std::pair<Element, Element>> rels;
  for (Element a = 0; a < 14; ++a)
    for (Element b = 0; b < 14; ++b)
      if (wall_of(a) != wall_of(b) && (set_of(a) & ~set_of(b)) == 0) rels.emplace_back(a, b);
  std::vector<double> w(7);
  for (int i = 0; i < 7; ++i) w[i] = (i < 4) ? 1.0 - t : t;
  return from_generators(7, rels, std::move(w),
                         std::vector<std::string>(names, names + 7));
}

bool PocSet::nested(Element a, Element b) const {
  if (wall_of(a) == wall_of(b)) return true;
  return leq(a, b) || leq(star(a), b) || leq(a, star(b)) || leq(star(a), star(b));
}

bool PocSet::transverse(Element a, Element b) const {
  if (wall_of(a) == wall_of(b))
    throw SameWall("transverse is undefined on one wall: " + element_name(a) +
                   " vs " + element_name(b));
  return !nested(a, b);
}

bool PocSet::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](double w) { return w == 1.0; });
}

PocSet PocSet::with_weights(std::vector<double> weights) const {
  if (int(weights.size()) != n_)
    throw MissingWeight(int(weights.size()), "weight vector has wrong length");
  PocSet p = *this;
  p.weights_ = std::move(weights);
  p.validate();
  return p;
}

std::pair<PocSet, std::vector<std::optional<int>>> PocSet::reduce_degenerate() const {
  std::vector<std::optional<int>> map(n_);
  std::vector<int> keep;
  for (int w = 0; w < n_; ++w) {
    if (weights_[w] > 0.0) {
      map[w] = int(keep.size());
      keep.push_back(w);
    }
  }
  const int k = int(keep.size());
  std::vector<Bits> rows(2 * k, Bits(2 * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj)
          if (leq(2 * keep[i] + si, 2 * keep[j] + sj)) rows[2 * i + si].set(2 * j + sj);
  std::vector<double> w(k);
  std::vector<std::string> lab(k);
  for (int i = 0; i < k; ++i) {
    w[i] = weights_[keep[i]];
    lab[i] = labels_[keep[i]];
  }
  return {from_closed(k, std::move(rows), std::move(w), std::move(lab)), std::move(map)};
}

PocSet wedge_sum(const PocSet& p, const PocSet& q) {
  const int n = p.walls() + q.walls();
  std::vector<std::pair<Element, Element>> rels;
  for (Element a = 0; a < p.elements(); ++a)
    for (Element b = 0; b < p.elements(); ++b)
      if (a != b && p.leq(a, b)) rels.emplace_back(a, b);
  const int off = p.elements();
  for (Element a = 0; a < q.elements(); ++a)
    for (Element b = 0; b < q.elements(); ++b)
      if (a != b && q.leq(a, b)) rels.emplace_back(a + off, b + off);
  std::vector<double> w;
  w.insert(w.end(), p.weights().begin(), p.weights().end());
  w.insert(w.end(), q.weights().begin(), q.weights().end());
  std::vector<std::string> labels;
  labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  for (const auto& l : q.labels()) {
    std::string name = l;
    if (std::find(labels.begin(), labels.end(), name) != labels.end())
      name += "'";
    labels.push_back(name);
  }
  return PocSet::from_generators(n, rels, std::move(w), std::move(labels));
}

}  // namespace medianite
