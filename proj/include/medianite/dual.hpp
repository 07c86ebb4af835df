#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "medianite/bits.hpp"
#include "medianite/pocset.hpp"

namespace medianite {

/// One side per wall: neg.test(w) means the starred side of wall w is chosen.
/// Coherence (no chosen pair with a <= b*) is not enforced by the type; it is
/// checked where vertices are produced.
struct Ultrafilter {
  Bits neg;

  Ultrafilter() = default;
  explicit Ultrafilter(int n_walls) : neg(n_walls) {}

  Element chosen(int wall) const { return 2 * wall + int(neg.test(wall)); }
  bool has(Element e) const { return chosen(wall_of(e)) == e; }
  int walls() const { return neg.size(); }

  bool operator==(const Ultrafilter& o) const { return neg == o.neg; }
  bool operator<(const Ultrafilter& o) const { return neg < o.neg; }

  /// Sign vector, wall 0 first: '+' for the positive side.
  std::string signs() const;
};

struct UltrafilterHash {
  std::size_t operator()(const Ultrafilter& u) const { return u.neg.hash(); }
};

bool is_coherent(const PocSet& p, const Ultrafilter& u);

/// Chosen elements with no chosen strict predecessor, ascending by wall.
std::vector<Element> min_elements(const PocSet& p, const Ultrafilter& u);

/// Replaces a by a*. Requires a chosen and minimal; throws NotMinimal.
Ultrafilter flip(const PocSet& p, const Ultrafilter& u, Element a);

/// Flips a set of pairwise transverse minimal elements at once (one cube
/// diagonal). The result is independent of the order of the flips.
Ultrafilter flip_set(const PocSet& p, const Ultrafilter& u, std::span<const Element> elems);

/// Deterministic coherent selection: walls in index order, positive side
/// unless already forced, propagating upward closure after each choice.
Ultrafilter greedy_seed(const PocSet& p);

enum class EnumMode { exhaustive, flip_bfs };

/// All ultrafilters of p in a deterministic order (ascending sign vectors).
/// Exhaustive mode scans all 2^n selections and is the oracle; it refuses to
/// run above `max_walls`. Flip-BFS explores from a seed and must agree.
std::vector<Ultrafilter> enumerate_ultrafilters(const PocSet& p,
                                                EnumMode mode = EnumMode::flip_bfs,
                                                int max_walls = 20);

/// A cube incident to `base`, spanned by a transverse subset of min(base).
struct CubeFace {
  Ultrafilter base;
  std::vector<int> spanned_walls;
};

/// One face per transverse subset of min(u) of size <= max_dim (the empty
/// face included).
std::vector<CubeFace> cubes_at_vertex(const PocSet& p, const Ultrafilter& u, int max_dim);

/// All 2^k corner vertices of a face, ascending.
std::vector<Ultrafilter> cube_corners(const PocSet& p, const CubeFace& face);

/// The dual complex: vertices are ultrafilters, edges join vertices that
/// differ on exactly one wall. Connected for a finite poc set.
class CubingGraph {
 public:
  struct Edge {
    int u, v;   // vertex indices, u < v
    int wall;   // the flipped wall
  };

  CubingGraph(PocSet p, std::vector<Ultrafilter> vertices);

  const PocSet& pocset() const { return p_; }
  int size() const { return int(verts_.size()); }
  const std::vector<Ultrafilter>& vertices() const { return verts_; }
  const Ultrafilter& vertex(int i) const { return verts_[i]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  int basepoint() const { return basepoint_; }

  /// Index of an ultrafilter, or -1.
  int index_of(const Ultrafilter& u) const;

 private:
  PocSet p_;
  std::vector<Ultrafilter> verts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<Bits, int, BitsHash> index_;
  int basepoint_ = 0;
};

CubingGraph build_cubing(const PocSet& p, int max_walls = 20);

/// A point of the weighted realization, relative to a basepoint vertex.
/// Sparse: walls absent from coords sit at 0 (the basepoint's side); a wall
/// at value w(wall) lies fully on the opposite side.
struct Point {
  Ultrafilter base;
  std::vector<std::pair<int, double>> coords;  // (wall, value), sorted by wall

  double at(int wall) const;
};

/// Vertex coordinates: 0 where u agrees with the basepoint, w(wall) where it
/// does not. The basepoint maps to the origin.
Point coordinates(const PocSet& p, const Ultrafilter& basepoint, const Ultrafilter& u);

/// A general point. Validates the range and that it lies in some cube of the
/// complex (fractional walls transverse, corner selections coherent).
Point make_point(const PocSet& p, const Ultrafilter& base,
                 std::vector<std::pair<int, double>> coords);

}  // namespace medianite
