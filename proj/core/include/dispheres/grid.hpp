#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dispheres/point.hpp"

namespace dispheres::oracle {

using VertexId = std::int32_t;

/// Directed graph on the lattice points of the cube boundary at resolution m:
/// vertices are integer tuples in {0,...,m}^{n+1} with at least one
/// coordinate in {0,m}; an edge steps one coordinate by +1 and exists iff the
/// stepped segment keeps some other coordinate pinned at 0 or m. Every edge
/// raises the coordinate sum by one, so the graph is acyclic. Immutable after
/// construction; lookups are read-only.
class GridGraph {
 public:
  GridGraph(std::size_t sphere_dimension, std::size_t resolution);

  std::size_t sphere_dimension() const { return dim_ - 1; }  // n
  std::size_t coordinate_count() const { return dim_; }      // n + 1
  int resolution() const { return m_; }
  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const { return edges_; }

  std::span<const int> vertex(VertexId id) const;
  std::optional<VertexId> find_vertex(std::span<const int> coords) const;
  /// Like find_vertex but throws BadInput when the tuple is not a vertex.
  VertexId vertex_id(std::span<const int> coords) const;
  const std::vector<VertexId>& successors(VertexId id) const;

  /// The vertex as an exact rational point, coordinates k/m.
  Point to_point(VertexId id) const;

 private:
  std::size_t dim_ = 0;
  int m_ = 0;
  std::vector<int> coords_;                // flat, dim_ entries per vertex
  std::vector<std::vector<VertexId>> out_;
  std::vector<VertexId> by_packed_;        // (m+1)^dim_ lookup table, -1 = absent
  std::size_t edges_ = 0;

  std::size_t pack(std::span<const int> coords) const;
  void check_id(VertexId id) const;
};

GridGraph build_grid(std::size_t sphere_dimension, std::size_t resolution);

/// A walk along directed grid edges; empty steps (a single vertex) are the
/// constant path.
struct LatticeDipath {
  std::vector<VertexId> vertices;
};

/// BFS along directed edges.
bool oracle_reach(const GridGraph& g, VertexId from, VertexId to);
bool oracle_reach(const GridGraph& g, std::span<const int> from, std::span<const int> to);

/// Reachable set of one BFS, indexed by VertexId.
std::vector<char> reachable_from(const GridGraph& g, VertexId from);

/// All monotone boundary lattice paths from `from` to `to`, exhaustively, in
/// lexicographic step order (axes tried in increasing order at every vertex).
/// Throws CapExceeded when more than `cap` paths exist.
std::vector<LatticeDipath> enumerate_dipaths(const GridGraph& g, VertexId from, VertexId to,
                                             std::size_t cap);

/// Number of equivalence classes of the enumerated paths under swaps of two
/// consecutive steps in distinct axes, allowed iff the spanned unit square
/// lies on the cube boundary (some coordinate outside the two moving axes is
/// pinned at 0 or m). Union-find over the enumerated path set; 0 when the
/// pair is unreachable.
std::size_t dihomotopy_classes(const GridGraph& g, VertexId from, VertexId to, std::size_t cap);

/// For n = 2 and interior lattice indices 0 < t_index < m, 0 < x_index < m:
/// checks that every dipath from (t,0,x) to (m,m,x) stays in the bottom+right
/// half-square of the slice, that every dipath from (0,t,x) to (m,m,x) stays
/// in the left+top half-square, and that the two limiting routes through
/// (m,0,x) and (0,m,x) disagree.
bool verify_halfsquare_confinement(const GridGraph& g, int t_index, int x_index,
                                   std::size_t cap = 1'000'000);

}  // namespace dispheres::oracle
