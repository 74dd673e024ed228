#include "dispheres/grid.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <numeric>
#include <string>

#include "dispheres/errors.hpp"

namespace dispheres::oracle {

namespace {

// Lattice tuples are enumerated through the packed index, so keep the full
// lattice at desk scale; the boundary subset is what gets stored.
constexpr std::uint64_t kMaxLatticeCells = 1u << 24;

bool pinned_other(std::span<const int> coords, std::size_t moving_axis, int m) {
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (j == moving_axis) continue;
    if (coords[j] == 0 || coords[j] == m) return true;
  }
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t size) : parent(size) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

GridGraph::GridGraph(std::size_t sphere_dimension, std::size_t resolution) {
  if (sphere_dimension < 1 || resolution < 1) {
    throw Error(ErrorCode::ParameterRange,
                "grid needs sphere dimension >= 1 and resolution >= 1");
  }
  dim_ = sphere_dimension + 1;
  m_ = static_cast<int>(resolution);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    total *= static_cast<std::uint64_t>(m_) + 1;
    if (total > kMaxLatticeCells) {
      throw Error(ErrorCode::CapExceeded,
                  "grid lattice guardrail: (m+1)^(n+1) exceeds " +
                      std::to_string(kMaxLatticeCells) + " cells");
    }
  }

  by_packed_.assign(total, VertexId{-1});
  std::vector<int> c(dim_, 0);
  for (std::uint64_t packed = 0; packed < total; ++packed) {
    bool boundary = false;
    for (std::size_t i = 0; i < dim_ && !boundary; ++i) boundary = c[i] == 0 || c[i] == m_;
    if (boundary) {
      by_packed_[packed] = static_cast<VertexId>(coords_.size() / dim_);
      coords_.insert(coords_.end(), c.begin(), c.end());
    }
    for (std::size_t i = 0; i < dim_; ++i) {  // odometer, coordinate 0 fastest
      if (++c[i] <= m_) break;
      c[i] = 0;
    }
  }

  const std::size_t vertices = coords_.size() / dim_;
  out_.resize(vertices);
  std::vector<int> step(dim_);
  for (std::size_t id = 0; id < vertices; ++id) {
    const std::span<const int> u(coords_.data() + id * dim_, dim_);
    for (std::size_t axis = 0; axis < dim_; ++axis) {
      if (u[axis] >= m_ || !pinned_other(u, axis, m_)) continue;
      std::copy(u.begin(), u.end(), step.begin());
      ++step[axis];
      const VertexId v = by_packed_[pack(step)];
      out_[id].push_back(v);
      ++edges_;
    }
  }
}

std::size_t GridGraph::pack(std::span<const int> coords) const {
  std::size_t packed = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    packed += static_cast<std::size_t>(coords[i]) * stride;
    stride *= static_cast<std::size_t>(m_) + 1;
  }
  return packed;
}

void GridGraph::check_id(VertexId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= vertex_count()) {
    throw Error(ErrorCode::BadInput, "vertex id " + std::to_string(id) + " out of range");
  }
}

std::span<const int> GridGraph::vertex(VertexId id) const {
  check_id(id);
  return {coords_.data() + static_cast<std::size_t>(id) * dim_, dim_};
}

std::optional<VertexId> GridGraph::find_vertex(std::span<const int> coords) const {
  if (coords.size() != dim_) return std::nullopt;
  for (int c : coords) {
    if (c < 0 || c > m_) return std::nullopt;
  }
  const VertexId id = by_packed_[pack(coords)];
  if (id < 0) return std::nullopt;
  return id;
}

VertexId GridGraph::vertex_id(std::span<const int> coords) const {
  const auto id = find_vertex(coords);
  if (!id) {
    std::string text = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i > 0) text += ",";
      text += std::to_string(coords[i]);
    }
    text += ")";
    throw Error(ErrorCode::BadInput, "not a boundary lattice vertex: " + text);
  }
  return *id;
}

const std::vector<VertexId>& GridGraph::successors(VertexId id) const {
  check_id(id);
  return out_[static_cast<std::size_t>(id)];
}

Point GridGraph::to_point(VertexId id) const {
  const std::span<const int> c = vertex(id);
  std::vector<Rat> coords;
  coords.reserve(dim_);
  for (int v : c) coords.push_back(rat(v, m_));
  return Point(std::move(coords));
}

GridGraph build_grid(std::size_t sphere_dimension, std::size_t resolution) {
  return GridGraph(sphere_dimension, resolution);
}

std::vector<char> reachable_from(const GridGraph& g, VertexId from) {
  g.vertex(from);  // id validation
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : g.successors(u)) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

bool oracle_reach(const GridGraph& g, VertexId from, VertexId to) {
  g.vertex(to);
  if (from == to) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<VertexId> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId v : g.successors(u)) {
      if (v == to) return true;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        queue.push_back(v);
      }
    }
  }
  return false;
}

bool oracle_reach(const GridGraph& g, std::span<const int> from, std::span<const int> to) {
  return oracle_reach(g, g.vertex_id(from), g.vertex_id(to));
}

std::vector<LatticeDipath> enumerate_dipaths(const GridGraph& g, VertexId from, VertexId to,
                                             std::size_t cap) {
  const std::span<const int> source = g.vertex(from);
  const std::span<const int> target = g.vertex(to);
  std::vector<LatticeDipath> paths;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (source[i] > target[i]) return paths;  // no monotone route exists
  }

  const std::size_t dims = g.coordinate_count();
  const int m = g.resolution();
  std::vector<int> cur(source.begin(), source.end());
  std::vector<VertexId> trail{from};

  auto dfs = [&](auto&& self) -> void {
    if (trail.back() == to) {
      paths.push_back(LatticeDipath{trail});
      if (paths.size() > cap) {
        throw Error(ErrorCode::CapExceeded,
                    "dipath enumeration explosion: more than " + std::to_string(cap) +
                        " paths (stopped at " + std::to_string(paths.size()) + ")");
      }
      return;
    }
    for (std::size_t axis = 0; axis < dims; ++axis) {
      if (cur[axis] >= target[axis] || !pinned_other(cur, axis, m)) continue;
      ++cur[axis];
      trail.push_back(g.vertex_id(cur));
      self(self);
      trail.pop_back();
      --cur[axis];
    }
  };
  dfs(dfs);
  return paths;
}

std::size_t dihomotopy_classes(const GridGraph& g, VertexId from, VertexId to, std::size_t cap) {
  const std::vector<LatticeDipath> paths = enumerate_dipaths(g, from, to, cap);
  if (paths.empty()) return 0;

  // step sequences, one per path; DFS order makes this list lexicographically
  // sorted, so swapped neighbours are found by binary search
  std::vector<std::vector<std::uint8_t>> steps(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& vs = paths[i].vertices;
    steps[i].reserve(vs.size() - 1);
    for (std::size_t q = 0; q + 1 < vs.size(); ++q) {
      const std::span<const int> a = g.vertex(vs[q]);
      const std::span<const int> b = g.vertex(vs[q + 1]);
      for (std::size_t i2 = 0; i2 < a.size(); ++i2) {
        if (a[i2] != b[i2]) {
          steps[i].push_back(static_cast<std::uint8_t>(i2));
          break;
        }
      }
    }
  }

  const int m = g.resolution();
  UnionFind classes(paths.size());
  std::vector<std::uint8_t> swapped;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t q = 0; q + 1 < steps[i].size(); ++q) {
      const std::uint8_t a = steps[i][q];
      const std::uint8_t b = steps[i][q + 1];
      if (a == b) continue;
      // the square spanned at the vertex before step q must lie on the boundary
      const std::span<const int> u = g.vertex(paths[i].vertices[q]);
      bool square_on_boundary = false;
      for (std::size_t k = 0; k < u.size() && !square_on_boundary; ++k) {
        if (k == a || k == b) continue;
        square_on_boundary = u[k] == 0 || u[k] == m;
      }
      if (!square_on_boundary) continue;
      swapped = steps[i];
      std::swap(swapped[q], swapped[q + 1]);
      // the swapped route runs along the same boundary square, so the
      // exhaustive enumeration must contain it
      const auto it = std::lower_bound(steps.begin(), steps.end(), swapped);
      if (it == steps.end() || *it != swapped) {
        throw std::logic_error("swapped route missing from exhaustive enumeration");
      }
      classes.unite(i, static_cast<std::size_t>(it - steps.begin()));
    }
  }

  std::size_t count = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (classes.find(i) == i) ++count;
  }
  return count;
}

bool verify_halfsquare_confinement(const GridGraph& g, int t_index, int x_index,
                                   std::size_t cap) {
  if (g.sphere_dimension() != 2) {
    throw Error(ErrorCode::ParameterRange, "half-square confinement is a 3-coordinate check");
  }
  const int m = g.resolution();
  if (t_index <= 0 || t_index >= m || x_index <= 0 || x_index >= m) {
    throw Error(ErrorCode::ParameterRange,
                "half-square confinement needs interior indices 0 < t,x < m");
  }
  // from (t,0,x): only the bottom edge then the right edge of the slice
  {
    const std::vector<int> from{t_index, 0, x_index};
    const std::vector<int> to{m, m, x_index};
    const auto paths = enumerate_dipaths(g, g.vertex_id(from), g.vertex_id(to), cap);
    if (paths.empty()) return false;
    for (const LatticeDipath& p : paths) {
      for (VertexId v : p.vertices) {
        const std::span<const int> c = g.vertex(v);
        if (c[2] != x_index || !(c[1] == 0 || c[0] == m)) return false;
      }
    }
  }
  // from (0,t,x): only the left edge then the top edge
  {
    const std::vector<int> from{0, t_index, x_index};
    const std::vector<int> to{m, m, x_index};
    const auto paths = enumerate_dipaths(g, g.vertex_id(from), g.vertex_id(to), cap);
    if (paths.empty()) return false;
    for (const LatticeDipath& p : paths) {
      for (VertexId v : p.vertices) {
        const std::span<const int> c = g.vertex(v);
        if (c[2] != x_index || !(c[0] == 0 || c[1] == m)) return false;
      }
    }
  }
  // the two t->0 limit routes pass through distinct midpoints
  const std::vector<int> mid_bottom{m, 0, x_index};
  const std::vector<int> mid_top{0, m, x_index};
  g.vertex_id(mid_bottom);
  g.vertex_id(mid_top);
  return mid_bottom != mid_top;
}

}  // namespace dispheres::oracle
