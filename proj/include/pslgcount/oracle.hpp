#pragma once

// Brute-force enumerators used as ground truth for the counting module. Nothing here
// shares an algorithmic path with counting.hpp: every count is produced by listing
// witnesses one by one and testing each with exact predicates.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslgcount/pslg.hpp"

namespace pslgcount::oracle {

inline constexpr std::size_t kDefaultLimit = 12;

class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct PathWitness {
  std::vector<VertexId> vertices;
  std::optional<Vec2> valid_direction;
};

struct CycleWitness {
  std::vector<VertexId> vertices;
  std::optional<Point> kernel_point;
};

inline void check_limit(const Pslg& g, std::size_t limit, const char* what) {
  if (g.n() > limit)
    throw LimitError(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceeds oracle limit " +
                     std::to_string(limit));
}

namespace detail {

inline std::vector<std::vector<VertexId>> successors(const Pslg& g) {
  return g.directed ? g.out_neighbors() : g.neighbors();
}

}  // namespace detail

/// Visits every simple path with >= 1 edge once. Undirected paths are reported with
/// the smaller endpoint id first; directed paths follow edge directions.
inline void for_each_simple_path(const Pslg& g, const std::function<void(const std::vector<VertexId>&)>& visit,
                                 std::size_t limit = kDefaultLimit) {
  check_limit(g, limit, "enumerate_simple_paths");
  auto next = detail::successors(g);
  std::vector<char> on_path(g.n(), 0);
  std::vector<VertexId> path;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    for (VertexId w : next[v]) {
      if (on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      if (g.directed || path.front() < path.back()) visit(path);
      dfs(w);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (VertexId s = 0; s < static_cast<VertexId>(g.n()); ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(s);
    on_path[s] = 0;
  }
}

inline std::vector<PathWitness> enumerate_simple_paths(const Pslg& g, std::size_t limit = kDefaultLimit) {
  std::vector<PathWitness> out;
  for_each_simple_path(g, [&](const std::vector<VertexId>& p) { out.push_back({p, std::nullopt}); }, limit);
  return out;
}

/// Visits every simple cycle once. Undirected cycles start at their smallest vertex and
/// are reported in the orientation whose second vertex is smaller than the last.
inline void for_each_simple_cycle(const Pslg& g, const std::function<void(const std::vector<VertexId>&)>& visit,
                                  std::size_t limit = kDefaultLimit) {
  check_limit(g, limit, "enumerate_simple_cycles");
  auto next = detail::successors(g);
  std::vector<char> on_path(g.n(), 0);
  std::vector<VertexId> path;
  VertexId start = 0;
  std::function<void(VertexId)> dfs = [&](VertexId v) {
    for (VertexId w : next[v]) {
      if (w == start) {
        bool long_enough = g.directed ? path.size() >= 2 : path.size() >= 3;
        if (long_enough && (g.directed || path[1] < path.back())) visit(path);
        continue;
      }
      if (w < start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      dfs(w);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (start = 0; start < static_cast<VertexId>(g.n()); ++start) {
    path = {start};
    on_path[start] = 1;
    dfs(start);
    on_path[start] = 0;
  }
}

inline std::vector<CycleWitness> enumerate_simple_cycles(const Pslg& g, std::size_t limit = kDefaultLimit) {
  std::vector<CycleWitness> out;
  for_each_simple_cycle(g, [&](const std::vector<VertexId>& c) { out.push_back({c, std::nullopt}); }, limit);
  return out;
}

// ---------------------------------------------------------------------------
// Membership tests
// ---------------------------------------------------------------------------

/// A direction in which every traversal edge of the path is strictly positive.
inline std::optional<Vec2> is_monotone(const std::vector<VertexId>& path, const Pslg& g) {
  if (path.size() < 2) return std::nullopt;
  std::vector<HalfPlane> hs;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Vec2 e = g.points[path[i + 1]] - g.points[path[i]];
    hs.push_back({e.dx, e.dy, Rational(0)});
  }
  auto w = halfplane_intersection_witness(hs);
  if (!w) return std::nullopt;
  return Vec2{w->x, w->y};
}

inline std::optional<Vec2> is_monotone(const PathWitness& p, const Pslg& g) { return is_monotone(p.vertices, g); }

/// Inward open half-planes of the polygon, oriented counter-clockwise.
inline std::vector<HalfPlane> inward_halfplanes(const std::vector<VertexId>& cycle, const Pslg& g) {
  std::vector<VertexId> ccw = cycle;
  if (sgn(signed_area2(g, ccw)) < 0) std::reverse(ccw.begin(), ccw.end());
  std::vector<HalfPlane> hs;
  for (std::size_t i = 0; i < ccw.size(); ++i)
    hs.push_back(HalfPlane::left_of(g.points[ccw[i]], g.points[ccw[(i + 1) % ccw.size()]]));
  return hs;
}

/// A point of the open kernel, or nullopt. Polygons whose kernel is only a boundary
/// set are not star-shaped.
inline std::optional<Point> is_star_shaped(const std::vector<VertexId>& cycle, const Pslg& g) {
  return halfplane_intersection_witness(inward_halfplanes(cycle, g));
}

inline std::optional<Point> is_star_shaped(const CycleWitness& c, const Pslg& g) { return is_star_shaped(c.vertices, g); }

inline bool is_convex(const std::vector<VertexId>& cycle, const Pslg& g) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  Orientation first = orient(g.points[cycle[0]], g.points[cycle[1]], g.points[cycle[2 % k]]);
  if (first == Orientation::COLLINEAR) return false;
  for (std::size_t i = 1; i < k; ++i)
    if (orient(g.points[cycle[i]], g.points[cycle[(i + 1) % k]], g.points[cycle[(i + 2) % k]]) != first) return false;
  return true;
}

inline bool is_convex(const CycleWitness& c, const Pslg& g) { return is_convex(c.vertices, g); }

inline bool kernel_contains(const std::vector<VertexId>& cycle, const Pslg& g, const Point& o) {
  for (const auto& h : inward_halfplanes(cycle, g))
    if (!h.contains(o)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Counts by enumeration
// ---------------------------------------------------------------------------

inline Count count_monotone_in_direction(const Pslg& g, const Vec2& u, std::size_t limit = kDefaultLimit) {
  Count total = 0;
  auto positive = [&](const std::vector<VertexId>& p, bool reversed) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      Vec2 e = g.points[p[i + 1]] - g.points[p[i]];
      if (dot_sign(e, u) * (reversed ? -1 : 1) <= 0) return false;
    }
    return true;
  };
  for_each_simple_path(g, [&](const std::vector<VertexId>& p) {
    if (positive(p, false)) total += 1;
    if (!g.directed && positive(p, true)) total += 1;
  }, limit);
  return total;
}

inline Count count_maximal_monotone_in_direction(const Pslg& g, const Vec2& u, std::size_t limit = kDefaultLimit) {
  auto adj = g.neighbors();
  auto positive = [&](VertexId a, VertexId b) { return dot_sign(g.points[b] - g.points[a], u) > 0; };
  Count total = 0;
  auto check = [&](std::vector<VertexId> p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!positive(p[i], p[i + 1])) return;
    for (VertexId w : adj[p.front()])
      if (positive(w, p.front())) return;
    for (VertexId w : adj[p.back()])
      if (positive(p.back(), w)) return;
    total += 1;
  };
  for_each_simple_path(g, [&](const std::vector<VertexId>& p) {
    check(p);
    check(std::vector<VertexId>(p.rbegin(), p.rend()));
  }, limit);
  return total;
}

inline Count count_monotone_all_directions(const Pslg& g, std::size_t limit = kDefaultLimit) {
  Count total = 0;
  for_each_simple_path(g, [&](const std::vector<VertexId>& p) {
    if (is_monotone(p, g)) total += 1;
  }, limit);
  return total;
}

inline Count count_star_at_center(const Pslg& g, const Point& o, std::size_t limit = kDefaultLimit) {
  Count total = 0;
  for_each_simple_cycle(g, [&](const std::vector<VertexId>& c) {
    if (kernel_contains(c, g, o)) total += 1;
  }, limit);
  return total;
}

inline Count count_star_total(const Pslg& g, std::size_t limit = kDefaultLimit) {
  Count total = 0;
  for_each_simple_cycle(g, [&](const std::vector<VertexId>& c) {
    if (is_star_shaped(c, g)) total += 1;
  }, limit);
  return total;
}

inline Count count_convex_polygons(const Pslg& g, std::size_t limit = kDefaultLimit) {
  Count total = 0;
  for_each_simple_cycle(g, [&](const std::vector<VertexId>& c) {
    if (is_convex(c, g)) total += 1;
  }, limit);
  return total;
}

/// Convex quadrilateral cycles with an empty interior and one diagonal present; in an
/// edge-maximal graph these are exactly the convex unions of two adjacent triangles.
inline Count count_convex_pairs(const Pslg& g, std::size_t limit = kDefaultLimit) {
  std::set<Edge> edge_set;
  for (auto [a, b] : g.edges) edge_set.insert({std::min(a, b), std::max(a, b)});
  auto has_edge = [&](VertexId a, VertexId b) { return edge_set.count({std::min(a, b), std::max(a, b)}) > 0; };
  Count total = 0;
  for_each_simple_cycle(g, [&](const std::vector<VertexId>& c) {
    if (c.size() != 4 || !is_convex(c, g)) return;
    auto hs = inward_halfplanes(c, g);
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (std::find(c.begin(), c.end(), static_cast<VertexId>(v)) != c.end()) continue;
      if (std::all_of(hs.begin(), hs.end(), [&](const HalfPlane& h) { return h.contains(g.points[v]); })) return;
    }
    int diagonals = has_edge(c[0], c[2]) + has_edge(c[1], c[3]);
    if (diagonals == 1) total += 1;
  }, limit);
  return total;
}

inline Count count_directed_paths(const Pslg& g, std::size_t limit = kDefaultLimit) {
  if (!g.directed) throw std::invalid_argument("oracle::count_directed_paths: graph is not directed");
  Count total = 0;
  for_each_simple_path(g, [&](const std::vector<VertexId>&) { total += 1; }, limit);
  return total;
}

/// Every pair of non-adjacent vertices is blocked by an edge or a vertex.
inline bool is_edge_maximal_bruteforce(const Pslg& g) {
  std::set<Edge> edge_set;
  for (auto [a, b] : g.edges) edge_set.insert({std::min(a, b), std::max(a, b)});
  for (VertexId a = 0; a < static_cast<VertexId>(g.n()); ++a) {
    for (VertexId b = a + 1; b < static_cast<VertexId>(g.n()); ++b) {
      if (edge_set.count({a, b})) continue;
      Segment s{g.points[a], g.points[b]};
      bool blocked = false;
      for (VertexId v = 0; v < static_cast<VertexId>(g.n()) && !blocked; ++v)
        blocked = v != a && v != b && strictly_inside_segment(s.a, s.b, g.points[v]);
      for (std::size_t i = 0; i < g.m() && !blocked; ++i) {
        const auto& e = g.edges[i];
        auto rel = segment_relation(s, Segment{g.points[e.first], g.points[e.second]});
        blocked = rel == SegmentRelation::CROSSING || rel == SegmentRelation::OVERLAPPING || rel == SegmentRelation::TOUCHING;
      }
      if (!blocked) return false;
    }
  }
  return true;
}

/// Checks that every maximal monotone path ends at convex-hull vertices. Directions
/// tested: every edge normal and one direction strictly between each consecutive pair.
inline std::optional<PathWitness> check_maximal_endpoints_on_hull(const Pslg& g, std::size_t limit = kDefaultLimit) {
  std::vector<char> on_hull(g.n(), 0);
  for (VertexId v : convex_hull(g)) on_hull[v] = 1;

  std::vector<Vec2> normals;
  for (const auto& e : g.edges) {
    normals.push_back(g.edge_vector(e).perp());
    normals.push_back(-g.edge_vector(e).perp());
  }
  std::sort(normals.begin(), normals.end(), angle_less);
  normals.erase(std::unique(normals.begin(), normals.end(), same_direction), normals.end());
  std::vector<Vec2> dirs = normals;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Vec2& a = normals[i];
    const Vec2& b = normals[(i + 1) % normals.size()];
    dirs.push_back(sgn(cross(a, b)) > 0 ? a + b : a.perp());
  }

  auto adj = g.neighbors();
  std::optional<PathWitness> bad;
  auto check = [&](const std::vector<VertexId>& p) {
    for (const Vec2& u : dirs) {
      bool mono = true;
      for (std::size_t i = 0; i + 1 < p.size() && mono; ++i) mono = dot_sign(g.points[p[i + 1]] - g.points[p[i]], u) > 0;
      if (!mono) continue;
      bool extendable = false;
      for (VertexId w : adj[p.front()]) extendable = extendable || dot_sign(g.points[p.front()] - g.points[w], u) > 0;
      for (VertexId w : adj[p.back()]) extendable = extendable || dot_sign(g.points[w] - g.points[p.back()], u) > 0;
      if (!extendable && (!on_hull[p.front()] || !on_hull[p.back()])) {
        bad = PathWitness{p, u};
        return;
      }
    }
  };
  for_each_simple_path(g, [&](const std::vector<VertexId>& p) {
    if (bad) return;
    check(p);
    if (!bad) check(std::vector<VertexId>(p.rbegin(), p.rend()));
  }, limit);
  return bad;
}

}  // namespace pslgcount::oracle
