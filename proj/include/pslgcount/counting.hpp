#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslgcount/oracle.hpp"
#include "pslgcount/pslg.hpp"

namespace pslgcount {

class CycleError : public std::runtime_error {
 public:
  CycleError(std::vector<VertexId> cycle, const std::string& what)
      : std::runtime_error(what), cycle_(std::move(cycle)) {}
  const std::vector<VertexId>& cycle() const { return cycle_; }

 private:
  std::vector<VertexId> cycle_;
};

// ---------------------------------------------------------------------------
// DAG helpers
// ---------------------------------------------------------------------------

using Adjacency = std::vector<std::vector<VertexId>>;

/// Topological order of a digraph, or throws CycleError naming one directed cycle.
inline std::vector<VertexId> topological_order(const Adjacency& out) {
  const auto n = static_cast<VertexId>(out.size());
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<VertexId> parent(n, -1), post;
  post.reserve(n);
  for (VertexId root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < out[v].size()) {
        VertexId w = out[v][i++];
        if (state[w] == 1) {
          std::vector<VertexId> cycle{w};
          for (VertexId x = v; x != w; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin() + 1, cycle.end());
          std::string msg = "directed cycle:";
          for (VertexId x : cycle) msg += " " + std::to_string(x);
          throw CycleError(cycle, msg);
        }
        if (state[w] == 0) {
          state[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        state[v] = 2;
        post.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::reverse(post.begin(), post.end());
  return post;
}

/// Edges of g that are strictly positive in direction u, as out-adjacency.
inline Adjacency orient_by_direction(const Pslg& g, const Vec2& u) {
  Adjacency out(g.n());
  for (const auto& e : g.edges) {
    int s = dot_sign(g.edge_vector(e), u);
    if (s > 0) out[e.first].push_back(e.second);
    else if (s < 0) out[e.second].push_back(e.first);
  }
  return out;
}

/// The directed PSLG induced by direction u; edges perpendicular to u are dropped.
inline Pslg directed_by(const Pslg& g, const Vec2& u) {
  Pslg d{g.points, {}, true};
  auto out = orient_by_direction(g, u);
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v)
    for (VertexId w : out[v]) d.edges.emplace_back(v, w);
  return d;
}

namespace detail {

// Order by projection onto u, ties by projection onto u-perp, then id.
inline std::vector<VertexId> projection_order(const Pslg& g, const Vec2& u) {
  std::vector<VertexId> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> along(g.n()), across(g.n());
  const Vec2 w = u.perp();
  for (std::size_t i = 0; i < g.n(); ++i) {
    Vec2 p{g.points[i].x, g.points[i].y};
    along[i] = dot(p, u);
    across[i] = dot(p, w);
  }
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (int c = cmp(along[a], along[b])) return c < 0;
    if (int c = cmp(across[a], across[b])) return c < 0;
    return a < b;
  });
  return order;
}

// Number of paths with >= 1 edge ending at each vertex, restricted to starts where
// `may_start` holds. Vertices must be given in topological order.
inline std::vector<Count> paths_ending_at(const Adjacency& out, const std::vector<VertexId>& topo,
                                          const std::vector<char>& may_start) {
  std::vector<Count> ending(out.size());
  for (VertexId v : topo) {
    Count carry = ending[v];
    if (may_start[v]) carry += 1;
    if (sgn(carry) == 0) continue;
    for (VertexId w : out[v]) ending[w] += carry;
  }
  return ending;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Monotone paths
// ---------------------------------------------------------------------------

/// Number of u-monotone paths (>= 1 edge). Edges perpendicular to u are not monotone.
inline Count count_monotone_paths_in_direction(const Pslg& g, const Vec2& u) {
  if (u.is_zero()) throw PreconditionError("count_monotone_paths_in_direction: zero direction");
  auto out = orient_by_direction(g, u);
  auto order = detail::projection_order(g, u);
  auto ending = detail::paths_ending_at(out, order, std::vector<char>(g.n(), 1));
  return std::accumulate(ending.begin(), ending.end(), Count(0));
}

/// u-monotone paths that start at a vertex without incoming u-positive edges and
/// end at a vertex without outgoing ones.
inline Count count_maximal_monotone_in_direction(const Pslg& g, const Vec2& u) {
  if (u.is_zero()) throw PreconditionError("count_maximal_monotone_in_direction: zero direction");
  auto out = orient_by_direction(g, u);
  std::vector<char> has_in(g.n(), 0);
  for (const auto& targets : out)
    for (VertexId w : targets) has_in[w] = 1;
  std::vector<char> source(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) source[v] = !has_in[v];
  auto ending = detail::paths_ending_at(out, detail::projection_order(g, u), source);
  Count total = 0;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (out[v].empty()) total += ending[v];
  return total;
}

// ---------------------------------------------------------------------------
// Directed paths
// ---------------------------------------------------------------------------

/// Per-vertex count of directed paths (>= 1 edge) from any vertex in `sources`.
inline std::vector<Count> directed_paths_from(const Pslg& g, const std::vector<VertexId>& sources) {
  auto out = g.out_neighbors();
  auto topo = topological_order(out);
  std::vector<char> start(g.n(), 0);
  for (VertexId s : sources) start.at(s) = 1;
  return detail::paths_ending_at(out, topo, start);
}

/// Directed paths with >= 1 edge from a vertex of S to a vertex of T.
inline Count count_directed_st_paths(const Pslg& g, const std::vector<VertexId>& S, const std::vector<VertexId>& T) {
  if (!g.directed) throw PreconditionError("count_directed_st_paths: graph is not directed");
  if (S.empty() || T.empty()) throw PreconditionError("count_directed_st_paths: empty source or target set");
  auto ending = directed_paths_from(g, S);
  std::set<VertexId> targets(T.begin(), T.end());
  Count total = 0;
  for (VertexId t : targets) total += ending.at(t);
  return total;
}

/// All directed simple paths with >= 1 edge. Acyclic graphs use dynamic programming;
/// cyclic graphs fall back to exhaustive enumeration when n <= oracle_limit.
inline Count count_directed_paths_total(const Pslg& g, std::size_t oracle_limit = oracle::kDefaultLimit) {
  if (!g.directed) throw PreconditionError("count_directed_paths_total: graph is not directed");
  auto out = g.out_neighbors();
  std::vector<VertexId> topo;
  try {
    topo = topological_order(out);
  } catch (const CycleError& e) {
    if (g.n() > oracle_limit)
      throw PreconditionError(std::string("count_directed_paths_total: cyclic graph above oracle limit (") + e.what() + ")");
    return oracle::count_directed_paths(g, oracle_limit);
  }
  auto ending = detail::paths_ending_at(out, topo, std::vector<char>(g.n(), 1));
  return std::accumulate(ending.begin(), ending.end(), Count(0));
}

// ---------------------------------------------------------------------------
// Monotone paths over all directions
// ---------------------------------------------------------------------------

/// An open arc of directions on which every edge has a fixed sign against u.
struct DirectionClass {
  Vec2 representative;
  std::optional<Vec2> boundary;  // critical direction closing the arc counter-clockwise
};

/// Normals of all edge directions (both senses), sorted counter-clockwise, deduplicated.
inline std::vector<Vec2> critical_directions(const Pslg& g) {
  std::vector<Vec2> normals;
  normals.reserve(2 * g.m());
  for (const auto& e : g.edges) {
    Vec2 nrm = g.edge_vector(e).perp();
    normals.push_back(nrm);
    normals.push_back(-nrm);
  }
  std::sort(normals.begin(), normals.end(), angle_less);
  std::vector<Vec2> unique;
  for (auto& v : normals)
    if (unique.empty() || !same_direction(unique.back(), v)) unique.push_back(std::move(v));
  if (unique.size() > 1 && same_direction(unique.front(), unique.back())) unique.pop_back();
  return unique;
}

inline std::vector<DirectionClass> critical_direction_classes(const Pslg& g) {
  auto crit = critical_directions(g);
  std::vector<DirectionClass> classes;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const Vec2& a = crit[i];
    const Vec2& b = crit[(i + 1) % crit.size()];
    // Critical directions come in opposite pairs, so every gap is at most pi.
    Vec2 rep = sgn(cross(a, b)) > 0 ? a + b : a.perp();
    classes.push_back({std::move(rep), b});
  }
  return classes;
}

/// Distinct undirected paths (>= 1 edge) monotone in at least one direction.
///
/// Each traversal-oriented monotone path is monotone exactly on an open arc whose
/// endpoints are critical directions; summing N over class representatives and
/// subtracting N at interior critical directions counts it once. Both traversal
/// orientations are counted, hence the final halving.
inline Count count_monotone_paths_all_directions(const Pslg& g) {
  Count total = 0;
  for (const auto& cls : critical_direction_classes(g)) {
    total += count_monotone_paths_in_direction(g, cls.representative);
    total -= count_monotone_paths_in_direction(g, *cls.boundary);
  }
  if (mpz_even_p(total.get_mpz_t()) == 0)
    throw std::logic_error("count_monotone_paths_all_directions: odd oriented total");
  return total / 2;
}

// ---------------------------------------------------------------------------
// Star-shaped polygons about a fixed center
// ---------------------------------------------------------------------------

/// Checks that o can serve as a center: not a vertex, not on any edge's supporting line.
inline void require_valid_center(const Pslg& g, const Point& o) {
  for (std::size_t v = 0; v < g.n(); ++v)
    if (g.points[v] == o) throw PreconditionError("star center coincides with vertex " + std::to_string(v));
  for (const auto& e : g.edges)
    if (orient(o, g.points[e.first], g.points[e.second]) == Orientation::COLLINEAR)
      throw PreconditionError("star center lies on the supporting line of edge " + detail::edge_str(e));
}

/// Directions from o to the vertices, grouped into distinct rays in CCW order.
inline std::vector<Vec2> vertex_rays(const Pslg& g, const Point& o) {
  std::vector<Vec2> dirs;
  for (const auto& p : g.points) dirs.push_back(p - o);
  std::sort(dirs.begin(), dirs.end(), angle_less);
  std::vector<Vec2> rays;
  for (auto& d : dirs)
    if (rays.empty() || !same_direction(rays.back(), d)) rays.push_back(std::move(d));
  return rays;
}

/// A cutting ray from o passing strictly between the `gap`-th and next vertex rays.
inline Vec2 cutting_ray(const Pslg& g, const Point& o, std::size_t gap = 0) {
  auto rays = vertex_rays(g, o);
  if (rays.empty()) return Vec2{1, 0};
  if (rays.size() == 1) return -rays[0];
  const Vec2& a = rays[gap % rays.size()];
  const Vec2& b = rays[(gap + 1) % rays.size()];
  int s = sgn(cross(a, b));
  if (s > 0) return a + b;
  if (s == 0) return a.perp();
  return -(a + b);
}

/// Number of simple cycles that are star-shaped with center o.
///
/// Edges are oriented clockwise about o. Every directed cycle winds once around o and
/// crosses the cutting ray exactly once, so the count is the sum over ray-crossing
/// edges a->b of the directed b->a paths in the acyclic remainder.
inline Count count_star_at_center(const Pslg& g, const Point& o, std::size_t ray_gap = 0) {
  require_valid_center(g, o);
  const Vec2 ray = cutting_ray(g, o, ray_gap);

  // Clockwise position from the ray: descending counter-clockwise angle in the ray frame.
  std::vector<Vec2> rel(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    Vec2 d = g.points[v] - o;
    rel[v] = Vec2{dot(ray, d), cross(ray, d)};
  }
  auto cw_before = [&](VertexId a, VertexId b) { return angle_less(rel[b], rel[a]); };

  Adjacency dag(g.n());
  std::vector<Edge> crossing;
  for (const auto& e : g.edges) {
    VertexId a = e.first, b = e.second;
    if (orient(o, g.points[a], g.points[b]) != Orientation::CW) std::swap(a, b);
    if (cw_before(b, a)) crossing.emplace_back(a, b);
    else dag[a].push_back(b);
  }

  std::vector<VertexId> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), cw_before);

  std::map<VertexId, std::vector<Count>> from;
  Count total = 0;
  for (auto [a, b] : crossing) {
    auto it = from.find(b);
    if (it == from.end()) {
      std::vector<char> start(g.n(), 0);
      start[b] = 1;
      it = from.emplace(b, detail::paths_ending_at(dag, order, start)).first;
    }
    total += it->second[a];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Convex polygons
// ---------------------------------------------------------------------------

namespace detail {

// Turning-angle key for edges of a counter-clockwise convex polygon that starts at its
// lexicographically smallest vertex: angles measured from straight down, in (0, 2pi],
// with straight down itself last.
inline bool turn_key_less(const Vec2& d1, const Vec2& d2) {
  auto is_down = [](const Vec2& d) { return sgn(d.dx) == 0 && sgn(d.dy) < 0; };
  if (is_down(d1) || is_down(d2)) return !is_down(d1) && is_down(d2);
  return angle_less(d1.perp(), d2.perp());
}

}  // namespace detail

/// Number of simple cycles whose vertices bound a strictly convex polygon.
inline Count count_convex_polygons(const Pslg& g) {
  const auto n = static_cast<VertexId>(g.n());
  auto adj = g.neighbors();
  Count total = 0;

  for (VertexId b = 0; b < n; ++b) {
    auto above = [&](VertexId v) { return g.points[b] < g.points[v]; };

    // Directed edges among vertices lexicographically above b, sorted by turning key.
    struct DirEdge {
      VertexId from, to;
      Vec2 dir;
    };
    std::vector<DirEdge> mids;
    for (const auto& e : g.edges) {
      if (!above(e.first) || !above(e.second)) continue;
      mids.push_back({e.first, e.second, g.edge_vector(e)});
      mids.push_back({e.second, e.first, -g.edge_vector(e)});
    }
    if (mids.empty()) continue;
    std::sort(mids.begin(), mids.end(), [](const DirEdge& l, const DirEdge& r) { return detail::turn_key_less(l.dir, r.dir); });
    std::vector<std::vector<std::size_t>> leaving(n);
    for (std::size_t i = 0; i < mids.size(); ++i) leaving[mids[i].from].push_back(i);
    std::vector<char> closes(n, 0);
    for (VertexId v : adj[b]) closes[v] = above(v);

    auto extends = [](const Vec2& prev, const Vec2& next) {
      return detail::turn_key_less(prev, next) && sgn(cross(prev, next)) > 0;
    };

    for (VertexId x : adj[b]) {
      if (!above(x)) continue;
      const Vec2 first = g.points[x] - g.points[b];
      std::vector<Count> ways(mids.size());
      for (std::size_t i : leaving[x])
        if (extends(first, mids[i].dir)) ways[i] = 1;
      for (std::size_t i = 0; i < mids.size(); ++i) {
        if (sgn(ways[i]) == 0) continue;
        const DirEdge& e = mids[i];
        for (std::size_t j : leaving[e.to])
          if (extends(e.dir, mids[j].dir)) ways[j] += ways[i];
        if (closes[e.to] && e.to != x) {
          Vec2 last = g.points[b] - g.points[e.to];
          if (extends(e.dir, last) && sgn(cross(last, first)) > 0) total += ways[i];
        }
      }
    }
  }
  return total;
}

/// Interior edges of an edge-maximal PSLG whose two incident triangles form a
/// strictly convex quadrilateral.
inline Count count_convex_pairs(const Pslg& g) {
  auto info = analyze_triangulation(g);
  if (!info.is_edge_maximal) throw PreconditionError("count_convex_pairs: graph is not edge-maximal");
  std::map<Edge, std::vector<VertexId>> apex;
  for (const auto& f : info.bounded_faces) {
    for (std::size_t i = 0; i < 3; ++i) {
      VertexId u = f[i], v = f[(i + 1) % 3];
      apex[{std::min(u, v), std::max(u, v)}].push_back(f[(i + 2) % 3]);
    }
  }
  Count total = 0;
  for (const auto& [e, thirds] : apex) {
    if (thirds.size() != 2) continue;
    Segment diag{g.points[e.first], g.points[e.second]};
    Segment other{g.points[thirds[0]], g.points[thirds[1]]};
    if (segment_relation(diag, other) == SegmentRelation::CROSSING) total += 1;
  }
  return total;
}

}  // namespace pslgcount
