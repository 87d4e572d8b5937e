#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pslgcount/geom.hpp"

namespace pslgcount {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/// Plane straight-line graph. Vertex ids are 0-based indices into `points`.
/// When `directed` is set, edge (i, j) means i -> j.
struct Pslg {
  std::vector<Point> points;
  std::vector<Edge> edges;
  bool directed = false;

  std::size_t n() const { return points.size(); }
  std::size_t m() const { return edges.size(); }

  Vec2 edge_vector(const Edge& e) const { return points[e.second] - points[e.first]; }

  /// Neighbor lists ignoring direction.
  std::vector<std::vector<VertexId>> neighbors() const {
    std::vector<std::vector<VertexId>> adj(n());
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  /// Out-neighbor lists; only meaningful for directed graphs.
  std::vector<std::vector<VertexId>> out_neighbors() const {
    std::vector<std::vector<VertexId>> adj(n());
    for (auto [u, v] : edges) adj[u].push_back(v);
    return adj;
  }

  friend bool operator==(const Pslg& a, const Pslg& b) {
    return a.directed == b.directed && a.points == b.points && a.edges == b.edges;
  }
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class ViolationKind {
  INDEX_OUT_OF_RANGE,
  SELF_LOOP,
  DUPLICATE_EDGE,
  DUPLICATE_POINT,
  CROSSING,
  OVERLAPPING,
  TOUCHING,
  VERTEX_ON_EDGE,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::INDEX_OUT_OF_RANGE: return "INDEX_OUT_OF_RANGE";
    case ViolationKind::SELF_LOOP: return "SELF_LOOP";
    case ViolationKind::DUPLICATE_EDGE: return "DUPLICATE_EDGE";
    case ViolationKind::DUPLICATE_POINT: return "DUPLICATE_POINT";
    case ViolationKind::CROSSING: return "CROSSING";
    case ViolationKind::OVERLAPPING: return "OVERLAPPING";
    case ViolationKind::TOUCHING: return "TOUCHING";
    case ViolationKind::VERTEX_ON_EDGE: return "VERTEX_ON_EDGE";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::string message;
};

namespace detail {

struct EdgeBox {
  std::size_t index;
  Rational xmin, xmax, ymin, ymax;
};

inline std::vector<EdgeBox> edge_boxes(const Pslg& g) {
  std::vector<EdgeBox> boxes;
  boxes.reserve(g.m());
  for (std::size_t i = 0; i < g.m(); ++i) {
    const Point& a = g.points[g.edges[i].first];
    const Point& b = g.points[g.edges[i].second];
    boxes.push_back({i, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)});
  }
  std::sort(boxes.begin(), boxes.end(), [](const EdgeBox& l, const EdgeBox& r) {
    int c = cmp(l.xmin, r.xmin);
    return c != 0 ? c < 0 : l.index < r.index;
  });
  return boxes;
}

inline std::string edge_str(const Edge& e) {
  return "[" + std::to_string(e.first) + "," + std::to_string(e.second) + "]";
}

}  // namespace detail

/// Checks every structural and embedding invariant. Returns the first violation found.
inline std::optional<Violation> validate(const Pslg& g) {
  const auto n = static_cast<VertexId>(g.n());
  for (const auto& e : g.edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
      return Violation{ViolationKind::INDEX_OUT_OF_RANGE, "edge " + detail::edge_str(e) + " references a missing vertex"};
    if (e.first == e.second) return Violation{ViolationKind::SELF_LOOP, "self-loop at vertex " + std::to_string(e.first)};
  }
  {
    std::set<Edge> seen;
    for (const auto& e : g.edges) {
      Edge key = g.directed ? e : Edge{std::min(e.first, e.second), std::max(e.first, e.second)};
      if (!seen.insert(key).second) return Violation{ViolationKind::DUPLICATE_EDGE, "duplicate edge " + detail::edge_str(e)};
    }
  }
  {
    std::vector<VertexId> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.points[a] < g.points[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (g.points[order[i]] == g.points[order[i - 1]])
        return Violation{ViolationKind::DUPLICATE_POINT, "vertices " + std::to_string(order[i - 1]) + " and " +
                                                             std::to_string(order[i]) + " coincide"};
  }

  // Pairwise segment checks, pruned by an x-sweep over bounding boxes.
  auto boxes = detail::edge_boxes(g);
  std::vector<const detail::EdgeBox*> active;
  for (const auto& box : boxes) {
    std::erase_if(active, [&](const detail::EdgeBox* a) { return a->xmax < box.xmin; });
    const Edge& e = g.edges[box.index];
    Segment s{g.points[e.first], g.points[e.second]};
    for (const auto* other : active) {
      if (other->ymax < box.ymin || box.ymax < other->ymin) continue;
      const Edge& f = g.edges[other->index];
      auto rel = segment_relation(s, Segment{g.points[f.first], g.points[f.second]});
      ViolationKind kind;
      switch (rel) {
        case SegmentRelation::CROSSING: kind = ViolationKind::CROSSING; break;
        case SegmentRelation::OVERLAPPING: kind = ViolationKind::OVERLAPPING; break;
        case SegmentRelation::TOUCHING: kind = ViolationKind::TOUCHING; break;
        default: continue;
      }
      auto [lo, hi] = std::minmax(box.index, other->index);
      return Violation{kind, std::string("edges ") + detail::edge_str(g.edges[lo]) + " and " +
                                 detail::edge_str(g.edges[hi]) + ": " + to_string(rel)};
    }
    active.push_back(&box);
  }

  // Isolated vertices are not covered by the TOUCHING test.
  std::vector<int> degree(g.n(), 0);
  for (auto [u, v] : g.edges) ++degree[u], ++degree[v];
  for (VertexId v = 0; v < n; ++v) {
    if (degree[v] != 0) continue;
    for (const auto& e : g.edges)
      if (strictly_inside_segment(g.points[e.first], g.points[e.second], g.points[v]))
        return Violation{ViolationKind::VERTEX_ON_EDGE,
                         "vertex " + std::to_string(v) + " lies inside edge " + detail::edge_str(e)};
  }
  return std::nullopt;
}

inline void require_valid(const Pslg& g) {
  if (auto v = validate(g)) throw PreconditionError(std::string("invalid graph: ") + v->message);
}

// ---------------------------------------------------------------------------
// Convex hull and faces
// ---------------------------------------------------------------------------

inline bool all_collinear(const Pslg& g) {
  for (std::size_t i = 2; i < g.n(); ++i)
    if (orient(g.points[0], g.points[1], g.points[i]) != Orientation::COLLINEAR) return false;
  return true;
}

/// Counter-clockwise convex hull, including points that lie on hull edges.
inline std::vector<VertexId> convex_hull(const Pslg& g) {
  std::vector<VertexId> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return g.points[a] < g.points[b]; });
  if (order.size() < 3) return order;

  auto chain = [&](auto first, auto last) {
    std::vector<VertexId> h;
    for (auto it = first; it != last; ++it) {
      while (h.size() >= 2 && orient(g.points[h[h.size() - 2]], g.points[h.back()], g.points[*it]) == Orientation::CW)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  auto lower = chain(order.begin(), order.end());
  auto upper = chain(order.rbegin(), order.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

/// Half-edge rotation system: for each vertex, its neighbors in counter-clockwise
/// angular order.
inline std::vector<std::vector<VertexId>> rotation_system(const Pslg& g) {
  auto adj = g.neighbors();
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v) {
    const Point& c = g.points[v];
    std::sort(adj[v].begin(), adj[v].end(),
              [&](VertexId a, VertexId b) { return angle_less(g.points[a] - c, g.points[b] - c); });
  }
  return adj;
}

/// All face boundary walks (each half-edge used exactly once, face on the left).
inline std::vector<std::vector<VertexId>> face_walks(const Pslg& g) {
  auto rot = rotation_system(g);
  std::vector<std::map<VertexId, std::size_t>> pos(g.n());
  for (VertexId v = 0; v < static_cast<VertexId>(g.n()); ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = i;

  std::set<Edge> used;
  std::vector<std::vector<VertexId>> faces;
  for (VertexId u = 0; u < static_cast<VertexId>(g.n()); ++u) {
    for (VertexId v : rot[u]) {
      if (used.count({u, v})) continue;
      std::vector<VertexId> walk;
      VertexId a = u, b = v;
      while (used.insert({a, b}).second) {
        walk.push_back(a);
        // Next half-edge leaves b towards the neighbor clockwise-adjacent to a.
        const auto& ring = rot[b];
        std::size_t i = pos[b].at(a);
        VertexId c = ring[(i + ring.size() - 1) % ring.size()];
        a = b;
        b = c;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

inline Rational signed_area2(const Pslg& g, const std::vector<VertexId>& cycle) {
  Rational s = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Point& p = g.points[cycle[i]];
    const Point& q = g.points[cycle[(i + 1) % cycle.size()]];
    s += p.x * q.y - p.y * q.x;
  }
  return s;
}

struct TriangulationInfo {
  std::vector<VertexId> hull;                       // counter-clockwise
  std::size_t interior_count = 0;                   // k
  std::vector<std::vector<VertexId>> bounded_faces; // counter-clockwise walks
  bool is_edge_maximal = false;
};

/// Hull, interior count, bounded faces and edge-maximality of a valid PSLG.
/// Edge-maximality is decided by the edge count 3n - 3 - h, which every
/// triangulation of the point set attains and no proper subgraph does.
inline TriangulationInfo analyze_triangulation(const Pslg& g) {
  require_valid(g);
  if (g.n() < 3 || all_collinear(g)) throw PreconditionError("analyze_triangulation: points are collinear");
  TriangulationInfo info;
  info.hull = convex_hull(g);
  info.interior_count = g.n() - info.hull.size();
  for (auto& walk : face_walks(g))
    if (sgn(signed_area2(g, walk)) > 0) info.bounded_faces.push_back(std::move(walk));
  info.is_edge_maximal = g.m() == 3 * g.n() - 3 - info.hull.size();
  return info;
}

}  // namespace pslgcount
