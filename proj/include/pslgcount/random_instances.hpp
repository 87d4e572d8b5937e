#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "pslgcount/counting.hpp"
#include "pslgcount/pslg.hpp"

namespace pslgcount {

using Rng = std::mt19937_64;

/// n distinct integer points in [0, range]^2, not all collinear.
inline std::vector<Point> random_point_set(int n, Rng& rng, long range = 0) {
  if (n < 3) throw PreconditionError("random_point_set: n must be >= 3");
  if (range <= 0) range = 4L * n;
  std::uniform_int_distribution<long> coord(0, range);
  for (;;) {
    std::set<std::pair<long, long>> seen;
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      long x = coord(rng), y = coord(rng);
      if (seen.insert({x, y}).second) pts.push_back({x, y});
    }
    for (int i = 2; i < n; ++i)
      if (orient(pts[0], pts[1], pts[i]) != Orientation::COLLINEAR) return pts;
  }
}

/// Triangulates a point set by inserting every segment, in random order, that neither
/// crosses, overlaps nor touches an accepted edge and has no point in its interior.
inline Pslg greedy_triangulation(std::vector<Point> pts, Rng& rng) {
  Pslg g;
  g.points = std::move(pts);
  const auto n = static_cast<VertexId>(g.n());
  std::vector<Edge> candidates;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (const auto& c : candidates) {
    Segment s{g.points[c.first], g.points[c.second]};
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v)
      if (strictly_inside_segment(s.a, s.b, g.points[v])) ok = false;
    for (const auto& e : g.edges) {
      if (!ok) break;
      auto rel = segment_relation(s, Segment{g.points[e.first], g.points[e.second]});
      ok = rel == SegmentRelation::DISJOINT || rel == SegmentRelation::SHARED_ENDPOINT;
    }
    if (ok) g.edges.push_back(c);
  }
  return g;
}

inline Pslg random_edge_maximal(int n, Rng& rng, long range = 0) {
  return greedy_triangulation(random_point_set(n, rng, range), rng);
}

/// Orients every edge along a random vertex permutation (always acyclic).
inline Pslg random_acyclic_orientation(const Pslg& g, Rng& rng) {
  std::vector<int> rank(g.n());
  for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = static_cast<int>(i);
  std::shuffle(rank.begin(), rank.end(), rng);
  Pslg d{g.points, g.edges, true};
  for (auto& e : d.edges)
    if (rank[e.first] > rank[e.second]) std::swap(e.first, e.second);
  return d;
}

/// Nonzero direction with small integer coordinates.
inline Vec2 random_direction(Rng& rng, long range = 9) {
  std::uniform_int_distribution<long> c(-range, range);
  for (;;) {
    Vec2 u{c(rng), c(rng)};
    if (!u.is_zero()) return u;
  }
}

/// A point inside the bounding box with denominator `den` that is a valid star center.
inline Point random_center(const Pslg& g, Rng& rng, long den = 7) {
  Rational xmin = g.points[0].x, xmax = xmin, ymin = g.points[0].y, ymax = ymin;
  for (const auto& p : g.points) {
    xmin = std::min(xmin, p.x), xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y), ymax = std::max(ymax, p.y);
  }
  std::uniform_int_distribution<long> unit(0, 1L << 20);
  for (;;) {
    Rational fx(unit(rng), 1L << 20), fy(unit(rng), 1L << 20);
    Point o{xmin + (xmax - xmin) * fx, ymin + (ymax - ymin) * fy};
    // Snap to a coarse grid to keep numbers small.
    o.x = Rational(floor(o.x * den * 13), den * 13);
    o.y = Rational(floor(o.y * den * 13), den * 13);
    o.x.canonicalize();
    o.y.canonicalize();
    try {
      require_valid_center(g, o);
      return o;
    } catch (const PreconditionError&) {
    }
  }
}

}  // namespace pslgcount
