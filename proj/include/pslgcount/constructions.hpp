#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslgcount/analytics.hpp"
#include "pslgcount/counting.hpp"
#include "pslgcount/pslg.hpp"

namespace pslgcount {

/// Raised when a generated embedding fails its own exact checks.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void require_param(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

inline void self_check(const Pslg& g, const char* name) {
  if (auto v = validate(g)) throw ConstructionError(std::string(name) + ": generated embedding is invalid: " + v->message);
}

inline void self_check_maximal(const Pslg& g, const char* name) {
  self_check(g, name);
  if (!analyze_triangulation(g).is_edge_maximal) throw ConstructionError(std::string(name) + ": output is not edge-maximal");
}

inline long pow2(int e) { return 1L << e; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Monotone lower-bound graph and its subgraphs
// ---------------------------------------------------------------------------

/// Vertex count 2^l + 2 of the lower-bound graph.
inline long monotone_lb_size(int l) { return detail::pow2(l) + 2; }

/// Subgraph G_k: the path plus edges (v_i, v_{i+2^j}), 1 <= j <= k, present iff i-1 or
/// i-2 is a multiple of 2^j (1-based). Vertex i sits at x = i; odd vertices lie on the
/// upward parabola y = 1 + i^2, even vertices on y = -1 - i^2, so every long edge is a
/// chord on the outer side of its chain.
inline Pslg gen_Gk(int l, int k) {
  detail::require_param(l >= 1 && l <= 20, "gen_Gk: l must be in [1, 20]");
  detail::require_param(k >= 0 && k <= l, "gen_Gk: k must satisfy 0 <= k <= l");
  const long n = monotone_lb_size(l);
  Pslg g;
  g.points.reserve(n);
  for (long i = 1; i <= n; ++i) {
    BigInt y = 1 + BigInt(i) * i;
    g.points.push_back({Rational(i), Rational(i % 2 ? y : BigInt(-y))});
  }
  for (long i = 1; i < n; ++i) g.edges.emplace_back(i - 1, i);
  for (int j = 1; j <= k; ++j) {
    const long step = detail::pow2(j);
    for (long i = 1; i + step <= n; ++i)
      if ((i - 1) % step == 0 || (i - 2) % step == 0) g.edges.emplace_back(i - 1, i - 1 + step);
  }
  detail::self_check(g, "gen_Gk");
  return g;
}

inline Pslg gen_monotone_lb(int l) {
  detail::require_param(l >= 1, "gen_monotone_lb: l must be >= 1");
  return gen_Gk(l, l);
}

/// Path counts measured through one group of a monotone lower-bound subgraph.
/// Group `index` (0-based) of G_{level-1} spans vertices [index*2^(level-1),
/// index*2^(level-1) + 2^(level-1) + 1]. Entry (r, c) counts x-monotone paths from
/// the c-th start vertex (a or b) to the r-th end vertex, excluding the closing edge
/// between the two end vertices. With this layout the matrix acts on (p(a), p(b)).
inline Matrix2 measure_group_matrix(const Pslg& g, int level, long index) {
  const long width = detail::pow2(level - 1);
  const long a0 = index * width, b0 = a0 + 1, a1 = a0 + width, b1 = a1 + 1;
  if (b1 >= static_cast<long>(g.n())) throw PreconditionError("measure_group_matrix: group out of range");
  Pslg sub{g.points, {}, true};
  for (auto [u, v] : g.edges) {
    long lo = std::min(u, v), hi = std::max(u, v);
    if (lo < a0 || hi > b1 || (lo == a1 && hi == b1)) continue;
    sub.edges.emplace_back(lo, hi);  // vertex ids increase with x
  }
  auto from_a = directed_paths_from(sub, {static_cast<VertexId>(a0)});
  auto from_b = directed_paths_from(sub, {static_cast<VertexId>(b0)});
  return {from_a[a1], from_b[a1], from_a[b1], from_b[b1]};
}

/// (p(v_{n-1}), p(v_n)) in the transfer-matrix convention: x-monotone paths starting
/// at v_1 or v_2 (the empty path included), the second entry excluding the last edge.
inline std::pair<Count, Count> measure_boundary_counts(const Pslg& g) {
  const auto n = static_cast<VertexId>(g.n());
  if (n < 3) throw PreconditionError("measure_boundary_counts: need n >= 3");
  Pslg d{g.points, {}, true};
  for (auto [u, v] : g.edges) {
    auto lo = std::min(u, v), hi = std::max(u, v);
    if (lo == n - 2 && hi == n - 1) continue;
    d.edges.emplace_back(lo, hi);
  }
  auto from = directed_paths_from(d, {0, 1});
  return {from[n - 2], from[n - 1]};
}

// ---------------------------------------------------------------------------
// Star-shaped lower bound: three projective copies around the origin
// ---------------------------------------------------------------------------

/// Three copies of gen_monotone_lb(l). Each copy is mapped by
/// (x, y) -> (x', 1) / (y + H), which sends vertical lines to lines through the origin
/// and x-order to clockwise order, then rotated by multiples of roughly 120 degrees.
/// Copy c ends next to the start of copy c+1; connector edges join them.
/// The star center is the origin.
inline Pslg gen_star_lb(int l) {
  detail::require_param(l >= 1 && l <= 12, "gen_star_lb: l must be in [1, 12]");
  const Pslg base = gen_monotone_lb(l);
  const auto n = static_cast<VertexId>(base.n());
  Rational ymax = 0;
  for (const auto& p : base.points) ymax = std::max(ymax, Rational(abs(p.y)));

  // Rational rotation by 2*atan(t), t ~ tan(60 deg); applied clockwise.
  const Rational t(1732, 1000);
  const Rational c = (1 - t * t) / (1 + t * t), s = 2 * t / (1 + t * t);
  const Point origin{0, 0};

  Rational H = ymax + 1;
  for (int attempt = 0; attempt < 16; ++attempt, H *= 2) {
    Pslg g;
    std::vector<Point> copy;
    for (const auto& p : base.points) {
      Rational xs = (p.x - Rational(n + 1, 2)) * Rational(3, n - 1);
      Rational w = p.y + H;
      copy.push_back({xs / w, 1 / w});
    }
    for (int k = 0; k < 3; ++k) {
      for (const auto& p : copy) g.points.push_back(p);
      for (auto& p : copy) p = Point{p.x * c + p.y * s, -p.x * s + p.y * c};
    }
    for (int k = 0; k < 3; ++k)
      for (auto [u, v] : base.edges) g.edges.emplace_back(k * n + u, k * n + v);
    for (int k = 0; k < 3; ++k) g.edges.emplace_back(k * n + n - 1, ((k + 1) % 3) * n);

    if (validate(g)) continue;
    bool clockwise = true;
    for (int k = 0; k < 3 && clockwise; ++k)
      for (VertexId i = 0; i + 1 < n; ++i)
        if (orient(origin, g.points[k * n + i], g.points[k * n + i + 1]) != Orientation::CW) clockwise = false;
    for (int k = 0; k < 3 && clockwise; ++k)
      if (orient(origin, g.points[k * n + n - 1], g.points[((k + 1) % 3) * n]) != Orientation::CW) clockwise = false;
    if (!clockwise) continue;
    return g;
  }
  throw ConstructionError("gen_star_lb: no valid projective parameter found");
}

inline Point star_lb_center() { return {0, 0}; }

// ---------------------------------------------------------------------------
// Directed lower bound (tribonacci growth)
// ---------------------------------------------------------------------------

/// v_1, v_2, v_3 form a triangle; v_i is the centroid of v_{i-3}, v_{i-2}, v_{i-1},
/// which is always a face. Edges v_j -> v_i for 1 <= i - j <= 3.
inline Pslg gen_directed_lb(int n) {
  detail::require_param(n >= 4, "gen_directed_lb: n must be >= 4");
  Pslg g;
  g.directed = true;
  g.points = {{0, 0}, {1, 0}, {0, 1}};
  for (int i = 3; i < n; ++i) {
    const Point &a = g.points[i - 3], &b = g.points[i - 2], &c = g.points[i - 1];
    g.points.push_back({(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3});
  }
  for (int i = 1; i < n; ++i)
    for (int j = std::max(0, i - 3); j < i; ++j) g.edges.emplace_back(j, i);
  detail::self_check(g, "gen_directed_lb");
  return g;
}

// ---------------------------------------------------------------------------
// Minimum constructions
// ---------------------------------------------------------------------------

/// Poles (0, +-Y) joined to each other and to an x-monotone zigzag z_1..z_{n-2} at
/// (j, +-1) lying to their right; consecutive zigzag vertices are joined.
inline Pslg gen_min_convex_zigzag(int n) {
  detail::require_param(n >= 5, "gen_min_convex_zigzag: n must be >= 5");
  const long Y = 4L * n;
  Pslg g;
  g.points = {{0, Y}, {0, -Y}};
  for (int j = 1; j <= n - 2; ++j) g.points.push_back({j, j % 2 ? 1 : -1});
  g.edges.emplace_back(0, 1);
  for (int j = 2; j < n; ++j) {
    g.edges.emplace_back(0, j);
    g.edges.emplace_back(1, j);
    if (j + 1 < n) g.edges.emplace_back(j, j + 1);
  }
  detail::self_check_maximal(g, "gen_min_convex_zigzag");
  return g;
}

/// Apex (0, 0) joined to the convex path (i, i^2), i = 1..n-1.
inline Pslg gen_fan(int n) {
  detail::require_param(n >= 3, "gen_fan: n must be >= 3");
  Pslg g;
  g.points.push_back({0, 0});
  for (int i = 1; i < n; ++i) g.points.push_back({i, BigInt(i) * i});
  for (int i = 1; i < n; ++i) g.edges.emplace_back(0, i);
  for (int i = 1; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  detail::self_check_maximal(g, "gen_fan");
  return g;
}

/// The fan with fan edges leaving the (lowest) apex and path edges alternating.
inline Pslg gen_directed_fan(int n) {
  detail::require_param(n >= 4, "gen_directed_fan: n must be >= 4");
  Pslg g = gen_fan(n);
  g.directed = true;
  for (auto& e : g.edges) {
    if (e.first == 0) continue;
    if (e.first % 2 == 0) std::swap(e.first, e.second);
  }
  detail::self_check(g, "gen_directed_fan");
  return g;
}

struct MinMonpath {
  Pslg graph;
  VertexId o = 0, a = 1, b = 2;
  std::vector<std::vector<VertexId>> layers;  // layers[i] = points on circle C_i
  Rational shrink;                            // ratio between consecutive radii
};

namespace detail {

// Dyadic approximation of x with `bits` fractional bits.
inline Rational dyadic(double x, int bits) {
  Rational r(std::nearbyint(std::ldexp(x, bits)));
  r /= Rational(pow_ui(2, static_cast<unsigned long>(bits)));
  return r;
}

}  // namespace detail

/// Triangulation on 2^l + 2 vertices with few monotone paths. o is the origin,
/// a = (-1, 1), b = (1, 1); layer i has 2^i points at directions
/// pi/4 + (2j-1) pi / (4 * 2^i) and radius D^-(i+1). Each layer point is joined to o
/// and to its angular neighbors among earlier layers and {a, b}. D doubles until
/// every inter-layer edge vv' satisfies angle(v, v', o) < pi / 2^(l+1) and the
/// embedding validates.
inline MinMonpath gen_min_monpath_detailed(int l) {
  detail::require_param(l >= 1 && l <= 10, "gen_min_monpath: l must be in [1, 10]");
  const long n = monotone_lb_size(l);
  const int bits = l + 20;
  // Angular position t in [0, 2^(l+1)]: b at 0, a at 2^(l+1).
  const long top = detail::pow2(l + 1);

  struct Slot {
    long t;
    VertexId id;
  };
  MinMonpath out;
  std::vector<std::pair<VertexId, VertexId>> inter;  // (layer point, earlier neighbor)
  {
    std::map<long, VertexId> placed{{0, out.b}, {top, out.a}};
    VertexId next = 3;
    for (int i = 0; i < l; ++i) {
      std::vector<VertexId> layer;
      std::vector<Slot> fresh;
      for (long j = 1; j <= detail::pow2(i); ++j) {
        long t = (2 * j - 1) * detail::pow2(l - i);
        auto hi = placed.upper_bound(t);
        auto lo = std::prev(hi);
        inter.emplace_back(next, lo->second);
        inter.emplace_back(next, hi->second);
        fresh.push_back({t, next});
        layer.push_back(next++);
      }
      for (const auto& s : fresh) placed.emplace(s.t, s.id);
      out.layers.push_back(std::move(layer));
    }
    if (next != n) throw ConstructionError("gen_min_monpath: vertex count mismatch");
  }

  const double pi = std::acos(-1.0);
  for (Rational D = 2; D < Rational(pow_ui(2, 64)); D *= 2) {
    Pslg g;
    g.points = {{0, 0}, {-1, 1}, {1, 1}};
    Rational radius = 1;
    for (int i = 0; i < l; ++i) {
      radius /= D;
      for (long j = 1; j <= detail::pow2(i); ++j) {
        long t = (2 * j - 1) * detail::pow2(l - i);
        double theta = pi / 4 + pi / 2 * static_cast<double>(t) / static_cast<double>(top);
        g.points.push_back({radius * detail::dyadic(std::cos(theta), bits), radius * detail::dyadic(std::sin(theta), bits)});
      }
    }
    for (VertexId v = 1; v < n; ++v) g.edges.emplace_back(out.o, v);
    g.edges.emplace_back(out.a, out.b);
    for (auto [v, w] : inter) g.edges.emplace_back(w, v);

    bool ok = true;
    for (auto [v, w] : inter)
      if (!angle_less_than_dyadic(g.points[w], g.points[v], g.points[out.o], static_cast<unsigned>(l + 1))) {
        ok = false;
        break;
      }
    if (!ok || validate(g)) continue;
    if (!analyze_triangulation(g).is_edge_maximal) continue;
    out.graph = std::move(g);
    out.shrink = D;
    return out;
  }
  throw ConstructionError("gen_min_monpath: refinement budget exhausted");
}

inline Pslg gen_min_monpath(int l) { return gen_min_monpath_detailed(l).graph; }

/// Upward paths (>= 1 edge) from points of each layer to {a, b}.
inline std::vector<Count> measure_tau(const MinMonpath& t) {
  Pslg up = directed_by(t.graph, Vec2{0, 1});
  std::vector<Count> tau;
  for (const auto& layer : t.layers) tau.push_back(count_directed_st_paths(up, layer, {t.a, t.b}));
  return tau;
}

// ---------------------------------------------------------------------------
// Named dispatch
// ---------------------------------------------------------------------------

enum class ConstructionName { MONOTONE_LB, GK, STAR_LB, DIRECTED_LB, MIN_CONVEX_ZIGZAG, FAN, DIRECTED_FAN, MIN_MONPATH };

struct ConstructionSpec {
  ConstructionName name;
  std::map<std::string, long> params;  // "l", "n", "k"
};

inline const std::vector<std::pair<std::string, ConstructionName>>& construction_names() {
  static const std::vector<std::pair<std::string, ConstructionName>> names{
      {"monotone-lb", ConstructionName::MONOTONE_LB},
      {"gk", ConstructionName::GK},
      {"star-lb", ConstructionName::STAR_LB},
      {"directed-lb", ConstructionName::DIRECTED_LB},
      {"min-convex-zigzag", ConstructionName::MIN_CONVEX_ZIGZAG},
      {"fan", ConstructionName::FAN},
      {"directed-fan", ConstructionName::DIRECTED_FAN},
      {"min-monpath", ConstructionName::MIN_MONPATH},
  };
  return names;
}

inline ConstructionName parse_construction_name(const std::string& s) {
  for (const auto& [key, value] : construction_names())
    if (key == s) return value;
  throw PreconditionError("unknown construction '" + s + "'");
}

inline Pslg generate(const ConstructionSpec& spec) {
  auto get = [&](const char* key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) throw PreconditionError(std::string("missing parameter --") + key);
    if (it->second < -1000000 || it->second > 1000000) throw PreconditionError(std::string("parameter --") + key + " out of range");
    return static_cast<int>(it->second);
  };
  switch (spec.name) {
    case ConstructionName::MONOTONE_LB: return gen_monotone_lb(get("l"));
    case ConstructionName::GK: return gen_Gk(get("l"), get("k"));
    case ConstructionName::STAR_LB: return gen_star_lb(get("l"));
    case ConstructionName::DIRECTED_LB: return gen_directed_lb(get("n"));
    case ConstructionName::MIN_CONVEX_ZIGZAG: return gen_min_convex_zigzag(get("n"));
    case ConstructionName::FAN: return gen_fan(get("n"));
    case ConstructionName::DIRECTED_FAN: return gen_directed_fan(get("n"));
    case ConstructionName::MIN_MONPATH: return gen_min_monpath(get("l"));
  }
  throw PreconditionError("unknown construction");
}

}  // namespace pslgcount
