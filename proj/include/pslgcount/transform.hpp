#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslgcount/analytics.hpp"
#include "pslgcount/counting.hpp"
#include "pslgcount/pslg.hpp"

namespace pslgcount {

// Combinatorial model: vertices 1..n in left-to-right order, every edge (i, j) has
// i < j and is traversed left to right.

enum class TransformErrorCode { NOT_FLIPPABLE, NOT_INTERIOR, MISSING_EDGE, BAD_INDICES, INVARIANT_VIOLATION, STEP_BUDGET };

class TransformError : public std::runtime_error {
 public:
  TransformError(TransformErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  TransformErrorCode code() const { return code_; }

 private:
  TransformErrorCode code_;
};

struct OrderedMultigraph {
  int n = 0;
  std::map<std::pair<int, int>, int> edges;  // (i, j) -> multiplicity

  int multiplicity(int i, int j) const {
    auto it = edges.find({i, j});
    return it == edges.end() ? 0 : it->second;
  }
  void add(int i, int j, int times = 1) {
    if (i < 1 || j > n || i >= j) throw TransformError(TransformErrorCode::BAD_INDICES, "edge (" + std::to_string(i) + "," + std::to_string(j) + ") must satisfy 1 <= i < j <= n");
    edges[{i, j}] += times;
  }
  int outdegree(int i) const {
    int d = 0;
    for (auto it = edges.lower_bound({i, 0}); it != edges.end() && it->first.first == i; ++it) d += it->second;
    return d;
  }
  long total_length() const {
    long s = 0;
    for (const auto& [e, mult] : edges) s += static_cast<long>(e.second - e.first) * mult;
    return s;
  }
  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& [e, mult] : edges) s += mult;
    return s;
  }
  friend bool operator==(const OrderedMultigraph& a, const OrderedMultigraph& b) { return a.n == b.n && a.edges == b.edges; }
};

/// Left-to-right paths with >= 1 edge; an edge of multiplicity m contributes m ways.
inline Count count_xmonotone_multigraph(const OrderedMultigraph& g) {
  std::vector<Count> ending(g.n + 1);
  Count total = 0;
  for (const auto& [e, mult] : g.edges) {
    // Edges are sorted by tail, so every path into the tail is final when reached.
    ending[e.second] += (ending[e.first] + 1) * mult;
  }
  for (int v = 1; v <= g.n; ++v) total += ending[v];
  return total;
}

/// Edge-maximal plane graph in left-to-right vertex order, with its triangles.
struct MonotoneTriangulation {
  int n = 0;
  std::set<std::pair<int, int>> edges;
  std::set<std::array<int, 3>> faces;  // sorted triples
  std::vector<int> outer;              // outer face cycle
  std::vector<VertexId> original;      // rank - 1 -> vertex id of the source graph

  OrderedMultigraph multigraph() const {
    OrderedMultigraph m{n, {}};
    for (auto [i, j] : edges) m.add(i, j);
    return m;
  }
  long total_length() const {
    long s = 0;
    for (auto [i, j] : edges) s += j - i;
    return s;
  }
  /// Third vertices of the faces incident to (i, j).
  std::vector<int> apexes(int i, int j) const {
    std::vector<int> out;
    for (const auto& f : faces) {
      if (std::find(f.begin(), f.end(), i) == f.end() || std::find(f.begin(), f.end(), j) == f.end()) continue;
      for (int v : f)
        if (v != i && v != j) out.push_back(v);
    }
    return out;
  }
  bool is_interior(int i, int j) const { return edges.count({i, j}) && apexes(i, j).size() == 2; }
};

namespace detail {

inline std::array<int, 3> sorted_triple(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace detail

/// Ranks the vertices of an edge-maximal PSLG lexicographically by (x, y); this is the
/// left-to-right order after an infinitesimal shear x -> x + eps*y.
inline MonotoneTriangulation to_monotone_triangulation(const Pslg& g) {
  auto info = analyze_triangulation(g);
  if (!info.is_edge_maximal) throw PreconditionError("to_monotone_triangulation: graph is not edge-maximal");
  MonotoneTriangulation t;
  t.n = static_cast<int>(g.n());
  t.original.resize(g.n());
  std::iota(t.original.begin(), t.original.end(), 0);
  std::sort(t.original.begin(), t.original.end(), [&](VertexId a, VertexId b) { return g.points[a] < g.points[b]; });
  std::vector<int> rank(g.n());
  for (int r = 0; r < t.n; ++r) rank[t.original[r]] = r + 1;
  for (auto [u, v] : g.edges) t.edges.insert(detail::ordered(rank[u], rank[v]));
  for (const auto& f : info.bounded_faces) {
    if (f.size() != 3) throw PreconditionError("to_monotone_triangulation: bounded face is not a triangle");
    t.faces.insert(detail::sorted_triple(rank[f[0]], rank[f[1]], rank[f[2]]));
  }
  for (VertexId v : info.hull) t.outer.push_back(rank[v]);
  return t;
}

/// The (k, l) a flip of (i, j) would insert, if (i, j) is interior, both apexes lie
/// strictly between i and j, and (k, l) is not already an edge.
inline std::optional<std::pair<int, int>> flip_partner(const MonotoneTriangulation& t, int i, int j) {
  if (!t.edges.count({i, j})) return std::nullopt;
  auto ap = t.apexes(i, j);
  if (ap.size() != 2) return std::nullopt;
  auto [k, l] = detail::ordered(ap[0], ap[1]);
  if (!(i < k && l < j) || k == l) return std::nullopt;
  if (t.edges.count({k, l})) return std::nullopt;
  return std::pair{k, l};
}

inline MonotoneTriangulation flip(const MonotoneTriangulation& t, int i, int j) {
  if (i > j) std::swap(i, j);
  if (!t.edges.count({i, j})) throw TransformError(TransformErrorCode::MISSING_EDGE, "flip: no edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
  auto kl = flip_partner(t, i, j);
  if (!kl) throw TransformError(TransformErrorCode::NOT_FLIPPABLE, "flip: edge (" + std::to_string(i) + "," + std::to_string(j) + ") is not flippable");
  auto [k, l] = *kl;
  MonotoneTriangulation out = t;
  out.edges.erase({i, j});
  out.edges.insert({k, l});
  out.faces.erase(detail::sorted_triple(i, j, k));
  out.faces.erase(detail::sorted_triple(i, j, l));
  out.faces.insert(detail::sorted_triple(i, k, l));
  out.faces.insert(detail::sorted_triple(k, l, j));
  return out;
}

/// True iff some face (i, j, k) has k < i or k > j.
inline bool lemma2_predicate(const MonotoneTriangulation& t, int i, int j) {
  if (i > j) std::swap(i, j);
  if (!t.is_interior(i, j)) throw TransformError(TransformErrorCode::NOT_INTERIOR, "lemma2_predicate: (" + std::to_string(i) + "," + std::to_string(j) + ") is not an interior edge");
  for (int k : t.apexes(i, j))
    if (k < i || k > j) return true;
  return false;
}

/// True iff every edge (i, i+1) is present.
inline bool lemma3_predicate(const MonotoneTriangulation& t) {
  for (int i = 1; i < t.n; ++i)
    if (!t.edges.count({i, i + 1})) return false;
  return true;
}

inline OrderedMultigraph shift(const OrderedMultigraph& g, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= g.n))
    throw TransformError(TransformErrorCode::BAD_INDICES, "shift: need i < j < k, got (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
  if (!g.multiplicity(i, j) || !g.multiplicity(i, k))
    throw TransformError(TransformErrorCode::MISSING_EDGE, "shift: edges (i,j) and (i,k) must be present");
  OrderedMultigraph out = g;
  if (--out.edges[{i, k}] == 0) out.edges.erase({i, k});
  out.add(j, k);
  return out;
}

/// (I1) consecutive edges present with multiplicity one.
inline bool invariant_i1(const OrderedMultigraph& g) {
  for (int i = 1; i < g.n; ++i)
    if (g.multiplicity(i, i + 1) != 1) return false;
  return true;
}

/// (I2) every run of >= 3 consecutive vertices induces at most 3|V| - 6 edges.
inline bool invariant_i2(const OrderedMultigraph& g) {
  // cnt[a][b]: edges with both ends in [a, b], accumulated by widening b.
  for (int a = 1; a <= g.n; ++a) {
    std::vector<long> ending_at(g.n + 1, 0);
    for (auto it = g.edges.lower_bound({a, 0}); it != g.edges.end(); ++it) ending_at[it->first.second] += it->second;
    long inside = 0;
    for (int b = a + 1; b <= g.n; ++b) {
      inside += ending_at[b];
      if (b - a + 1 >= 3 && inside > 3L * (b - a + 1) - 6) return false;
    }
  }
  return true;
}

/// Out-edges of every vertex, sorted by length, reach distances >= 1, 2, 3.
inline bool outgoing_distances_ok(const OrderedMultigraph& g) {
  std::vector<std::vector<int>> lengths(g.n + 1);
  for (const auto& [e, mult] : g.edges)
    for (int c = 0; c < mult; ++c) lengths[e.first].push_back(e.second - e.first);
  for (auto& ls : lengths) {
    if (ls.size() > 3) return false;
    std::sort(ls.begin(), ls.end());
    for (std::size_t r = 0; r < ls.size(); ++r)
      if (ls[r] < static_cast<int>(r) + 1) return false;
  }
  return true;
}

inline int max_outdegree(const OrderedMultigraph& g) {
  int d = 0;
  for (int v = 1; v <= g.n; ++v) d = std::max(d, g.outdegree(v));
  return d;
}

struct FlipResult {
  MonotoneTriangulation triangulation;
  std::vector<std::string> log;
  bool counts_nondecreasing = true;
};

/// Applies length-decreasing flips until none applies.
inline FlipResult normalize_by_flips(MonotoneTriangulation t) {
  FlipResult out;
  Count count = count_xmonotone_multigraph(t.multigraph());
  for (;;) {
    std::optional<std::pair<int, int>> pick;
    for (auto [i, j] : t.edges)
      if (flip_partner(t, i, j)) {
        pick = std::pair{i, j};
        break;
      }
    if (!pick) break;
    auto [i, j] = *pick;
    auto [k, l] = *flip_partner(t, i, j);
    long before_len = t.total_length();
    t = flip(t, i, j);
    Count after = count_xmonotone_multigraph(t.multigraph());
    if (after < count) out.counts_nondecreasing = false;
    if (t.total_length() >= before_len)
      throw TransformError(TransformErrorCode::INVARIANT_VIOLATION, "flip did not decrease total length");
    out.log.push_back("FLIP " + std::to_string(i) + " " + std::to_string(j) + " -> " + std::to_string(k) + " " +
                      std::to_string(l) + " | " + count.get_str() + " " + after.get_str() + " | " +
                      std::to_string(t.total_length()));
    count = after;
  }
  out.triangulation = std::move(t);
  return out;
}

struct ReduceResult {
  OrderedMultigraph graph;
  std::vector<std::string> log;
  std::size_t steps = 0;
};

/// Left to right, shifts (i, j, k) with j the nearest and k the farthest out-neighbor
/// until every outdegree is at most 3. Aborts if a step loses paths or breaks I1/I2.
inline ReduceResult reduce_outdegrees(OrderedMultigraph g) {
  ReduceResult out;
  auto fail = [&](TransformErrorCode code, const std::string& why) {
    std::string msg = "reduce_outdegrees: " + why;
    for (const auto& line : out.log) msg += "\n  " + line;
    throw TransformError(code, msg);
  };
  if (!invariant_i1(g)) fail(TransformErrorCode::INVARIANT_VIOLATION, "input violates I1");
  if (!invariant_i2(g)) fail(TransformErrorCode::INVARIANT_VIOLATION, "input violates I2");

  int maxdeg = std::max(1, max_outdegree(g));
  const std::size_t budget = static_cast<std::size_t>(g.n) * maxdeg * g.n;
  Count count = count_xmonotone_multigraph(g);
  for (int i = 1; i <= g.n; ++i) {
    while (g.outdegree(i) >= 4) {
      if (++out.steps > budget) fail(TransformErrorCode::STEP_BUDGET, "step budget exceeded");
      auto first = g.edges.lower_bound({i, 0});
      auto last = g.edges.lower_bound({i + 1, 0});
      int j = first->first.second;
      int k = std::prev(last)->first.second;
      g = shift(g, i, j, k);
      Count after = count_xmonotone_multigraph(g);
      out.log.push_back("SHIFT " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) + " | " +
                        count.get_str() + " " + after.get_str());
      if (after < count) fail(TransformErrorCode::INVARIANT_VIOLATION, "shift decreased the path count");
      if (!invariant_i1(g)) fail(TransformErrorCode::INVARIANT_VIOLATION, "I1 violated");
      if (!invariant_i2(g)) fail(TransformErrorCode::INVARIANT_VIOLATION, "I2 violated");
      count = after;
    }
  }
  out.graph = std::move(g);
  return out;
}

struct PipelineReport {
  int n = 0;
  Count original_count;      // x-monotone paths of the straight-line input
  Count sheared_count;       // same, vertical edges read left to right after the shear
  Count normalized_count;    // after the flip stage
  Count final_count;         // after outdegree reduction
  Count tribonacci_sum;      // B(1) + ... + B(n)
  Count tribonacci_paths;    // bound on all paths of a graph with out-distances >= 1, 2, 3
  bool flips_nondecreasing = true;
  bool lemma2_holds = true;
  bool lemma3_holds = true;
  int final_max_outdegree = 0;
  bool final_distances_ok = false;
  std::vector<std::string> log;
};

/// Flip normalization, then outdegree reduction, on an edge-maximal PSLG.
inline PipelineReport run_pipeline(const Pslg& g) {
  PipelineReport r;
  auto t = to_monotone_triangulation(g);
  r.n = t.n;
  r.original_count = count_monotone_paths_in_direction(g, Vec2{1, 0});
  r.sheared_count = count_xmonotone_multigraph(t.multigraph());
  auto flipped = normalize_by_flips(std::move(t));
  r.flips_nondecreasing = flipped.counts_nondecreasing;
  r.log = flipped.log;
  const auto& nt = flipped.triangulation;
  r.normalized_count = count_xmonotone_multigraph(nt.multigraph());
  r.lemma3_holds = lemma3_predicate(nt);
  for (auto [i, j] : nt.edges)
    if (nt.is_interior(i, j) && !lemma2_predicate(nt, i, j)) r.lemma2_holds = false;
  auto reduced = reduce_outdegrees(nt.multigraph());
  r.log.insert(r.log.end(), reduced.log.begin(), reduced.log.end());
  r.final_count = count_xmonotone_multigraph(reduced.graph);
  r.final_max_outdegree = max_outdegree(reduced.graph);
  r.final_distances_ok = outgoing_distances_ok(reduced.graph);
  r.tribonacci_sum = tribonacci_bound_sum(r.n);
  r.tribonacci_paths = monotone_total_bound(r.n);
  return r;
}

}  // namespace pslgcount
