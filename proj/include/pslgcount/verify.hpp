#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pslgcount/analytics.hpp"
#include "pslgcount/constructions.hpp"
#include "pslgcount/counting.hpp"
#include "pslgcount/oracle.hpp"
#include "pslgcount/random_instances.hpp"
#include "pslgcount/transform.hpp"

namespace pslgcount::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Checks = std::vector<Check>;

inline bool all_pass(const Checks& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.pass; });
}

inline void sort_checks(Checks& cs) {
  std::stable_sort(cs.begin(), cs.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
}

struct Options {
  std::uint64_t seed = 7;
  int trials = 50;
  int max_n = 10;
  int max_l = 6;
  int pipeline_trials = 20;
  int pipeline_max_n = 12;
};

namespace detail {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << "s";
  return os.str();
}

inline void add(Checks& out, std::string name, bool pass, std::string detail = {}) {
  out.push_back({std::move(name), pass, std::move(detail)});
}

// Compares counting-module and oracle values, recording the first mismatch only.
class Comparison {
 public:
  explicit Comparison(std::string name) : name_(std::move(name)) {}
  void expect(const Count& fast, const Count& slow, const std::string& where) {
    ++compared_;
    if (fast != slow && mismatch_.empty()) mismatch_ = where + ": " + fast.get_str() + " vs oracle " + slow.get_str();
  }
  void fail(const std::string& where) {
    if (mismatch_.empty()) mismatch_ = where;
  }
  Check result() const {
    return {name_, mismatch_.empty(), mismatch_.empty() ? std::to_string(compared_) + " comparisons" : mismatch_};
  }

 private:
  std::string name_;
  std::size_t compared_ = 0;
  std::string mismatch_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance pools
// ---------------------------------------------------------------------------

struct Instance {
  std::string name;
  Pslg graph;
};

/// Seeded random edge-maximal instances with 4 <= n <= max_n.
inline std::vector<Instance> random_instances(std::uint64_t seed, int trials, int max_n) {
  Rng rng(seed);
  std::uniform_int_distribution<int> size(4, std::max(4, max_n));
  std::vector<Instance> out;
  for (int t = 0; t < trials; ++t) {
    int n = size(rng);
    out.push_back({"random[" + std::to_string(t) + "] n=" + std::to_string(n), random_edge_maximal(n, rng)});
  }
  return out;
}

/// Every construction at its minimum size.
inline std::vector<Instance> minimal_constructions() {
  return {
      {"monotone-lb l=1", gen_monotone_lb(1)},
      {"gk l=1 k=0", gen_Gk(1, 0)},
      {"star-lb l=1", gen_star_lb(1)},
      {"directed-lb n=4", gen_directed_lb(4)},
      {"min-convex-zigzag n=5", gen_min_convex_zigzag(5)},
      {"fan n=3", gen_fan(3)},
      {"directed-fan n=4", gen_directed_fan(4)},
      {"min-monpath l=1", gen_min_monpath(1)},
  };
}

/// Star centers: the centroid of up to four bounded faces (nudged off edge lines when
/// needed) plus one random point of the bounding box.
inline std::vector<Point> star_centers(const Pslg& g, Rng& rng, std::size_t count = 5) {
  std::vector<Point> out;
  std::vector<std::vector<VertexId>> faces;
  for (auto& w : face_walks(g))
    if (sgn(signed_area2(g, w)) > 0) faces.push_back(std::move(w));
  std::shuffle(faces.begin(), faces.end(), rng);
  for (const auto& f : faces) {
    if (out.size() + 1 >= count) break;
    Point c{0, 0};
    for (VertexId v : f) c = c + (g.points[v] - Point{0, 0});
    c = Point{c.x / static_cast<long>(f.size()), c.y / static_cast<long>(f.size())};
    for (long d = 97; d < 100000; d *= 3) {
      try {
        require_valid_center(g, c);
        out.push_back(c);
        break;
      } catch (const PreconditionError&) {
        c = Point{c.x + Rational(1, d), c.y + Rational(1, 3 * d)};
      }
    }
  }
  while (out.size() < count) out.push_back(random_center(g, rng));
  return out;
}

// ---------------------------------------------------------------------------
// Table 3: growth rates of the lower-bound subgraphs
// ---------------------------------------------------------------------------

inline Checks check_table3() {
  detail::Stopwatch sw;
  Checks out;
  const char* expected[] = {"1.61803", "1.69605", "1.70034", "1.70037", "1.70037"};
  std::vector<CertifiedReal> rates;
  for (int k = 2; k <= 6; ++k) {
    rates.push_back(growth_rate(k, 96));
    const auto& r = rates.back();
    std::string lo = r.lo.to_fixed(5, MPFR_RNDD), hi = r.hi.to_fixed(5, MPFR_RNDD);
    detail::add(out, "table3.growth_rate.k" + std::to_string(k), lo == hi && lo == expected[k - 2],
                "lambda^(1/2^(k-1)) = " + r.truncated(12) + "..., expected " + expected[k - 2]);
  }
  {
    pslgcount::detail::MpfrValue diff(256);
    mpfr_sub(diff.get(), rates[4].hi.get(), rates[3].lo.get(), MPFR_RNDU);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
    pslgcount::detail::MpfrValue other(256);
    mpfr_sub(other.get(), rates[3].hi.get(), rates[4].lo.get(), MPFR_RNDU);
    mpfr_abs(other.get(), other.get(), MPFR_RNDU);
    mpfr_max(diff.get(), diff.get(), other.get(), MPFR_RNDU);
    bool ok = mpfr_cmp_d(diff.get(), 1e-8) < 0;
    detail::add(out, "table3.k5_k6_difference", ok, "|rate(6) - rate(5)| <= " + diff.to_fixed(12, MPFR_RNDU));
  }
  {
    auto lambda = dominant_eigenvalue(transfer_matrix(5));
    bool ok = lambda == make_surd(4885, 9, 294153, 2);
    detail::add(out, "table3.lambda_m5", ok, "lambda(M_5) = " + lambda.to_string());
  }
  {
    auto m3 = transfer_matrix(3).entries;
    detail::add(out, "table3.m3", m3 == Matrix2{6, 3, 4, 3}, "M_3 = [[" + m3.a.get_str() + "," + m3.b.get_str() + "],[" + m3.c.get_str() + "," + m3.d.get_str() + "]]");
    detail::add(out, "table3.trace_m5", transfer_matrix(5).entries.trace() == 4885, "tr(M_5) = " + transfer_matrix(5).entries.trace().get_str());
  }
  bool monotone = true;
  for (std::size_t i = 1; i < rates.size(); ++i)
    if (mpfr_cmp(rates[i].hi.get(), rates[i - 1].lo.get()) < 0) monotone = false;
  detail::add(out, "table3.nondecreasing", monotone);
  double t = sw.seconds();
  detail::add(out, "table3.runtime", t < 1.0, detail::fmt_seconds(t) + " (limit 1s)");
  return out;
}

// ---------------------------------------------------------------------------
// Transfer matrices against direct measurement
// ---------------------------------------------------------------------------

inline Checks check_transfer_measurement(int measure_l = 6, int power_max_l = 10) {
  detail::Stopwatch sw;
  Checks out;
  {
    std::string bad;
    int groups = 0;
    for (int k = 2; k <= measure_l; ++k) {
      Pslg g = gen_Gk(measure_l, k - 1);
      const long width = 1L << (k - 1);
      const long count = (static_cast<long>(g.n()) - 2) / width;
      const Matrix2 expected = transfer_matrix(k).entries;
      for (long i = 0; i < count; ++i, ++groups)
        if (!(measure_group_matrix(g, k, i) == expected) && bad.empty())
          bad = "k=" + std::to_string(k) + " group " + std::to_string(i);
    }
    detail::add(out, "transfer.group_matrices.l" + std::to_string(measure_l), bad.empty(),
                bad.empty() ? std::to_string(groups) + " groups match" : "mismatch at " + bad);
  }
  {
    std::string bad;
    int cases = 0;
    for (int l = 1; l <= power_max_l; ++l) {
      for (int k = 2; k <= l + 1; ++k, ++cases) {
        Pslg g = gen_Gk(l, k - 1);
        const long q = (static_cast<long>(g.n()) - 2) / (1L << (k - 1));
        auto [x, y] = power(transfer_matrix(k).entries, static_cast<unsigned long>(q)).apply(1, 1);
        auto [px, py] = measure_boundary_counts(g);
        if ((x != px || y != py) && bad.empty()) bad = "l=" + std::to_string(l) + " k=" + std::to_string(k);
      }
    }
    detail::add(out, "transfer.boundary_vector.l1-" + std::to_string(power_max_l), bad.empty(),
                bad.empty() ? std::to_string(cases) + " (l, k) pairs match" : "mismatch at " + bad);
  }
  double t = sw.seconds();
  detail::add(out, "transfer.runtime", t < 30.0, detail::fmt_seconds(t) + " (limit 30s)");
  return out;
}

// ---------------------------------------------------------------------------
// Growth of the monotone lower-bound graph
// ---------------------------------------------------------------------------

inline Checks check_monotone_lb_growth(int max_l = 10) {
  Checks out;
  std::ostringstream trend;
  double last_rate = 0;
  for (int l = 4; l <= max_l; ++l) {
    Pslg g = gen_monotone_lb(l);
    Count c = count_monotone_paths_in_direction(g, Vec2{1, 0});
    last_rate = std::exp(log_count(c) / static_cast<double>(g.n()));
    trend << " l=" << l << ":" << last_rate;
  }
  detail::add(out, "monotone_lb.growth.l" + std::to_string(max_l), last_rate >= 1.7003,
              "count^(1/n):" + trend.str() + " (need >= 1.7003 at l=" + std::to_string(max_l) + ")");
  std::string bad;
  for (int l = 4; l <= max_l && bad.empty(); ++l) {
    Pslg g = gen_Gk(l, 1);
    auto p = directed_paths_from(directed_by(g, Vec2{1, 0}), {0});
    p[0] = 1;  // empty path at v_1
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != fibonacci(static_cast<long>(i) + 1)) {
        bad = "l=" + std::to_string(l) + " i=" + std::to_string(i + 1);
        break;
      }
  }
  detail::add(out, "monotone_lb.g1_fibonacci", bad.empty(), bad.empty() ? "p_1(v_i) = F_i for l = 4.." + std::to_string(max_l) : bad);
  return out;
}

// ---------------------------------------------------------------------------
// Tribonacci construction
// ---------------------------------------------------------------------------

inline Checks check_tribonacci(int max_n = 200) {
  Checks out;
  {
    Pslg g = gen_directed_lb(max_n);
    auto t = directed_paths_from(g, {0});
    t[0] = 1;
    bool ok = t[1] == 1 && t[2] == 2;
    for (int i = 3; i < max_n && ok; ++i) ok = t[i] == t[i - 1] + t[i - 2] + t[i - 3];
    detail::add(out, "tribonacci.recurrence.n" + std::to_string(max_n), ok, "T(6) = " + t[5].get_str());
  }
  {
    std::vector<long> sizes;
    std::vector<Count> counts;
    for (int n = 8; n <= 60; ++n) {
      sizes.push_back(n);
      counts.push_back(count_directed_paths_total(gen_directed_lb(n)));
    }
    double rate = estimate_growth(sizes, counts);
    std::ostringstream os;
    os << "estimate " << rate << " (bracket [1.80, 1.88])";
    detail::add(out, "tribonacci.growth_estimate", rate >= 1.80 && rate <= 1.88, os.str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracle equivalence
// ---------------------------------------------------------------------------

inline Checks check_oracle_equivalence(std::uint64_t seed = 7, int trials = 50, int max_n = 10) {
  Checks out;
  detail::Comparison mono("oracle.monotone_direction"), maxi("oracle.maximal_monotone_direction"),
      all("oracle.monotone_all"), star("oracle.star_center"), convex("oracle.convex_polygons"),
      pairs("oracle.convex_pairs"), directed("oracle.directed_total");
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);

  auto instances = random_instances(seed, trials, max_n);
  for (auto& c : minimal_constructions()) instances.push_back(std::move(c));

  for (const auto& inst : instances) {
    const Pslg& g = inst.graph;
    Pslg undirected{g.points, g.edges, false};
    std::vector<Vec2> dirs{{1, 0}};
    while (dirs.size() < 5) dirs.push_back(random_direction(rng));
    for (const auto& u : dirs) {
      std::string where = inst.name + " u=(" + format_rational(u.dx) + "," + format_rational(u.dy) + ")";
      mono.expect(count_monotone_paths_in_direction(undirected, u), oracle::count_monotone_in_direction(undirected, u), where);
      maxi.expect(count_maximal_monotone_in_direction(undirected, u), oracle::count_maximal_monotone_in_direction(undirected, u), where);
    }
    all.expect(count_monotone_paths_all_directions(undirected), oracle::count_monotone_all_directions(undirected), inst.name);

    auto centers = star_centers(undirected, rng);
    if (inst.name.rfind("star-lb", 0) == 0) centers.front() = star_lb_center();
    for (const auto& o : centers) {
      std::ostringstream where;
      where << inst.name << " o=" << o;
      star.expect(count_star_at_center(undirected, o), oracle::count_star_at_center(undirected, o), where.str());
    }
    convex.expect(count_convex_polygons(undirected), oracle::count_convex_polygons(undirected), inst.name);
    if (analyze_triangulation(undirected).is_edge_maximal)
      pairs.expect(count_convex_pairs(undirected), oracle::count_convex_pairs(undirected), inst.name);

    Pslg d = g.directed ? g : random_acyclic_orientation(g, rng);
    directed.expect(count_directed_paths_total(d), oracle::count_directed_paths(d), inst.name);
  }
  for (const auto* c : {&mono, &maxi, &all, &star, &convex, &pairs, &directed}) out.push_back(c->result());
  detail::add(out, "oracle.instance_count", true, std::to_string(instances.size()) + " instances");
  return out;
}

// ---------------------------------------------------------------------------
// Minimum constructions and per-instance lower bounds
// ---------------------------------------------------------------------------

inline Checks check_directed_fan(int max_n = 30) {
  std::string bad;
  for (int n = 4; n <= max_n; ++n) {
    Count c = count_directed_paths_total(gen_directed_fan(n));
    if (c != 3 * n - 5 && bad.empty()) bad = "n=" + std::to_string(n) + ": " + c.get_str();
  }
  return {{"min.directed_fan.3n-5", bad.empty(), bad.empty() ? "n = 4.." + std::to_string(max_n) : bad}};
}

inline Checks check_fan_star(int max_n = 10) {
  std::ostringstream values;
  bool ok = true;
  for (int n = 3; n <= max_n; ++n) {
    Count c = oracle::count_star_total(gen_fan(n));
    values << " n=" << n << ":" << c;
    if (c < binomial(n - 1, 2)) ok = false;
  }
  return {{"min.fan_star_total", ok, "oracle totals" + values.str()}};
}

/// Star totals against 3n + 4k - 14 + 2(k-3)^2/n and convex pairs against ceil(n/2).
inline Checks check_edge_maximal_bounds(std::uint64_t seed = 7, int trials = 50, int max_n = 10) {
  auto instances = random_instances(seed, trials, max_n);
  for (int n = 3; n <= 10; ++n) instances.push_back({"fan n=" + std::to_string(n), gen_fan(n)});
  for (int n = 5; n <= 10; ++n) instances.push_back({"min-convex-zigzag n=" + std::to_string(n), gen_min_convex_zigzag(n)});
  for (int l = 1; l <= 3; ++l) instances.push_back({"min-monpath l=" + std::to_string(l), gen_min_monpath(l)});

  std::string star_bad, pair_bad, flip_bad;
  int star_fail = 0, pair_fail = 0, flip_fail = 0;
  for (const auto& inst : instances) {
    const Pslg& g = inst.graph;
    auto info = analyze_triangulation(g);
    if (!info.is_edge_maximal) continue;
    const long n = static_cast<long>(g.n()), k = static_cast<long>(info.interior_count);
    if (n <= 12) {
      Count s = oracle::count_star_total(g);
      Count bound = ceil(star_lb_bound(n, k));
      if (s < bound) {
        ++star_fail;
        if (star_bad.empty()) star_bad = inst.name + ": " + s.get_str() + " < " + bound.get_str();
      }
    }
    Count p = count_convex_pairs(g);
    if (p < (n + 1) / 2) {
      ++pair_fail;
      if (pair_bad.empty()) pair_bad = inst.name + ": " + p.get_str() + " < " + std::to_string((n + 1) / 2);
    }
    const long flippable = n >= 4 ? (n - 3) / 2 : 0;  // ceil((n - 4) / 2)
    if (p < flippable) {
      ++flip_fail;
      if (flip_bad.empty()) flip_bad = inst.name + ": " + p.get_str() + " < " + std::to_string(flippable);
    }
  }
  std::string total = std::to_string(instances.size()) + " instances";
  return {
      {"bounds.star_total_lower_bound", star_fail == 0, star_fail ? std::to_string(star_fail) + " violations, first " + star_bad : total},
      {"bounds.convex_pairs_ceil_half_n", pair_fail == 0, pair_fail ? std::to_string(pair_fail) + " violations, first " + pair_bad : total},
      {"bounds.convex_pairs_ceil_half_n_minus_4", flip_fail == 0, flip_fail ? std::to_string(flip_fail) + " violations, first " + flip_bad : total},
  };
}

/// Directed simple-path totals against n^2 3^n, including cyclic orientations.
inline Checks check_directed_path_bound(std::uint64_t seed = 7, int trials = 30, int max_n = 10) {
  Rng rng(seed + 1);
  std::string bad;
  int cases = 0;
  for (const auto& inst : random_instances(seed + 2, trials, max_n)) {
    Pslg d = inst.graph;
    d.directed = true;
    std::bernoulli_distribution coin(0.5);
    for (auto& e : d.edges)
      if (coin(rng)) std::swap(e.first, e.second);
    ++cases;
    const long n = static_cast<long>(d.n());
    if (oracle::count_directed_paths(d) > directed_path_bound(n, n).global_cap && bad.empty()) bad = inst.name;
  }
  return {{"bounds.directed_paths_cap", bad.empty(), bad.empty() ? std::to_string(cases) + " orientations" : bad}};
}

// ---------------------------------------------------------------------------
// Circle construction
// ---------------------------------------------------------------------------

inline Checks check_min_monpath(int max_l = 8, int ratio_max_l = 6) {
  detail::Stopwatch sw;
  Checks out;
  std::string tau_bad, rec_bad, end_bad;
  for (int l = 1; l <= max_l; ++l) {
    auto t = gen_min_monpath_detailed(l);
    auto tau = measure_tau(t);
    Count prefix = 0;
    for (std::size_t i = 0; i < tau.size(); ++i) {
      if (tau[i] != 2 * pow_ui(3, i) && tau_bad.empty())
        tau_bad = "l=" + std::to_string(l) + " tau_" + std::to_string(i) + " = " + tau[i].get_str();
      if (i >= 1 && tau[i] != 2 * prefix + 2 && rec_bad.empty()) rec_bad = "l=" + std::to_string(l) + " i=" + std::to_string(i);
      prefix += tau[i];
    }
    // Maximal upward paths: sources and sinks of the upward orientation.
    Pslg up = directed_by(t.graph, Vec2{0, 1});
    std::vector<int> indeg(up.n(), 0), outdeg(up.n(), 0);
    for (auto [u, v] : up.edges) ++outdeg[u], ++indeg[v];
    for (VertexId v = 0; v < static_cast<VertexId>(up.n()); ++v) {
      bool source = indeg[v] == 0, sink = outdeg[v] == 0;
      if (source && v != t.o && end_bad.empty()) end_bad = "l=" + std::to_string(l) + " source " + std::to_string(v);
      if (sink && v != t.a && v != t.b && end_bad.empty()) end_bad = "l=" + std::to_string(l) + " sink " + std::to_string(v);
    }
  }
  detail::add(out, "monpath.tau_closed_form", tau_bad.empty(), tau_bad.empty() ? "tau_i = 2*3^i for l <= " + std::to_string(max_l) : tau_bad);
  detail::add(out, "monpath.tau_recurrence", rec_bad.empty(), rec_bad);
  detail::add(out, "monpath.upward_paths_o_to_ab", end_bad.empty(), end_bad);

  std::ostringstream ratios;
  double worst = 0;
  for (int l = 2; l <= ratio_max_l; ++l) {
    Pslg g = gen_min_monpath(l);
    const double n = static_cast<double>(g.n());
    Count c = count_monotone_paths_all_directions(g);
    double lg = std::log2(n);
    double ratio = std::exp(log_count(c) - 2 * std::log2(3.0) * std::log(n)) / (lg * lg);
    worst = std::max(worst, ratio);
    ratios << " l=" << l << ":" << c << "/" << ratio;
  }
  detail::add(out, "monpath.growth_ratio", worst <= 10.0, "count/ratio:" + ratios.str() + " (limit 10)");
  double t = sw.seconds();
  detail::add(out, "monpath.runtime", t < 300.0, detail::fmt_seconds(t) + " (limit 300s)");
  return out;
}

// ---------------------------------------------------------------------------
// Transform pipeline
// ---------------------------------------------------------------------------

inline Checks check_transform_pipeline(std::uint64_t seed = 7, int trials = 20, int max_n = 12) {
  Rng rng(seed + 3);
  std::uniform_int_distribution<int> size(4, std::max(4, max_n));
  std::string step_bad, final_bad, bound_bad, corrected_bad;
  int steps = 0;
  for (int t = 0; t < trials; ++t) {
    Pslg g = random_edge_maximal(size(rng), rng);
    std::string name = "trial " + std::to_string(t) + " n=" + std::to_string(g.n());
    PipelineReport r;
    try {
      r = run_pipeline(g);
    } catch (const TransformError& e) {
      if (step_bad.empty()) step_bad = name + ": " + e.what();
      continue;
    }
    steps += static_cast<int>(r.log.size());
    if (!r.flips_nondecreasing || !r.lemma2_holds || !r.lemma3_holds) {
      if (step_bad.empty()) step_bad = name + ": flip stage";
    }
    if ((r.final_max_outdegree > 3 || !r.final_distances_ok) && final_bad.empty()) final_bad = name;
    if (r.original_count > r.tribonacci_sum && bound_bad.empty())
      bound_bad = name + ": " + r.original_count.get_str() + " > " + r.tribonacci_sum.get_str();
    if (!(r.original_count <= r.sheared_count && r.sheared_count <= r.normalized_count &&
          r.normalized_count <= r.final_count && r.final_count <= r.tribonacci_paths) &&
        corrected_bad.empty())
      corrected_bad = name;
  }
  return {
      {"pipeline.steps_monotone_invariants", step_bad.empty(), step_bad.empty() ? std::to_string(steps) + " logged steps" : step_bad},
      {"pipeline.final_outdegree", final_bad.empty(), final_bad},
      {"pipeline.tribonacci_sum_bound", bound_bad.empty(), bound_bad},
      {"pipeline.count_chain", corrected_bad.empty(), corrected_bad},
  };
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle-equivalence", "constructions", "table3", "transform-pipeline", "bounds"};
  return names;
}

inline Checks run_suite(const std::string& suite, const Options& opt) {
  Checks out;
  auto append = [&](Checks cs) { out.insert(out.end(), cs.begin(), cs.end()); };
  if (suite == "oracle-equivalence") {
    append(check_oracle_equivalence(opt.seed, opt.trials, opt.max_n));
  } else if (suite == "constructions") {
    append(check_transfer_measurement(opt.max_l, std::max(opt.max_l, 1)));
    append(check_monotone_lb_growth(std::max(opt.max_l, 4)));
    append(check_tribonacci());
    append(check_directed_fan());
    append(check_fan_star());
    append(check_min_monpath(std::min(opt.max_l, 8), std::min(opt.max_l, 6)));
  } else if (suite == "table3") {
    append(check_table3());
  } else if (suite == "transform-pipeline") {
    append(check_transform_pipeline(opt.seed, opt.pipeline_trials, opt.pipeline_max_n));
  } else if (suite == "bounds") {
    append(check_edge_maximal_bounds(opt.seed, opt.trials, opt.max_n));
    append(check_directed_path_bound(opt.seed));
  } else {
    throw PreconditionError("unknown suite '" + suite + "'");
  }
  sort_checks(out);
  return out;
}

}  // namespace pslgcount::verify
