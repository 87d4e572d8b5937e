#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pslgcount/io.hpp"
#include "pslgcount/pslgcount.hpp"
#include "pslgcount/verify.hpp"

using namespace pslgcount;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 7;
  std::size_t max_n = oracle::kDefaultLimit;
  long precision = 64;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

struct Report {
  json doc = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::vector<std::string>& argv) {
    doc["command"] = argv;
    doc["results"] = json::object();
  }
  void finish() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    doc["timings"] = {{"total_seconds", s}};
  }
};

Vec2 parse_direction(const std::string& dx, const std::string& dy) {
  Vec2 u{parse_rational(dx), parse_rational(dy)};
  if (u.is_zero()) throw PreconditionError("direction must be nonzero");
  return u;
}

// Splits "metric [params...] input" and applies --dir / --at overrides.
struct CountArgs {
  std::string metric;
  std::vector<std::string> params;
  std::string input;
};

CountArgs split_count_args(const std::vector<std::string>& args, const std::vector<std::string>& dir,
                           const std::vector<std::string>& at) {
  if (args.size() < 2) throw UsageError("expected: <metric> [params] <input>");
  CountArgs c{args.front(), {args.begin() + 1, args.end() - 1}, args.back()};
  static const std::vector<std::string> metrics{"xmonotone",  "monotone-dir", "monotone-all", "maximal-monotone-dir",
                                                "directed-paths", "star-center", "convex", "convex-pairs"};
  if (std::find(metrics.begin(), metrics.end(), c.metric) == metrics.end()) throw UsageError("unknown metric '" + c.metric + "'");
  const bool wants_dir = c.metric == "monotone-dir" || c.metric == "maximal-monotone-dir";
  const bool wants_at = c.metric == "star-center";
  if (wants_dir && !dir.empty()) c.params = dir;
  if (wants_at && !at.empty()) c.params = at;
  const std::size_t need = (wants_dir || wants_at) ? 2 : 0;
  if (c.params.size() != need)
    throw UsageError("metric '" + c.metric + "' takes " + std::to_string(need) + " parameters, got " + std::to_string(c.params.size()));
  return c;
}

Count run_count(const CountArgs& a, const Pslg& g) {
  require_valid(g);
  if (a.metric == "xmonotone") return count_monotone_paths_in_direction(g, Vec2{1, 0});
  if (a.metric == "monotone-dir") return count_monotone_paths_in_direction(g, parse_direction(a.params[0], a.params[1]));
  if (a.metric == "maximal-monotone-dir") return count_maximal_monotone_in_direction(g, parse_direction(a.params[0], a.params[1]));
  if (a.metric == "monotone-all") return count_monotone_paths_all_directions(g);
  if (a.metric == "directed-paths") return count_directed_paths_total(g);
  if (a.metric == "star-center") return count_star_at_center(g, Point{parse_rational(a.params[0]), parse_rational(a.params[1])});
  if (a.metric == "convex") return count_convex_polygons(g);
  return count_convex_pairs(g);
}

json vertex_list(const std::vector<VertexId>& vs) { return json(vs); }

// Oracle count plus up to three witnesses.
Count run_oracle(const CountArgs& a, const Pslg& g, std::size_t limit, json& witnesses) {
  require_valid(g);
  oracle::check_limit(g, limit, a.metric.c_str());
  witnesses = json::array();
  auto keep = [&](const std::vector<VertexId>& p) {
    if (witnesses.size() < 3) witnesses.push_back(vertex_list(p));
  };
  auto monotone_in = [&](const Vec2& u) {
    return [&, u](const std::vector<VertexId>& p) {
      for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (dot_sign(g.points[p[i + 1]] - g.points[p[i]], u) <= 0) return false;
      return true;
    };
  };
  auto sample_paths = [&](auto pred) {
    oracle::for_each_simple_path(g, [&](const std::vector<VertexId>& p) {
      if (pred(p)) keep(p);
      else if (!g.directed) {
        std::vector<VertexId> r(p.rbegin(), p.rend());
        if (pred(r)) keep(r);
      }
    }, limit);
  };
  auto sample_cycles = [&](auto pred) {
    oracle::for_each_simple_cycle(g, [&](const std::vector<VertexId>& c) {
      if (pred(c)) keep(c);
    }, limit);
  };

  if (a.metric == "xmonotone" || a.metric == "monotone-dir" || a.metric == "maximal-monotone-dir") {
    Vec2 u = a.metric == "xmonotone" ? Vec2{1, 0} : parse_direction(a.params[0], a.params[1]);
    sample_paths(monotone_in(u));
    return a.metric == "maximal-monotone-dir" ? oracle::count_maximal_monotone_in_direction(g, u, limit)
                                              : oracle::count_monotone_in_direction(g, u, limit);
  }
  if (a.metric == "monotone-all") {
    sample_paths([&](const std::vector<VertexId>& p) { return oracle::is_monotone(p, g).has_value(); });
    return oracle::count_monotone_all_directions(g, limit);
  }
  if (a.metric == "directed-paths") {
    sample_paths([](const std::vector<VertexId>&) { return true; });
    return oracle::count_directed_paths(g, limit);
  }
  if (a.metric == "star-center") {
    Point o{parse_rational(a.params[0]), parse_rational(a.params[1])};
    require_valid_center(g, o);
    sample_cycles([&](const std::vector<VertexId>& c) { return oracle::kernel_contains(c, g, o); });
    return oracle::count_star_at_center(g, o, limit);
  }
  if (a.metric == "convex") {
    sample_cycles([&](const std::vector<VertexId>& c) { return oracle::is_convex(c, g); });
    return oracle::count_convex_polygons(g, limit);
  }
  return oracle::count_convex_pairs(g, limit);
}

void emit(const Globals& gl, Report& report, const std::string& text) {
  report.finish();
  if (gl.json) std::cout << report.doc.dump(2) << "\n";
  else std::cout << text;
}

std::string certified_digits(const CertifiedReal& r, long precision) {
  int digits = std::max(1, static_cast<int>(static_cast<double>(precision) * 0.30103) - 1);
  return r.truncated(digits);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> argv_echo(argv + 1, argv + argc);
  CLI::App app{"Exact path and polygon counts in plane straight-line graphs"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "Emit a JSON run report");
  app.add_option("--seed", gl.seed, "Seed for random instances (default 7)");
  app.add_option("--max-n", gl.max_n, "Vertex limit for brute-force enumeration (default 12)");
  app.add_option("--precision", gl.precision, "Bits of certified precision (default 64)")->check(CLI::Range(1L, 100000L));

  // generate
  auto* gen = app.add_subcommand("generate", "Write a named construction as a graph file");
  std::string gen_name, gen_out;
  long gen_l = -1, gen_n = -1, gen_k = -1;
  std::vector<std::string> names;
  for (const auto& [key, value] : construction_names()) names.push_back(key);
  names.push_back("random");
  gen->add_option("name", gen_name, "Construction name")->required()->check(CLI::IsMember(names));
  gen->add_option("--l", gen_l, "Level");
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--k", gen_k, "Sublevel");
  gen->add_option("-o,--output", gen_out, "Output file (default: stdout)");

  // count / oracle
  std::vector<std::string> count_args, count_dir, count_at, oracle_args, oracle_dir, oracle_at;
  auto* cnt = app.add_subcommand("count", "Exact count by the fast algorithms");
  cnt->add_option("args", count_args, "<metric> [params] <input>")->required();
  cnt->add_option("--dir", count_dir, "Direction DX DY")->expected(2)->allow_extra_args(false);
  cnt->add_option("--at", count_at, "Star center X Y")->expected(2)->allow_extra_args(false);
  cnt->footer("Metrics: xmonotone, monotone-dir DX DY, monotone-all, maximal-monotone-dir DX DY,\n"
              "directed-paths, star-center X Y, convex, convex-pairs. Rationals use p or p/q.");
  auto* orc = app.add_subcommand("oracle", "Brute-force count with witness samples");
  orc->add_option("args", oracle_args, "<metric> [params] <input>")->required();
  orc->add_option("--dir", oracle_dir, "Direction DX DY")->expected(2)->allow_extra_args(false);
  orc->add_option("--at", oracle_at, "Star center X Y")->expected(2)->allow_extra_args(false);

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  verify::Options vopt;
  ver->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--trials", vopt.trials, "Random instances (default 50)")->check(CLI::Range(1, 100000));
  ver->add_option("--max-l", vopt.max_l, "Largest construction level (default 6)")->check(CLI::Range(1, 10));

  // analyze
  auto* ana = app.add_subcommand("analyze", "Transfer matrices, growth rates and bound formulas");
  std::string what;
  long an_k = -1, an_n = -1, an_l = -1;
  ana->add_option("what", what, "Quantity")
      ->required()
      ->check(CLI::IsMember({"transfer-matrix", "eigenvalue", "growth-rate", "tribonacci-root", "tribonacci", "fibonacci",
                             "star-bound", "directed-bound", "growth-estimate"}));
  ana->add_option("--k", an_k, "Matrix level or interior vertex count");
  ana->add_option("--n", an_n, "Vertex count");
  ana->add_option("--l", an_l, "Level or path length");

  for (auto* sub : {gen, cnt, orc, ver, ana}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Report report(argv_echo);
  report.doc["seed"] = gl.seed;
  try {
    if (*gen) {
      try {
        ConstructionSpec spec{};
        Pslg g;
        if (gen_name == "random") {
          if (gen_n < 3) throw PreconditionError("random: --n must be >= 3");
          Rng rng(gl.seed);
          g = random_edge_maximal(static_cast<int>(gen_n), rng);
        } else {
          spec.name = parse_construction_name(gen_name);
          if (gen_l >= 0) spec.params["l"] = gen_l;
          if (gen_n >= 0) spec.params["n"] = gen_n;
          if (gen_k >= 0) spec.params["k"] = gen_k;
          g = generate(spec);
        }
        auto violation = validate(g);
        report.doc["results"]["n"] = std::to_string(g.n());
        report.doc["results"]["edges"] = std::to_string(g.m());
        report.doc["verdicts"] = {{"validate", violation ? "FAIL" : "PASS"}};
        if (gen_out.empty()) {
          std::cout << serialize_pslg(g);
          if (gl.json) std::cerr << report.doc.dump(2) << "\n";
          else std::cerr << "n=" << g.n() << " edges=" << g.m() << " valid=" << (violation ? "no" : "yes") << "\n";
        } else {
          write_pslg(g, gen_out);
          emit(gl, report, "n=" + std::to_string(g.n()) + " edges=" + std::to_string(g.m()) +
                               " valid=" + (violation ? "no" : "yes") + "\n");
        }
        return violation ? kExitFailure : kExitOk;
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
    }

    if (*cnt || *orc) {
      const bool use_oracle = static_cast<bool>(*orc);
      CountArgs a = use_oracle ? split_count_args(oracle_args, oracle_dir, oracle_at) : split_count_args(count_args, count_dir, count_at);
      const std::string text = read_file(a.input);
      report.doc["input_hash"] = fnv1a(text);
      Pslg g = parse_pslg(text);
      json witnesses;
      Count c = use_oracle ? run_oracle(a, g, gl.max_n, witnesses) : run_count(a, g);
      report.doc["results"][a.metric] = c.get_str();
      if (use_oracle) report.doc["witnesses"] = witnesses;
      std::string out = c.get_str() + "\n";
      if (use_oracle)
        for (const auto& w : witnesses) out += "witness " + w.dump() + "\n";
      emit(gl, report, out);
      return kExitOk;
    }

    if (*ver) {
      vopt.seed = gl.seed;
      vopt.max_n = static_cast<int>(std::min<std::size_t>(gl.max_n, 12));
      auto checks = verify::run_suite(suite, vopt);
      std::string text;
      json verdicts = json::object();
      for (const auto& c : checks) {
        verdicts[c.name] = {{"pass", c.pass}, {"detail", c.detail}};
        text += std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  " + c.detail) + "\n";
      }
      const bool ok = verify::all_pass(checks);
      report.doc["verdicts"] = verdicts;
      report.doc["results"]["suite"] = suite;
      report.doc["results"]["passed"] = ok ? "true" : "false";
      emit(gl, report, text + (ok ? "PASS " : "FAIL ") + suite + "\n");
      return ok ? kExitOk : kExitFailure;
    }

    // analyze
    auto need = [](long v, const char* flag) {
      if (v < 0) throw UsageError(std::string("analyze: missing ") + flag);
      return v;
    };
    auto& res = report.doc["results"];
    std::ostringstream text;
    try {
      if (what == "transfer-matrix" || what == "eigenvalue" || what == "growth-rate") {
        const int k = static_cast<int>(need(an_k, "--k"));
        auto m = transfer_matrix(k).entries;
        auto lambda = dominant_eigenvalue(m);
        res["k"] = std::to_string(k);
        res["matrix"] = {{m.a.get_str(), m.b.get_str()}, {m.c.get_str(), m.d.get_str()}};
        res["lambda"] = lambda.to_string();
        text << "k=" << k << "\nmatrix=[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]\nlambda=(" << lambda.p << " + "
             << lambda.q << "*sqrt(" << lambda.r << "))/" << lambda.s << "\n";
        if (what == "growth-rate") {
          auto r = growth_rate(k, gl.precision);
          res["growth_rate"] = certified_digits(r, gl.precision);
          res["precision_bits"] = std::to_string(gl.precision);
          text << "growth_rate=" << res["growth_rate"].get<std::string>() << "\n";
        }
      } else if (what == "tribonacci-root") {
        auto [lo, hi] = tribonacci_root(gl.precision);
        CertifiedReal r{pslgcount::detail::MpfrValue(gl.precision + 16), pslgcount::detail::MpfrValue(gl.precision + 16)};
        mpfr_set_q(r.lo.get(), lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi.get(), hi.get_mpq_t(), MPFR_RNDU);
        res["alpha"] = certified_digits(r, gl.precision);
        res["precision_bits"] = std::to_string(gl.precision);
        text << "alpha=" << res["alpha"].get<std::string>() << "\n";
      } else if (what == "tribonacci" || what == "fibonacci") {
        const long n = need(an_n, "--n");
        if (what == "tribonacci") {
          res["B"] = tribonacci_bound(n).get_str();
          res["B_sum"] = tribonacci_bound_sum(n).get_str();
          text << "B(" << n << ")=" << res["B"].get<std::string>() << "\nsum=" << res["B_sum"].get<std::string>() << "\n";
        } else {
          res["F"] = fibonacci(n).get_str();
          text << "F(" << n << ")=" << res["F"].get<std::string>() << "\n";
        }
        res["n"] = std::to_string(n);
      } else if (what == "star-bound") {
        const long n = need(an_n, "--n"), k = need(an_k, "--k");
        Rational b = star_lb_bound(n, k);
        res["n"] = std::to_string(n);
        res["k"] = std::to_string(k);
        res["bound"] = format_rational(b);
        res["ceil"] = ceil(b).get_str();
        text << format_rational(b) << "\n";
      } else if (what == "directed-bound") {
        const long n = need(an_n, "--n"), l = need(an_l, "--l");
        auto b = directed_path_bound(n, l);
        res["n"] = std::to_string(n);
        res["l"] = std::to_string(l);
        res["product_bound"] = b.product_bound.get_str();
        res["global_cap"] = b.global_cap.get_str();
        text << "product_bound=" << b.product_bound << "\nglobal_cap=" << b.global_cap << "\n";
      } else {  // growth-estimate over the directed construction
        const long hi = an_n < 0 ? 60 : an_n;
        if (hi < 10) throw PreconditionError("growth-estimate: --n must be >= 10");
        std::vector<long> sizes;
        std::vector<Count> counts;
        for (long n = 8; n <= hi; ++n) {
          sizes.push_back(n);
          counts.push_back(count_directed_paths_total(gen_directed_lb(static_cast<int>(n))));
        }
        std::ostringstream est;
        est.precision(6);
        est << std::fixed << estimate_growth(sizes, counts);
        res["estimate"] = est.str();
        res["range"] = "8.." + std::to_string(hi);
        text << "estimate=" << est.str() << "\n";
      }
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    emit(gl, report, text.str());
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
