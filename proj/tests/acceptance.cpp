// One line per acceptance criterion. Exit status is zero iff the set of failing
// criteria equals the list given by --expect-fail (empty by default).

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <iostream>
#include <string>
#include <vector>

#include "pslgcount/verify.hpp"

using namespace pslgcount;
using verify::Checks;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<Checks()> run;
};

Checks concat(std::initializer_list<Checks> parts) {
  Checks out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--expect-fail") {
      std::stringstream ss(argv[++i]);
      for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) expected_failures.insert(std::stoi(tok));
    }

  const std::uint64_t seed = 7;
  std::vector<Criterion> criteria{
      {1, "growth-rate table and exact eigenvalue", [] { return verify::check_table3(); }},
      {2, "transfer matrices agree with measured path counts", [] { return verify::check_transfer_measurement(6, 10); }},
      {3, "monotone lower-bound growth and Fibonacci level", [] { return verify::check_monotone_lb_growth(10); }},
      {4, "tribonacci construction", [] { return verify::check_tribonacci(200); }},
      {5, "fast counters equal brute-force oracle", [&] { return verify::check_oracle_equivalence(seed, 50, 10); }},
      {6, "minimum constructions and per-instance lower bounds",
       [&] {
         return concat({verify::check_directed_fan(30), verify::check_fan_star(10),
                        verify::check_edge_maximal_bounds(seed, 50, 10)});
       }},
      {7, "circle construction laws", [] { return verify::check_min_monpath(8, 6); }},
      {8, "flip and shift pipeline", [&] { return verify::check_transform_pipeline(seed, 20, 12); }},
  };

  std::set<int> failed;
  bool finite_ok = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Checks checks;
    std::string error;
    try {
      checks = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = error.empty() && verify::all_pass(checks);
    if (!pass) failed.insert(c.id);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << secs << "s)\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& ch : checks) {
      std::cout << "    " << (ch.pass ? "ok  " : "FAIL") << " " << ch.name;
      if (!ch.detail.empty()) std::cout << ": " << ch.detail;
      std::cout << "\n";
      // Growth trends and per-instance inequalities stand in for the asymptotic claims.
      if (!ch.pass && (ch.name.rfind("monotone_lb.", 0) == 0 || ch.name.rfind("tribonacci.", 0) == 0 ||
                       ch.name.rfind("bounds.star", 0) == 0 || ch.name.rfind("monpath.growth", 0) == 0 ||
                       ch.name == "pipeline.count_chain"))
        finite_ok = false;
    }
  }
  std::cout << (finite_ok ? "PASS" : "FAIL")
            << " criterion 9: asymptotic claims covered by finite growth trends and per-instance bounds\n";
  if (!finite_ok) failed.insert(9);

  if (failed == expected_failures) return 0;
  std::cout << "failing criteria differ from the expected set {";
  for (int id : expected_failures) std::cout << ' ' << id;
  std::cout << " }\n";
  return 1;
}
