// One line per acceptance criterion: PASS/FAIL, checks, wall time and limit.
// Failing checks are listed after the summary. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cuntz/classify.hpp"
#include "suites.hpp"

using namespace cuntz;

namespace {

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::function<Report()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table 1: images and Ad u conjugates of all 24 psi_sigma", 1, [] { return verify_table1(); }},
      {2, "Table 2: branching on O_2", 5, [] { return verify_table2(); }},
      {3, "Restriction of P(12), P(1122), P((12)^inf) to UHF_2", 1, [] { return verify_theorem13(); }},
      {4, "P(J^l) phase decomposition, |J| <= 3, l <= 4", 1, [] { return verify_decompose_power(3, 4); }},
      {5, "Table 3: branching on UHF_2", 5, [] { return verify_table3(); }},
      {6, "Counts (20, 12, 4, 4, 6) and UHF identities to level 5", 30, [] { return verify_theorem14(); }},
      {7, "Table 4: partition by psi(s1 s1')", 1, [] { return verify_table4(); }},
      {8, "Nakanishi branching laws", 5, [] { return verify_nakanishi(); }},
      {9, "CAR suite: relations, formulas, Tables 6 and 7, mixtures, vacua", 10, [] { return verify_car_suite(); }},
      {10, "Table 8: fermion branching", 5, [] { return verify_table8(); }},
      {11, "Property suite: 200 random sigma in S_{3,2}", 30, [] { return suites::property_suite(200); }},
      {12, "Oracle cross-check: 20 random (sigma, J)", 60, [] { return suites::oracle_suite(20); }},
  };

  std::vector<std::pair<int, Report>> failed;
  int passed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && r.ok() && !r.checks.empty() && secs < c.limit;
    passed += ok;
    std::printf("%s  %2d  %-66s %4zu/%-4zu checks  %7.3f s (limit %g s)%s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                r.checks.size() - r.failures(), r.checks.size(), secs, c.limit,
                error.empty() ? "" : ("  error: " + error).c_str());
    std::fflush(stdout);
    if (!ok) failed.emplace_back(c.id, std::move(r));
  }
  std::printf("\n%d/%zu criteria pass\n", passed, criteria.size());
  for (const auto& [id, r] : failed) {
    std::printf("\ncriterion %d:\n", id);
    for (const auto& c : r.checks)
      if (!c.pass) std::printf("  %s: %s\n", c.name.c_str(), c.detail.c_str());
  }
  return failed.empty() ? 0 : 1;
}
