#include <doctest.h>

#include "suites.hpp"

TEST_CASE("property suite") {
  const auto r = suites::property_suite(60, 11);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("oracle suite") {
  const auto r = suites::oracle_suite(30, 5);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("brute force reproduces hand-derived branchings") {
  // psi_12 on P(1): sigma^-1 swaps 11 and 12
  const oracle::Brute b("1", {{"11", "12"}, {"12", "11"}, {"21", "21"}, {"22", "22"}}, 2);
  CHECK(b.cycles(4) == std::multiset<std::string>{"12"});
  // identity on P(12)
  const oracle::Brute id("12", {{"11", "11"}, {"12", "12"}, {"21", "21"}, {"22", "22"}}, 2);
  CHECK(id.cycles(6) == std::multiset<std::string>{"12"});
}
