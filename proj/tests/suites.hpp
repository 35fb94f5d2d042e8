#pragma once

// Randomized suites shared by the doctest binaries and the acceptance run.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

#include "cuntz/morphism.hpp"
#include "cuntz/report.hpp"
#include "cuntz/reps.hpp"
#include "support.hpp"

namespace suites {

using namespace cuntz;

inline WordPermutation random_sigma(std::mt19937& rng, int n, int l) {
  std::size_t points = 1;
  for (int i = 0; i < l; ++i) points *= static_cast<std::size_t>(n);
  std::vector<int> image(points);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return WordPermutation(n, l, image);
}

/// Cuntz relations of the images, checked on the word-action oracle.
inline bool oracle_cuntz_relations(const Morphism& m) {
  const int n = m.alphabet_size();
  CuntzPoly sum(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const CuntzPoly expect = i == j ? CuntzPoly::identity(n) : CuntzPoly(n);
      if (!oracle::product_is(m.image(i).adjoint(), m.image(j), expect)) return false;
    }
  }
  // sum_i m(s_i) m(s_i)^* = I: every word is hit by exactly one range
  const std::size_t d = 3;
  for (const auto& w : oracle::all_words(n, d)) {
    oracle::WordVec total;
    const oracle::WordVec e{{w, Scalar(1)}};
    for (int i = 1; i <= n; ++i)
      for (const auto& [k, c] : oracle::act(m.image(i), oracle::act(m.image(i).adjoint(), e))) total[k] += c;
    std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
    if (total != e) return false;
  }
  return true;
}

/// Bounds and certificates of one branching P(J) . m.
inline void check_branching(Report& r, const std::string& tag, const PermRep& rep, const Morphism& m, int l) {
  const BranchResult b = branch(rep, m);
  std::size_t bound = 1;
  for (int i = 1; i < l; ++i) bound *= static_cast<std::size_t>(m.alphabet_size());
  const std::size_t big_m = b.cycles.size() + b.chains.size();
  r.add(tag + " 1 <= M <= N^(l-1)", big_m >= 1 && big_m <= bound, "M = " + std::to_string(big_m));
  const std::size_t k = rep.length();
  for (const auto& c : b.cycles) {
    const bool div = c.word.size() % k == 0 && c.word.size() / k >= 1 && c.word.size() / k <= bound;
    r.add(tag + " length of " + c.word.to_string(), div, std::to_string(c.word.size()) + " vs k = " + std::to_string(k));
  }
  for (const auto& cert : b.certificates) {
    Vector expect;
    expect.add(cert.gp_vector, cert.phase, Scalar(1));
    const bool fixed = act(apply_word(m, cert.word), Vector::basis(cert.gp_vector), rep) == expect;
    r.add(tag + " certificate " + cert.component, cert.verified && fixed, "t_W v != v");
  }
}

/// Cuntz relations for random sigma in S_{3,2}; bounds, divisibility and
/// certificates on every branching of P(1), P(2), P(12).
inline Report property_suite(std::size_t count = 200, std::uint32_t seed = 20240917) {
  Report r{"properties", {}};
  std::mt19937 rng(seed);
  std::vector<std::pair<WordPermutation, int>> sigmas;
  for (const auto& s : all_word_permutations(2, 2)) sigmas.emplace_back(s, 2);
  for (std::size_t i = 0; i < count; ++i) sigmas.emplace_back(random_sigma(rng, 3, 2), 3);
  for (const auto& [sigma, n] : sigmas) {
    const PermEndo e(sigma);
    const std::string tag = "N=" + std::to_string(n) + " psi_" + sigma.to_cycle_string();
    if (n == 3) {
      r.add(tag + " Cuntz relations", satisfies_cuntz_relations(e.morphism().images()) &&
                                          oracle_cuntz_relations(e.morphism()));
    }
    for (const auto& j : {Word(n, {1}), Word(n, {2}), Word(n, {1, 2})})
      check_branching(r, tag + " P(" + j.to_string() + ")", PermRep::cycle(j), e.morphism(), 2);
  }
  return r;
}

/// Random (sigma, J), N = 2, l = 2, |J| <= 3, against the brute-force
/// enumerator over all labels with |w| <= 2 l |J|.
inline Report oracle_suite(std::size_t count = 20, std::uint32_t seed = 977) {
  Report r{"oracle", {}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len(1, 3), letter(1, 2);
  for (std::size_t t = 0; t < count; ++t) {
    const WordPermutation sigma = random_sigma(rng, 2, 2);
    Word j;
    do {
      std::vector<int> v(static_cast<std::size_t>(len(rng)));
      for (auto& x : v) x = letter(rng);
      j = Word(2, v);
    } while (!is_primitive(j));
    std::map<std::string, std::string> inv;
    for (int a = 0; a < 4; ++a) inv[oracle::letters(sigma.word_of(sigma(a)))] = oracle::letters(sigma.word_of(a));
    const oracle::Brute brute(oracle::letters(j), inv, 2);
    const Fingerprint expect = oracle::to_fingerprint(brute.cycles(2 * 2 * j.size()), 2);
    const Fingerprint got = branch(PermRep::cycle(j), PermEndo(sigma).morphism()).fingerprint;
    r.add("P(" + j.to_string() + ") . psi_" + sigma.to_cycle_string(), got == expect,
          "branch " + got.to_string() + ", oracle " + expect.to_string());
  }
  return r;
}

}  // namespace suites
