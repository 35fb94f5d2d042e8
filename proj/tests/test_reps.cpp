#include <doctest.h>

#include "cuntz/parse.hpp"
#include "cuntz/reps.hpp"
#include "support.hpp"

using namespace cuntz;

namespace {
Word w2(std::initializer_list<int> l) { return Word(2, l); }
Fingerprint fp(const char* t, int n = 2) { return *parse_fingerprint(t, n); }
Morphism psi(const char* s) { return perm_endo(s).morphism(); }
}  // namespace

TEST_CASE("action on the labeled basis") {
  const PermRep p1 = PermRep::cycle(w2({1}));
  const Vector omega1 = Vector::basis(p1.omega());
  CHECK(act(parse_poly("s1"), omega1, p1) == omega1);
  CHECK(act(parse_poly("s2'"), omega1, p1).is_zero());

  const PermRep p12 = PermRep::cycle(w2({1, 2}));
  const Vector omega = Vector::basis(p12.omega());
  CHECK(act(parse_poly("s2' s1'"), omega, p12) == omega);
  CHECK(act(parse_poly("s1 s2"), omega, p12) == omega);
  const Vector e2 = act(parse_poly("s1'"), omega, p12);
  CHECK_FALSE(e2.is_zero());
  CHECK(e2 == act(parse_poly("s2"), omega, p12));
  CHECK(act(parse_poly("s2'"), omega, p12).is_zero());
  CHECK(act(parse_poly("s1 s1'"), omega, p12) == omega);
  // phases: P(1; 1/2) has s1 Omega = -Omega
  const PermRep pm = PermRep::cycle(w2({1}), Phase(1, 2));
  Vector minus = Vector::basis(pm.omega());
  minus *= Scalar(-1);
  CHECK(act(parse_poly("s1"), Vector::basis(pm.omega()), pm) == minus);
}

TEST_CASE("action is a representation on sampled labels") {
  const PermRep rep = PermRep::cycle(w2({1, 1, 2}));
  const std::vector<CuntzPoly> xs = {parse_poly("s1 s2'"), parse_poly("s2 s2 s1'"), parse_poly("s1' + s2")};
  std::vector<Vector> vs = {Vector::basis(rep.omega())};
  for (const char* t : {"s2", "s2 s1", "s1'", "s2 s2 s1"}) vs.push_back(act(parse_poly(t), vs[0], rep));
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (const auto& v : vs) CHECK(act(x * y, v, rep) == act(x, act(y, v, rep), rep));
}

TEST_CASE("composition with an endomorphism") {
  const PermRep p1 = PermRep::cycle(w2({1}));
  const BranchSystem id_sys = compose_with_endo(p1, psi("id"));
  CHECK(id_sys.t(1, p1.omega()).first == p1.omega());
  const BranchSystem sys = compose_with_endo(p1, psi("12"));
  // Omega returns after two steps of its t-orbit: t_1 t_2 Omega = Omega
  const auto a = sys.t(2, p1.omega());
  const auto b = sys.t(1, a.first);
  CHECK(b.first == p1.omega());
  CHECK(sys.t(1, p1.omega()).first != p1.omega());
  // predecessors invert t
  for (int i = 1; i <= 2; ++i) {
    const auto [v, ph] = sys.t(i, p1.omega());
    const auto st = sys.pred(v);
    CHECK(st.letter == i);
    CHECK(st.prev == p1.omega());
  }
}

TEST_CASE("branching laws") {
  CHECK(branch(PermRep::cycle(w2({1})), psi("34")).fingerprint == fp("P(1) + P(2)"));
  CHECK(branch(PermRep::cycle(w2({1, 2})), psi("142")).fingerprint == fp("P(11) + P(22)"));
  CHECK(branch(PermRep::cycle(Word(3, {1})), nakanishi().morphism()).fingerprint == fp("P(3) + P(12)", 3));
  CHECK(branch(PermRep::cycle(w2({1})), psi("12")).fingerprint == fp("P(12)"));
  CHECK(branch(PermRep::cycle(w2({1, 2})), psi("13")).fingerprint == fp("P(11)"));
  CHECK(branch(PermRep::cycle(w2({2})), psi("id")).fingerprint == fp("P(2)"));
  // chains give chains
  const auto ch = branch(PermRep::chain(parse_evword("(12)^inf", 2)), psi("id"));
  CHECK(ch.fingerprint.size() == 1);
}

TEST_CASE("serial and parallel searches agree") {
  for (const auto& sigma : all_word_permutations(2, 2))
    for (const Word& j : {w2({1}), w2({1, 2}), w2({1, 1, 2})}) {
      const BranchSystem sys(PermRep::cycle(j), PermEndo(sigma).morphism());
      CHECK(branch(sys).fingerprint == branch_serial(sys).fingerprint);
    }
}

TEST_CASE("certificates are fixed points") {
  const PermRep rep = PermRep::cycle(w2({1, 2}));
  const Morphism m = psi("1243");
  const auto r = branch(rep, m);
  REQUIRE_FALSE(r.certificates.empty());
  for (const auto& c : r.certificates) {
    CHECK(c.verified);
    // independently: pi(m(s_W)) v = phase v through the representation
    Vector v = Vector::basis(c.gp_vector);
    Vector expect;
    expect.add(c.gp_vector, c.phase, Scalar(1));
    CHECK(act(apply_word(m, c.word), v, rep) == expect);
  }
}

TEST_CASE("powers") {
  CHECK(decompose_power(w2({1}), 2) == fp("P(1) + P(1;1/2)"));
  CHECK(decompose_power(w2({1, 2}), 1) == fp("P(12)"));
  CHECK(decompose_power(w2({1, 2}), 3) == fp("P(12) + P(12;1/3) + P(12;2/3)"));
  CHECK(cycle_components(w2({1, 2, 1, 2})) == decompose_power(w2({1, 2}), 2));
  CHECK_THROWS(decompose_power(w2({1, 1}), 2));
}

TEST_CASE("restriction to UHF") {
  CHECK(restrict_to_uhf(PermRep::cycle(w2({1, 2}))).components == fp("P[12] + P[21]"));
  CHECK(restrict_to_uhf(PermRep::cycle(w2({1}))).components == fp("P[1]"));
  CHECK(restrict_to_uhf(PermRep::cycle(w2({1, 1, 2, 2}))).components ==
        fp("P[1122] + P[2211] + P[1221] + P[2112]"));
  const auto ch = restrict_to_uhf(PermRep::chain(parse_evword("(12)^inf", 2)));
  CHECK(ch.infinite_multiplicity);
  CHECK(ch.components == fp("P[(12)^inf] + P[(21)^inf]"));
  CHECK(ch.window.size() == 9);
}

TEST_CASE("GP calculus") {
  const auto g14 = gp_branch(1, psi("14"));
  REQUIRE(g14.fingerprint);
  CHECK(*g14.fingerprint == fp("GP(+) + GP(+).theta"));
  CHECK(*gp_branch(1, psi("14"), true).fingerprint == fp("GP[+] + GP[+]"));
  CHECK(*gp_branch(1, psi("124")).fingerprint == fp("GP(+) + GP(-)"));
  CHECK(*gp_branch(1, psi("id")).fingerprint == fp("GP(+)"));
  CHECK_FALSE(gp_branch(1, psi("13")).fingerprint);
}

TEST_CASE("UHF branching") {
  CHECK(uhf_branch(w2({1}), psi("34")).fingerprint == fp("P[1] + P[2]"));
  CHECK(uhf_branch(w2({1, 2}), psi("34")).fingerprint == fp("P[1221] + P[2112]"));
  CHECK(uhf_branch(w2({1}), psi("id")).fingerprint == fp("P[1]"));
}

TEST_CASE("branching matches the brute-force oracle on S_{2,2}") {
  for (const auto& sigma : all_word_permutations(2, 2)) {
    std::map<std::string, std::string> inv;
    for (int a = 0; a < 4; ++a) {
      const Word from = sigma.word_of(a), to = sigma.word_of(sigma(a));
      inv[oracle::letters(to)] = oracle::letters(from);
    }
    for (const char* j : {"1", "2", "12", "112"}) {
      const oracle::Brute brute(j, inv, 2);
      const auto expect = oracle::to_fingerprint(brute.cycles(2 * 2 * std::string(j).size()), 2);
      CHECK(branch(PermRep::cycle(parse_word(j, 2)), PermEndo(sigma).morphism()).fingerprint == expect);
    }
  }
}
