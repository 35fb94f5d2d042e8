#include <doctest.h>

#include "cuntz/fermions.hpp"
#include "cuntz/morphism.hpp"
#include "cuntz/parse.hpp"
#include "support.hpp"

using namespace cuntz;

namespace {
CuntzPoly p(const char* t, int n = 2) { return parse_poly(t, n); }
const CuntzPoly u = parse_poly("s1 s2' + s2 s1'");
}  // namespace

TEST_CASE("permutative endomorphism images") {
  const PermEndo e = perm_endo("13");
  CHECK(e.morphism().image(1) == p("s21 s1' + s12 s2'"));
  CHECK(e.morphism().image(2) == p("s11 s1' + s22 s2'"));
  CHECK(perm_endo("id").morphism() == Morphism::identity(2));
  const PermEndo nk = nakanishi();
  CHECK(nk.morphism().image(3) == p("s11 s1' + s22 s2' + s33 s3'", 3));
  // u_sigma s_i
  for (const char* s : {"12", "142", "(12)(34)", "1324"}) {
    const PermEndo f = perm_endo(s);
    for (int i = 1; i <= 2; ++i)
      CHECK(oracle::same(f.morphism().image(i), f.unitary() * CuntzPoly::generator(2, i)));
  }
}

TEST_CASE("images satisfy the Cuntz relations") {
  for (const auto& sigma : all_word_permutations(2, 2)) {
    const PermEndo e(sigma);
    CHECK(satisfies_cuntz_relations(e.morphism().images()));
    CHECK(e.morphism().grade_preserving());
  }
  CHECK_FALSE(satisfies_cuntz_relations({p("s1"), p("s1")}));
  CHECK_THROWS_AS(Morphism({p("s1"), p("s1")}), InvalidMorphism);
}

TEST_CASE("apply") {
  const CuntzPoly x = p("s1 s2' s1 + 2 s2'");
  CHECK(apply(perm_endo("id").morphism(), x) == x);
  const CuntzPoly a1 = psi_map(CarExpr::a(1));
  CHECK(apply(perm_endo("142").morphism(), a1) == parse_poly("a1 a1' a2 - a1' a1 a2'"));
  CHECK(apply(perm_endo("13").morphism(), a1) == parse_poly("a1' a2 a2' + a1 a2' a2"));
  // multiplicativity through the oracle
  const Morphism m = perm_endo("1342").morphism();
  const CuntzPoly y = p("s2 s1' s1'"), z = p("s1 s2 s1'");
  CHECK(oracle::same(apply(m, y * z), apply(m, y) * apply(m, z)));
}

TEST_CASE("named automorphisms") {
  const Morphism alpha = named_automorphism("alpha");
  for (int n = 1; n <= 4; ++n) {
    const CuntzPoly an = psi_map(CarExpr::a(n));
    const CuntzPoly expect = (n % 2 ? Scalar(1) : Scalar(-1)) * adjoint(an);
    CHECK(apply(alpha, an) == expect);
  }
  const Morphism theta = named_automorphism("theta");
  CHECK(theta.image(1) == -p("s1"));
  CHECK(theta.image(2) == -p("s2"));
  CHECK(named_automorphism("phi").image(1) == p("(s1 + s2)/r2"));
  CHECK(compose(named_automorphism("phi"), named_automorphism("phi_inverse")) == Morphism::identity(2));
  CHECK(compose(named_automorphism("phi_rot"), named_automorphism("phi_rot_inverse")) ==
        Morphism::identity(2));
  CHECK_THROWS(named_automorphism("gamma"));
}

TEST_CASE("composition and inner conjugation") {
  CHECK(ad_unitary(u, perm_endo("12").morphism()) == perm_endo("1324").morphism());
  CHECK(ad_unitary(CuntzPoly::identity(2), perm_endo("142").morphism()) == perm_endo("142").morphism());
  CHECK(compose(perm_endo("13").morphism(), named_automorphism("alpha")) == perm_endo("24").morphism());
  CHECK_THROWS_AS(ad_unitary(p("s1"), perm_endo("12").morphism()), InvalidMorphism);
}

TEST_CASE("zeta") {
  CHECK(zeta(p("s1 s2'")) == psi_map(CarExpr::a(2)));
  CHECK(zeta(CuntzPoly::identity(2)) == p("s1 s1' - s2 s2'"));
  CHECK(zeta(CuntzPoly(2)).empty());
}

TEST_CASE("signed permutations") {
  CHECK(dihedral_group().size() == 8);
  const auto g = as_signed_permutation(named_automorphism("beta1"));
  REQUIRE(g);
  CHECK(dictionary_name(*g) == "beta1");
  CHECK_FALSE(as_signed_permutation(perm_endo("13").morphism()));
  for (const auto& h : dihedral_group()) CHECK(as_signed_permutation(h.to_morphism()) == h);
}

TEST_CASE("direct sums") {
  const auto d23 = split_direct_sum(perm_endo("23").morphism());
  REQUIRE(d23);
  CHECK(d23->frame == Frame::xi);
  CHECK(d23->first == Morphism::identity(2));
  CHECK(d23->second == Morphism::identity(2));
  const auto d14 = split_direct_sum(perm_endo("14").morphism());
  REQUIRE(d14);
  CHECK(d14->frame == Frame::xi_prime);
  CHECK(d14->first == named_automorphism("alpha"));
  CHECK(d14->second == compose(named_automorphism("alpha"), named_automorphism("theta")));
  CHECK_FALSE(split_direct_sum(perm_endo("13").morphism()));
  CHECK(direct_sum(d14->first, d14->second, d14->frame) == perm_endo("14").morphism());
}

TEST_CASE("word permutations") {
  const auto s = WordPermutation::parse_cycles("142", 2, 2);
  CHECK(s.to_cycle_string() == "142");
  CHECK(s.inverse().inverse() == s);
  CHECK(WordPermutation::parse_cycles("(12)(34)", 2, 2).to_cycle_string() == "(12)(34)");
  CHECK(all_word_permutations(2, 2).size() == 24);
  CHECK_THROWS(WordPermutation::parse_cycles("15", 2, 2));
}
