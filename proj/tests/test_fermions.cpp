#include <doctest.h>

#include "cuntz/fermions.hpp"
#include "cuntz/parse.hpp"
#include "support.hpp"

using namespace cuntz;

namespace {
Word w2(std::initializer_list<int> l) { return Word(2, l); }

// sum over |J| = n-1 of (-1)^{#2 in J} s_{J1} s_{J2}^*, built term by term
CuntzPoly closed_form(int n) {
  CuntzPoly x(2);
  for (const auto& j : oracle::all_words(2, static_cast<std::size_t>(n - 1))) {
    std::vector<int> l;
    int twos = 0;
    for (char c : j) {
      l.push_back(c - '0');
      twos += c == '2';
    }
    std::vector<int> a = l, b = l;
    a.push_back(1);
    b.push_back(2);
    x += CuntzPoly::monomial(Word(2, a), Word(2, b), Scalar(twos % 2 ? -1 : 1));
  }
  return x;
}
}  // namespace

TEST_CASE("generators") {
  CHECK(car_generator(1) == parse_poly("s1 s2'"));
  const CuntzPoly a1 = parse_poly("s1 s2'");
  CHECK(car_generator(2) == parse_poly("s1 s1'") * 0 + (parse_poly("s1") * a1 * parse_poly("s1'") -
                                                        parse_poly("s2") * a1 * parse_poly("s2'")));
  const CuntzPoly a3 = car_generator(3);
  CHECK(a3.terms().size() == 4);
  for (int n = 1; n <= 5; ++n) {
    CHECK(oracle::same(car_generator(n), closed_form(n)));
    CHECK(car_generator_closed(n) == closed_form(n));
  }
}

TEST_CASE("psi map") {
  CHECK(psi_map(CarExpr::a(1)) == matrix_unit(w2({1}), w2({2})));
  CHECK(psi_map(CarExpr::a(2)) == matrix_unit(w2({1, 1}), w2({1, 2})) - matrix_unit(w2({2, 1}), w2({2, 2})));
  const CarExpr a1 = CarExpr::a(1), a1d = CarExpr::a_dag(1);
  CHECK(psi_map(a1 * a1d + a1d * a1) == CuntzPoly::identity(2));
}

TEST_CASE("anticommutation relations") {
  const Report r = verify_car(2);
  CHECK(r.checks.size() == 10);
  CHECK(r.ok());
  const CuntzPoly a1 = psi_map(CarExpr::a(1)), a2 = psi_map(CarExpr::a(2));
  CHECK((a1 * a2 + a2 * a1).empty());
  const CuntzPoly a3 = closed_form(3);
  CHECK(oracle::product_is(a3, adjoint(a3), CuntzPoly::identity(2) - adjoint(a3) * a3));
  CHECK(verify_car(5).ok());
  CHECK(verify_coherence(6).ok());
}

TEST_CASE("dual automorphism") {
  CHECK(dual_automorphism(CarExpr::a(1)) == CarExpr::a_dag(1));
  CHECK(dual_automorphism(CarExpr::a(2)) == -CarExpr::a_dag(2));
  CHECK(dual_automorphism(CarExpr::a(1) * CarExpr::a(2)) == -(CarExpr::a_dag(1) * CarExpr::a_dag(2)));
}

TEST_CASE("mixture") {
  const CarExpr a1 = CarExpr::a(1), a1d = CarExpr::a_dag(1);
  CHECK(mixture(HalfInt::parse("1/2")) == a1 * a1d * CarExpr::a_dag(3) + a1d * a1 * CarExpr::a(3));
  CHECK(mixture(HalfInt::parse("-1/2")) == a1 * a1d * CarExpr::a(2) - a1d * a1 * CarExpr::a_dag(2));
  CHECK(psi_map(mixture(HalfInt::parse("-1/2"))) ==
        apply(perm_endo("142").morphism(), psi_map(CarExpr::a(1))));
  CHECK(verify_mixture_car(HalfInt::parse("5/2")).ok());
  CHECK_THROWS(HalfInt::parse("1"));
}

TEST_CASE("vacua") {
  const Report fock = vacuum_check(FermionRep::fock, HalfInt::parse("3/2"));
  auto find = [&](const std::string& prefix) {
    for (const auto& c : fock.checks)
      if (c.name.rfind(prefix, 0) == 0) return c.pass;
    FAIL("missing check " << prefix);
    return false;
  };
  CHECK(find("a5 Omega = 0"));
  CHECK(find("b[1/2] Omega = a3* Omega"));
  CHECK(find("b[1/2] Omega* = 0"));
  CHECK(find("b[-1/2]* Omega* = 0"));
  for (auto r : {FermionRep::fock_dual, FermionRep::iw, FermionRep::iw_dual}) {
    const Report rep = vacuum_check(r, HalfInt::parse("1/2"));
    CHECK(!rep.checks.empty());
  }
}

TEST_CASE("fermion branching") {
  CHECK(fermion_branch(FermionRep::fock, perm_endo("142").morphism()).names ==
        std::vector<std::string>{"IW", "IW*"});
  CHECK(fermion_branch(FermionRep::iw, perm_endo("13").morphism()).names == std::vector<std::string>{"Fock"});
  CHECK(fermion_branch(FermionRep::fock, perm_endo("id").morphism()).names == std::vector<std::string>{"Fock"});
}
