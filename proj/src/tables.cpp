#include "cuntz/tables.hpp"

namespace cuntz::tables {

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {"id", "s1", "s2", "inn.aut", "(14)(23)"},
      {"12", "s12 s1' + s11 s2'", "s2", "irr", "1324"},
      {"13", "s21 s1' + s12 s2'", "s11 s1' + s22 s2'", "irr", "1432"},
      {"14", "s22 s1' + s12 s2'", "s21 s1' + s11 s2'", "red", "14"},
      {"23", "s11 s1' + s21 s2'", "s12 s1' + s22 s2'", "red", "23"},
      {"24", "s11 s1' + s22 s2'", "s21 s1' + s12 s2'", "irr", "1234"},
      {"34", "s1", "s22 s1' + s21 s2'", "irr", "1423"},
      {"123", "s12 s1' + s21 s2'", "s11 s1' + s22 s2'", "red", "243"},
      {"132", "s21 s1' + s11 s2'", "s12 s1' + s22 s2'", "red", "132"},
      {"124", "s12 s1' + s22 s2'", "s21 s1' + s11 s2'", "red", "124"},
      {"142", "s22 s1' + s11 s2'", "s21 s1' + s12 s2'", "irr", "134"},
      {"134", "s21 s1' + s12 s2'", "s22 s1' + s11 s2'", "irr", "142"},
      {"143", "s22 s1' + s12 s2'", "s11 s1' + s21 s2'", "red", "143"},
      {"234", "s11 s1' + s21 s2'", "s22 s1' + s12 s2'", "red", "234"},
      {"243", "s11 s1' + s22 s2'", "s12 s1' + s21 s2'", "red", "123"},
      {"1234", "s12 s1' + s21 s2'", "s22 s1' + s11 s2'", "irr", "24"},
      {"1243", "s12 s1' + s22 s2'", "s11 s1' + s21 s2'", "red", "1243"},
      {"1324", "s2", "s12 s1' + s11 s2'", "irr", "12"},
      {"1342", "s21 s1' + s11 s2'", "s22 s1' + s12 s2'", "red", "1342"},
      {"1423", "s22 s1' + s21 s2'", "s1", "irr", "34"},
      {"1432", "s22 s1' + s11 s2'", "s12 s1' + s21 s2'", "irr", "13"},
      {"(12)(34)", "s12 s1' + s11 s2'", "s22 s1' + s21 s2'", "out.aut", "(13)(24)"},
      {"(13)(24)", "s2", "s1", "out.aut", "(12)(34)"},
      {"(14)(23)", "s22 s1' + s21 s2'", "s12 s1' + s11 s2'", "inn.aut", "id"},
  };
  return rows;
}

const std::vector<DirectSumRow>& direct_sums() {
  static const std::vector<DirectSumRow> rows = {
      {"14", "alpha", "xi'", "alpha.theta"}, {"124", "alpha", "xi'", "alpha.beta2"},
      {"234", "iota", "xi'", "beta2"},       {"23", "iota", "xi", "iota"},
      {"132", "iota", "xi'", "beta1"},       {"1243", "alpha", "xi", "alpha"},
      {"123", "iota", "xi", "alpha"},        {"143", "alpha", "xi'", "alpha.beta1"},
      {"1342", "iota", "xi'", "theta"},
  };
  return rows;
}

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {"id", {"P(1)", "P(2)", "P(12)", "GP(+)"}},
      {"(12)(34)", {"P(2)", "P(1)", "P(12)", "GP(+)"}},
      {"12", {"P(12)", "P(1) + P(2)", "P(1122)", "---"}},
      {"13", {"P(2)", "P(2)", "P(11)", "---"}},
      {"24", {"P(1)", "P(1)", "P(22)", "---"}},
      {"34", {"P(1) + P(2)", "P(12)", "P(1122)", "---"}},
      {"142", {"P(12)", "P(12)", "P(11) + P(22)", "---"}},
      {"14", {"P(22)", "P(11)", "P(12) + P(12)", "GP(+) + GP(+).theta"}},
      {"23", {"P(1) + P(1)", "P(2) + P(2)", "P(12) + P(12)", "GP(+) + GP(+)"}},
      {"123", {"P(1) + P(2)", "P(1) + P(2)", "P(12) + P(12)", "GP(+) + GP(+)"}},
      {"124", {"P(22)", "P(1) + P(1)", "P(1212)", "GP(+) + GP(-)"}},
      {"132", {"P(11)", "P(2) + P(2)", "P(1212)", "GP(+) + GP(-).theta"}},
      {"143", {"P(2) + P(2)", "P(11)", "P(1212)", "GP(+) + GP(-).theta"}},
      {"234", {"P(1) + P(1)", "P(22)", "P(1212)", "GP(+) + GP(-)"}},
      {"1243", {"P(2) + P(2)", "P(1) + P(1)", "P(12) + P(12)", "GP(+) + GP(+)"}},
      {"1342", {"P(11)", "P(22)", "P(12) + P(12)", "GP(+) + GP(+).theta"}},
  };
  return rows;
}

const std::vector<Table3Row>& table3() {
  static const std::vector<Table3Row> rows = {
      {"id", {"P[1]", "P[2]", "P[12]", "GP[+]"}, "inn.aut"},
      {"(12)(34)", {"P[2]", "P[1]", "P[21]", "GP[+]"}, "out.aut"},
      {"12", {"P[12] + P[21]", "P[1] + P[2]", "P[1122] + P[2211]", "---"}, "irr"},
      {"13", {"P[2]", "P[2]", "P[1]", "---"}, "irr"},
      {"24", {"P[1]", "P[1]", "P[2]", "---"}, "irr"},
      {"34", {"P[1] + P[2]", "P[12] + P[21]", "P[1221] + P[2112]", "---"}, "irr"},
      {"142", {"P[12] + P[21]", "P[12] + P[21]", "P[1] + P[2]", "---"}, "red"},
      {"14", {"P[2] + P[2]", "P[1] + P[1]", "P[21] + P[21]", "GP[+] + GP[+]"}, "red"},
      {"23", {"P[1] + P[1]", "P[2] + P[2]", "P[12] + P[12]", "GP[+] + GP[+]"}, "red"},
      {"123", {"P[1] + P[2]", "P[1] + P[2]", "P[12] + P[21]", "GP[+] + GP[+]"}, "red"},
      {"124", {"P[2] + P[2]", "P[1] + P[1]", "P[21] + P[21]", "GP[+] + GP[-]"}, "red"},
      {"132", {"P[1] + P[1]", "P[2] + P[2]", "P[12] + P[12]", "GP[+] + GP[-]"}, "red"},
  };
  return rows;
}

const std::vector<Table4Row>& table4() {
  static const std::vector<Table4Row> rows = {
      {"s1 s1'", {"12", "34"}},
      {"s2 s2'", {"1324", "1423"}},
      {"s12 s12' + s22 s22'", {"14", "124"}},
      {"s11 s11' + s21 s21'", {"23", "132"}},
      {"s12 s12' + s21 s21'", {"13", "123", "134", "1234"}},
      {"s11 s11' + s22 s22'", {"24", "142", "243", "1432"}},
  };
  return rows;
}

const std::vector<std::pair<const char*, const char*>>& uhf_equations() {
  static const std::vector<std::pair<const char*, const char*>> rows = {
      {"14", "1243"}, {"124", "143"}, {"132", "234"}, {"23", "1342"}};
  return rows;
}

const std::vector<const char*>& table6_sigmas() {
  static const std::vector<const char*> rows = {"id", "(12)(34)", "12", "13", "24", "34",
                                                "142", "14", "23", "123", "124", "132"};
  return rows;
}

std::optional<CarExpr> table6(const std::string& sigma, int n) {
  const CarExpr a1 = CarExpr::a(1), a1d = CarExpr::a_dag(1);
  const CarExpr n1 = a1 * a1d, n1bar = a1d * a1;
  const Scalar sign_n(n % 2 ? -1 : 1);        // (-1)^n
  const Scalar sign_n1 = -sign_n;             // (-1)^(n-1)
  if (sigma == "id") return CarExpr::a(n);
  if (sigma == "(12)(34)") return n == 1 ? a1 : sign_n * CarExpr::a_dag(n);
  if (sigma == "142") {
    const int k = (n + 1) / 2;
    const Scalar s(k % 2 ? 1 : -1);  // (-1)^(k-1)
    if (n % 2) return s * (n1 * CarExpr::a(2 * k) - n1bar * CarExpr::a_dag(2 * k));
    return s * (n1 * CarExpr::a_dag(2 * k + 1) + n1bar * CarExpr::a(2 * k + 1));
  }
  if (sigma == "14") return sign_n1 * ((n1 - n1bar) * CarExpr::a_dag(n + 1));
  if (sigma == "23") return (n1 - n1bar) * CarExpr::a(n + 1);
  if (sigma == "123") return n1 * CarExpr::a(n + 1) + sign_n * (n1bar * CarExpr::a_dag(n + 1));
  if (sigma == "124") return sign_n * ((a1d - a1) * CarExpr::a_dag(n + 1));
  if (sigma == "132") return (a1d - a1) * CarExpr::a(n + 1);
  return std::nullopt;
}

const std::vector<Table7Row>& table7() {
  static const std::vector<Table7Row> rows = {
      {"12", 1, "-a1 (a2 + a2')"},
      {"12", 2, "-(a1 a1' a2' + a1' a1 a2)(a3 + a3')"},
      {"12", 3, "{a1 a1' (a2 a2' a3 + a2' a2 a3') - a1' a1 (a2' a2 a3 + a2 a2' a3')}(a4 + a4')"},
      {"13", 1, "a1' a2 a2' + a1 a2' a2"},
      {"13", 2, "(a1' + a1)(-a2' a3 a3' + a2 a3' a3)"},
      {"13", 3, "(a1' - a1)(-a2' + a2)(-a3' a4 a4' + a3 a4' a4)"},
      {"24", 1, "a1 a2 a2' + a1' a2' a2"},
      {"24", 2, "-(a1' + a1)(-a2 a3 a3' + a2' a3' a3)"},
      {"24", 3, "(a1' - a1)(-a2' + a2)(-a3 a4 a4' + a3' a4' a4)"},
      {"34", 1, "-a1 (a2 + a2')"},
      {"34", 2, "-(a1 a1' a2 + a1' a1 a2')(a3 + a3')"},
      {"34", 3, "{-a1 a1' (a2 a2' a3 + a2' a2 a3') + a1' a1 (a2' a2 a3 + a2 a2' a3')}(a4 + a4')"},
  };
  return rows;
}

const std::vector<Table8Row>& table8() {
  static const std::vector<Table8Row> rows = {
      {"id", {"Fock", "Fock*", "IW"}},
      {"(12)(34)", {"Fock*", "Fock", "IW*"}},
      {"12", {"IW + IW*", "Fock + Fock*", "P[1122] + P[2211]"}},
      {"13", {"Fock*", "Fock*", "Fock"}},
      {"24", {"Fock", "Fock", "Fock*"}},
      {"34", {"Fock + Fock*", "IW + IW*", "P[1221] + P[2112]"}},
      {"142", {"IW + IW*", "IW + IW*", "Fock + Fock*"}},
      {"14", {"Fock* + Fock*", "Fock + Fock", "IW* + IW*"}},
      {"23", {"Fock + Fock", "Fock* + Fock*", "IW + IW"}},
      {"123", {"Fock + Fock*", "Fock + Fock*", "IW + IW*"}},
      {"124", {"Fock* + Fock*", "Fock + Fock", "IW* + IW*"}},
      {"132", {"Fock + Fock", "Fock* + Fock*", "IW + IW"}},
  };
  return rows;
}

const std::vector<NakanishiRow>& nakanishi_laws() {
  static const std::vector<NakanishiRow> rows = {
      {"P(1)", "P(3) + P(12)"},
      {"P(12)", "P(113223)"},
      {"P[1]", "P[3] + P[12] + P[21]"},
      {"P[12]", "P[113223] + P[322311] + P[231132]"},
      {"P[21]", "P[223113] + P[311322] + P[132231]"},
  };
  return rows;
}

}  // namespace cuntz::tables
