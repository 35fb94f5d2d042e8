#pragma once

// Expected values for the table checks, transcribed as printed. Cells use
// the parse_fingerprint / parse_poly / parse_car grammars.

#include <optional>
#include <string>
#include <vector>

#include "cuntz/fermions.hpp"

namespace cuntz::tables {

struct Table1Row {
  const char* sigma;
  const char* image1;    // psi(s1)
  const char* image2;    // psi(s2)
  const char* property;  // "irr", "red", "inn.aut", "out.aut"
  const char* conjugate; // sigma' with Ad u . psi_sigma = psi_sigma'
};
const std::vector<Table1Row>& table1();

struct DirectSumRow {
  const char* sigma;
  const char* first;
  const char* frame;  // "xi" or "xi'"
  const char* second;
};
const std::vector<DirectSumRow>& direct_sums();

/// P(1), P(2), P(12), GP(+) columns.
struct Table2Row {
  const char* sigma;
  const char* cells[4];
};
const std::vector<Table2Row>& table2();

/// P[1], P[2], P[12], GP[+] columns and the property.
struct Table3Row {
  const char* sigma;
  const char* cells[4];
  const char* property;  // "inn.aut", "out.aut", "irr", "red"
};
const std::vector<Table3Row>& table3();

struct Table4Row {
  const char* image;  // psi(s1 s1')
  std::vector<const char*> sigmas;
};
const std::vector<Table4Row>& table4();

/// Pairs equal on UHF_2.
const std::vector<std::pair<const char*, const char*>>& uhf_equations();

/// psi_sigma(a_n) in closed form; nullopt for rows printed as "---".
std::optional<CarExpr> table6(const std::string& sigma, int n);
const std::vector<const char*>& table6_sigmas();

struct Table7Row {
  const char* sigma;
  int n;
  const char* image;
};
const std::vector<Table7Row>& table7();

/// Fock, Fock*, IW columns.
struct Table8Row {
  const char* sigma;
  const char* cells[3];
};
const std::vector<Table8Row>& table8();

struct NakanishiRow {
  const char* rep;   // "P(1)", "P[12]", ...
  const char* law;
};
const std::vector<NakanishiRow>& nakanishi_laws();

}  // namespace cuntz::tables
