#pragma once

// Invariants and verdicts for permutative endomorphisms: branching
// fingerprints, conjugacy, equality on UHF_N, relative commutants, and the
// table / theorem reports built on them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuntz/morphism.hpp"
#include "cuntz/poly.hpp"
#include "cuntz/report.hpp"
#include "cuntz/reps.hpp"

namespace cuntz {

/// Branching law of one test representation. No value means the GP rules
/// do not reach this endomorphism (printed "---").
struct Cell {
  std::string test;
  std::optional<Fingerprint> value;
  std::string note;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// P(1), P(2), P(12), GP(+)
const std::vector<std::string>& o2_tests();
/// P[1], P[2], P[12], GP[+]
const std::vector<std::string>& uhf_tests();

/// One cell per test label (any label accepted by parse_rep).
std::vector<Cell> fingerprint(const Morphism& m, const std::vector<std::string>& tests,
                              const BranchOptions& opts = {});

/// u = s1 s2^* + s2 s1^*
const CuntzPoly& swap_unitary();

/// Ad u . m1 == m2 on generators. Throws InvalidMorphism for non-unitary u.
bool verify_conjugate(const Morphism& m1, const Morphism& m2, const CuntzPoly& u);

struct UhfEquality {
  bool equal = false;
  std::size_t level = 0;                 // levels compared
  std::optional<std::size_t> differ_at;  // first level with a differing unit
  /// The inductive check (v = u2^* u1 commutes with s_i m1(E) s_j^*) agrees.
  bool certified = false;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Compares m1(E_JK) and m2(E_JK) for |J| = |K| = n <= level.
UhfEquality uhf_restriction_equal(const Morphism& m1, const Morphism& m2, std::size_t level = 5);

struct CommutantResult {
  std::size_t level = 0;
  std::size_t dimension = 0;       // of {x in level-L units : [x, m(E)] = 0}
  std::optional<CuntzPoly> witness;  // a non-scalar solution
  /// The witness commutes with all of m(UHF_N), not only with the level-L
  /// images (see commutes_with_uhf_image).
  bool certified = false;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Exact nullspace of [x, m(E_AB)] = 0, x in the span of the level-L matrix
/// units, E_AB ranging over the level-L units. m must be grade-preserving.
CommutantResult commutant_witness(const Morphism& m, std::size_t level = 3);

/// Exact test of [x, m(a)] = 0 for every a in UHF_N. With
/// y_kl = m(s_k)^* x m(s_l) this holds iff y_kl = delta_kl y and y passes the
/// same test; the orbit x -> m(s_1)^* x m(s_1) is followed until it repeats
/// (false if it has not closed after max_steps).
bool commutes_with_uhf_image(const Morphism& m, const CuntzPoly& x, std::size_t max_steps = 16);

enum class Verdict { inner_aut, outer_aut, irreducible, reducible, undetermined };
/// "inn.aut", "out.aut", "irr", "red", "undetermined"
std::string to_string(Verdict v);

struct PropertyVerdict {
  Verdict verdict = Verdict::undetermined;
  std::string evidence;
  bool imported = false;
  nlohmann::json to_json() const;
};

/// Property of psi_sigma as an endomorphism of O_2.
PropertyVerdict o2_property(const PermEndo& e);
/// Property of the restriction of psi_sigma to UHF_2; `level` bounds the
/// commutant search and the transport checks.
PropertyVerdict uhf_property(const PermEndo& e, std::size_t level = 3);

struct ClassifyOptions {
  std::size_t level = 5;            // UHF equality certification
  std::size_t commutant_level = 3;
  std::optional<std::size_t> seed_bound;
  bool parallel = true;
};

/// table1, direct_sums, table2, table3, table4, table6, table7, table8, theorem13,
/// theorem14, decompose_power, nakanishi, car.
const std::vector<std::string>& report_names();
Report classify_table(const std::string& which, const ClassifyOptions& opts = {});

Report verify_table1(const ClassifyOptions& opts = {});
/// psi_sigma as phi_1 +_xi phi_2 for the printed decompositions.
Report verify_direct_sums();
Report verify_table2(const ClassifyOptions& opts = {});
Report verify_table3(const ClassifyOptions& opts = {});
Report verify_table4(const ClassifyOptions& opts = {});
Report verify_table6(int max_n = 6);
Report verify_table7();
Report verify_table8(const ClassifyOptions& opts = {});
Report verify_theorem13();
/// P(J^l) = sum of phased P(J) for primitive |J| <= max_len, l <= max_power.
Report verify_decompose_power(std::size_t max_len = 3, std::size_t max_power = 4);
Report verify_theorem14(const ClassifyOptions& opts = {});
Report verify_nakanishi(const ClassifyOptions& opts = {});
/// The psi_142 formulas on a_n (n <= max_n) and the mixture as psi_142 image.
Report verify_psi142_formulae(int max_n = 4);
/// CAR relations, coherence, psi_142 formulas, Tables 6 and 7, mixture CAR
/// and the Fock vacuum identities.
Report verify_car_suite();

}  // namespace cuntz
