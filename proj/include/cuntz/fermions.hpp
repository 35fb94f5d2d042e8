#pragma once

// Fermions inside O_2: formal CAR expressions, the recursive fermion system
// a_1 = s1 s2^*, a_n = zeta(a_{n-1}), and the four physical representations.

#include <map>
#include <string>
#include <vector>

#include "cuntz/poly.hpp"
#include "cuntz/report.hpp"
#include "cuntz/reps.hpp"

namespace cuntz {

struct CarLetter {
  int index;
  bool dagger;
  friend auto operator<=>(const CarLetter&, const CarLetter&) = default;
};

/// Free *-polynomial in a_n, a_n^*. No CAR normal ordering is attempted;
/// equality questions go through psi_map.
class CarExpr {
 public:
  using Monomial = std::vector<CarLetter>;

  CarExpr() = default;
  static CarExpr scalar(const Scalar& c);
  static CarExpr identity() { return scalar(Scalar(1)); }
  static CarExpr a(int n);
  static CarExpr a_dag(int n);

  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Monomial& m, const Scalar& c);

  CarExpr adjoint() const;
  CarExpr& operator+=(const CarExpr& o);
  CarExpr& operator-=(const CarExpr& o);
  CarExpr& operator*=(const Scalar& c);
  friend CarExpr operator+(CarExpr a, const CarExpr& b) { return a += b; }
  friend CarExpr operator-(CarExpr a, const CarExpr& b) { return a -= b; }
  friend CarExpr operator-(CarExpr a) { return a *= Scalar(-1); }
  friend CarExpr operator*(const CarExpr& a, const CarExpr& b);
  friend CarExpr operator*(CarExpr a, const Scalar& c) { return a *= c; }
  friend CarExpr operator*(const Scalar& c, CarExpr a) { return a *= c; }
  /// Structural equality of the free expressions.
  friend bool operator==(const CarExpr&, const CarExpr&) = default;

  /// "a1 a1' a2 - a1' a1 a2'"
  std::string to_string() const;

 private:
  std::map<Monomial, Scalar> terms_;
};

/// a_n by iterating zeta from a_1 = s1 s2^*.
CuntzPoly car_generator(int n);
/// The matrix-unit form sum_J (-1)^{n_2(J)} s_{J1} s_{J2}^* over |J| = n-1.
CuntzPoly car_generator_closed(int n);
/// Multiplicative *-extension of a_n -> car_generator_closed(n).
CuntzPoly psi_map(const CarExpr& x);

/// a_n -> (-1)^{n-1} a_n^*, extended linearly and multiplicatively.
CarExpr dual_automorphism(const CarExpr& x);

/// Element of Z + 1/2 stored as twice its value (always odd).
struct HalfInt {
  long twice = 1;
  static HalfInt parse(const std::string& text);
  std::string to_string() const;
  friend auto operator<=>(const HalfInt&, const HalfInt&) = default;
};

/// The mixture b_k built from a_1 and a_{2k+2} (k > 0) or a_{2|k|+1} (k < 0).
CarExpr mixture(HalfInt k);

enum class FermionRep { fock, fock_dual, iw, iw_dual };
FermionRep parse_fermion_rep(const std::string& text);
std::string to_string(FermionRep r);
/// The O_2 cycle word whose UHF restriction carries the representation:
/// 1, 2, 12, 21.
Word fermion_word(FermionRep r);
/// "Fock", "Fock*", "IW", "IW*" for P[1], P[2], P[12], P[21]; other labels
/// unchanged.
std::string fermion_name(const Component& c);

/// {a_n, a_m^*} = delta, {a_n, a_m} = {a_n^*, a_m^*} = 0 for n, m <= L.
Report verify_car(int level);
/// car_generator(n) == car_generator_closed(n) for n <= L.
Report verify_coherence(int level);
/// CAR among the b_k for |k|, |l| <= cutoff.
Report verify_mixture_car(HalfInt cutoff);
/// Annihilation by the vacuum of `rep`, and for Fock the mixture identities
/// on Omega and Omega^* = a_1^* Omega, evaluated on the labeled basis of
/// P(fermion_word(rep)).
Report vacuum_check(FermionRep rep, HalfInt cutoff = HalfInt{7});

struct FermionBranch {
  BranchResult uhf;
  std::vector<std::string> names;  // sorted, with multiplicity
  std::string to_string() const;
};

/// rep . m on the CAR algebra, through uhf_branch and fermion_name.
FermionBranch fermion_branch(FermionRep rep, const Morphism& m);

}  // namespace cuntz
