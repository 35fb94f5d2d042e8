#pragma once

// Noncommutative polynomials in s_1..s_N, s_1^*..s_N^* modulo the Cuntz
// relations, stored as finite sums of monomials s_J s_K^*.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "cuntz/scalar.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch(int a, int b)
      : std::invalid_argument("alphabet mismatch: O_" + std::to_string(a) + " vs O_" +
                              std::to_string(b)) {}
};

/// Monomial s_J s_K^*.
struct MonomialKey {
  Word left;   // J
  Word right;  // K
  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
  long grade() const { return static_cast<long>(left.size()) - static_cast<long>(right.size()); }
};

/// Element of the dense *-subalgebra of O_N.
///
/// Terms are kept maximally contracted: no full block of N siblings
/// s_{J i} s_{K i}^*, i = 1..N, with one common coefficient survives (it is
/// folded back into s_J s_K^*). Contraction is not a normal form across mixed
/// levels, so equality goes through `equals`, which pads every grade class to
/// a common level before comparing.
class CuntzPoly {
 public:
  using TermMap = std::map<MonomialKey, Scalar>;

  explicit CuntzPoly(int alphabet_size = 2) : n_(alphabet_size) {}

  static CuntzPoly identity(int n) { return scalar(n, Scalar(1)); }
  static CuntzPoly scalar(int n, const Scalar& c);
  static CuntzPoly generator(int n, int i);
  static CuntzPoly generator_adjoint(int n, int i);
  /// c s_J s_K^*
  static CuntzPoly monomial(const Word& j, const Word& k, const Scalar& c = Scalar(1));

  int alphabet_size() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Structurally empty (a sufficient, not necessary, test for zero).
  bool empty() const { return terms_.empty(); }

  CuntzPoly adjoint() const;

  CuntzPoly& operator+=(const CuntzPoly& o);
  CuntzPoly& operator-=(const CuntzPoly& o);
  CuntzPoly& operator*=(const Scalar& c);
  CuntzPoly operator-() const;

  friend CuntzPoly operator+(CuntzPoly a, const CuntzPoly& b) { return a += b; }
  friend CuntzPoly operator-(CuntzPoly a, const CuntzPoly& b) { return a -= b; }
  friend CuntzPoly operator*(CuntzPoly a, const Scalar& c) { return a *= c; }
  friend CuntzPoly operator*(const Scalar& c, CuntzPoly a) { return a *= c; }
  friend CuntzPoly operator*(const CuntzPoly& a, const CuntzPoly& b);

  /// Decision procedure for equality in O_N.
  friend bool operator==(const CuntzPoly& a, const CuntzPoly& b);

  /// Adds c s_J s_K^* without re-contracting; call reduce() afterwards.
  void add_term(const MonomialKey& key, const Scalar& c);
  /// Greedy bottom-up contraction of full sibling blocks.
  void reduce();

  /// Grades |J| - |K| present in the support.
  std::set<long> gauge_grade() const;

  /// Expression-grammar rendering, e.g. "s1 s2' + s2 s1'".
  std::string to_string() const;
  /// Sorted term list [[J, K, scalar], ...].
  nlohmann::json to_json() const;

 private:
  int n_;
  TermMap terms_;
};

CuntzPoly adjoint(const CuntzPoly& x);
bool equals(const CuntzPoly& x, const CuntzPoly& y);
bool is_zero(const CuntzPoly& x);
std::set<long> gauge_grade(const CuntzPoly& x);

/// Product of two monomials: s_J s_K^* s_L s_M^*, or nullopt when it vanishes.
std::optional<MonomialKey> multiply_monomials(const MonomialKey& a, const MonomialKey& b);

/// E_{JK} = s_J s_K^*; requires |J| = |K| >= 1.
CuntzPoly matrix_unit(const Word& j, const Word& k);

/// s_J (the product s_{j_1} ... s_{j_k}); s_0 = I.
CuntzPoly word_isometry(const Word& j);

/// Expansion of the grade-d part of x so that every term has |K| = level
/// (and |J| = level + d). Requires level >= every |K| in that grade.
CuntzPoly::TermMap expand_to_level(const CuntzPoly& x, long grade, std::size_t level);

/// Largest |K| among the terms of x with the given grade (0 if none).
std::size_t max_right_level(const CuntzPoly& x, long grade);

std::ostream& operator<<(std::ostream& os, const CuntzPoly& x);

}  // namespace cuntz
