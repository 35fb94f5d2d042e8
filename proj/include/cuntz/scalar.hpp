#pragma once

// Exact arithmetic in the quadratic field Q(sqrt 2).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace cuntz {

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(sqrt2)") {}
};

/// An element a + b*sqrt(2) with a, b rational.
///
/// Both parts are kept in lowest terms with positive denominators (mpq_class
/// canonicalizes after every operation), so structural equality is field
/// equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : rat_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class rat, mpq_class root2 = 0);

  static Scalar sqrt2() { return Scalar(0, 1); }
  static Scalar rational(long num, long den);

  const mpq_class& rat_part() const { return rat_; }
  const mpq_class& root2_part() const { return root2_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(root2_) == 0; }
  bool is_one() const { return rat_ == 1 && sgn(root2_) == 0; }
  bool is_rational() const { return sgn(root2_) == 0; }

  /// a^2 - 2 b^2; zero only for the zero element since sqrt 2 is irrational.
  mpq_class norm() const;
  Scalar conjugate() const { return Scalar(rat_, -root2_); }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-rat_, -root2_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.root2_ == b.root2_;
  }

  /// Structural order (rational part, then sqrt2 part); used only for
  /// deterministic container ordering.
  friend bool structural_less(const Scalar& a, const Scalar& b);

  double to_double() const;

  /// "a + b*sqrt2" with rationals written p/q.
  std::string to_string() const;
  /// Same value in the expression grammar ("r2" for sqrt 2), parenthesized
  /// when it has two parts.
  std::string to_expr() const;

  nlohmann::json to_json() const;
  static Scalar from_json(const nlohmann::json& j);

 private:
  mpq_class rat_{0};
  mpq_class root2_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cuntz
