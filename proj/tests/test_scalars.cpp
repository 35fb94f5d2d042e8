#include <doctest.h>

#include <cmath>

#include "cuntz/scalar.hpp"

using cuntz::Scalar;

TEST_CASE("field operations") {
  const Scalar r2 = Scalar::sqrt2();
  CHECK((Scalar(1) + r2) * (Scalar(-1) + r2) == Scalar(1));
  CHECK(r2.inverse() == Scalar(0, mpq_class(1, 2)));
  CHECK(r2 * r2 == Scalar(2));
  CHECK(Scalar::rational(6, -4) == Scalar(mpq_class(-3, 2)));
  CHECK_THROWS_AS(Scalar(0).inverse(), cuntz::DivisionByZero);
}

TEST_CASE("half-sum of squares against floating point") {
  const Scalar h = Scalar::sqrt2().inverse();
  const Scalar s = h * h + h * h;
  const double f = std::pow(1 / std::sqrt(2.0), 2) * 2;
  CHECK(std::abs(s.to_double() - f) < 1e-12);
  CHECK(s == Scalar(1));
}

TEST_CASE("canonical representation") {
  const Scalar a(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(a.rat_part().get_den() == 2);
  CHECK(a.root2_part() == mpq_class(-1, 2));
  CHECK((a - a).is_zero());
  CHECK(Scalar(mpq_class(0), mpq_class(1)).norm() == -2);
}

TEST_CASE("inverse agrees with floating point on a grid") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      const Scalar x(a, b);
      const double f = 1.0 / (a + b * std::sqrt(2.0));
      CHECK(std::abs(x.inverse().to_double() - f) < 1e-12);
      CHECK(x * x.inverse() == Scalar(1));
    }
}

TEST_CASE("json round trip") {
  const Scalar x(mpq_class(-7, 3), mpq_class(5, 11));
  CHECK(Scalar::from_json(x.to_json()) == x);
}
