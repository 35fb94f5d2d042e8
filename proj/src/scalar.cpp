#include "cuntz/scalar.hpp"

#include <cmath>
#include <sstream>

namespace cuntz {

Scalar::Scalar(mpq_class rat, mpq_class root2) : rat_(std::move(rat)), root2_(std::move(root2)) {
  rat_.canonicalize();
  root2_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

mpq_class Scalar::norm() const { return rat_ * rat_ - 2 * root2_ * root2_; }

Scalar Scalar::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw DivisionByZero();
  return Scalar(rat_ / n, -root2_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  rat_ += o.rat_;
  root2_ += o.root2_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  rat_ -= o.rat_;
  root2_ -= o.root2_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
  mpq_class a = rat_ * o.rat_ + 2 * root2_ * o.root2_;
  mpq_class b = rat_ * o.root2_ + root2_ * o.rat_;
  rat_ = std::move(a);
  root2_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool structural_less(const Scalar& a, const Scalar& b) {
  if (a.rat_ != b.rat_) return a.rat_ < b.rat_;
  return a.root2_ < b.root2_;
}

double Scalar::to_double() const { return rat_.get_d() + root2_.get_d() * std::sqrt(2.0); }

std::string Scalar::to_string() const {
  if (sgn(root2_) == 0) return rat_.get_str();
  std::ostringstream os;
  if (sgn(rat_) != 0) {
    os << rat_.get_str() << (sgn(root2_) < 0 ? " - " : " + ");
    mpq_class b = abs(root2_);
    if (b != 1) os << b.get_str() << "*";
  } else if (root2_ == -1) {
    os << "-";
  } else if (root2_ != 1) {
    os << root2_.get_str() << "*";
  }
  os << "sqrt2";
  return os.str();
}

std::string Scalar::to_expr() const {
  if (sgn(root2_) == 0) return rat_.get_str();
  std::ostringstream os;
  const bool two_parts = sgn(rat_) != 0;
  if (two_parts) os << "(" << rat_.get_str() << (sgn(root2_) < 0 ? " - " : " + ");
  mpq_class b = two_parts ? mpq_class(abs(root2_)) : root2_;
  if (b == -1) {
    os << "-r2";
  } else if (b == 1) {
    os << "r2";
  } else {
    os << b.get_str() << " r2";
  }
  if (two_parts) os << ")";
  return os.str();
}

namespace {

nlohmann::json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  return mpz_class(j.get<long>());
}

nlohmann::json fraction_json(const mpq_class& q) {
  return nlohmann::json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

mpq_class fraction_from_json(const nlohmann::json& j) {
  mpq_class q(integer_from_json(j.at(0)), integer_from_json(j.at(1)));
  if (sgn(q.get_den()) == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

}  // namespace

nlohmann::json Scalar::to_json() const {
  return {{"rat", fraction_json(rat_)}, {"sqrt2", fraction_json(root2_)}};
}

Scalar Scalar::from_json(const nlohmann::json& j) {
  return Scalar(fraction_from_json(j.at("rat")), fraction_from_json(j.at("sqrt2")));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cuntz
