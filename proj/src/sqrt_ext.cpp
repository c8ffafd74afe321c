#include "bidisk/sqrt_ext.hpp"

#include <stdexcept>

namespace bidisk {

namespace {

void require_same_field(const Rat& a, const Rat& b) {
  if (a != b) throw std::logic_error("quadratic extension: mismatched discriminants");
}

}  // namespace

SqrtExtScalar operator+(const SqrtExtScalar& a, const SqrtExtScalar& b) {
  require_same_field(a.d_, b.d_);
  return {a.p_ + b.p_, a.q_ + b.q_, a.d_};
}

SqrtExtScalar operator-(const SqrtExtScalar& a, const SqrtExtScalar& b) {
  require_same_field(a.d_, b.d_);
  return {a.p_ - b.p_, a.q_ - b.q_, a.d_};
}

SqrtExtScalar operator*(const SqrtExtScalar& a, const SqrtExtScalar& b) {
  require_same_field(a.d_, b.d_);
  return {a.p_ * b.p_ + a.d_ * a.q_ * b.q_, a.p_ * b.q_ + a.q_ * b.p_, a.d_};
}

SqrtExtScalar operator/(const SqrtExtScalar& a, const SqrtExtScalar& b) {
  require_same_field(a.d_, b.d_);
  const Rat n = b.norm();
  if (n.is_zero()) throw std::domain_error("quadratic extension: division by zero");
  SqrtExtScalar num = a * b.conjugate();
  return {num.p_ / n, num.q_ / n, a.d_};
}

std::string SqrtExtScalar::to_string() const {
  if (q_.is_zero()) return p_.to_string();
  std::string root = "sqrt(" + d_.to_string() + ")";
  std::string radical = q_.is_one() ? root : (q_ == Rat(-1) ? "-" + root : q_.to_string() + "*" + root);
  if (p_.is_zero()) return radical;
  if (q_.sign() < 0) {
    Rat mag = -q_;
    return p_.to_string() + " - " + (mag.is_one() ? root : mag.to_string() + "*" + root);
  }
  return p_.to_string() + " + " + radical;
}

SqrtExtScalar ExtPoly2::leading_coeff() const {
  if (is_zero()) throw std::logic_error("leading_coeff of zero polynomial");
  Monomial lead;
  if (re_.is_zero()) {
    lead = im_.leading_monomial();
  } else if (im_.is_zero()) {
    lead = re_.leading_monomial();
  } else {
    lead = grlex_greater(im_.leading_monomial(), re_.leading_monomial()) ? im_.leading_monomial()
                                                                          : re_.leading_monomial();
  }
  return {re_.coeff(lead), im_.coeff(lead), d_};
}

ExtPoly2 operator+(const ExtPoly2& a, const ExtPoly2& b) {
  require_same_field(a.d_, b.d_);
  return {a.re_ + b.re_, a.im_ + b.im_, a.d_};
}

ExtPoly2 operator-(const ExtPoly2& a, const ExtPoly2& b) {
  require_same_field(a.d_, b.d_);
  return {a.re_ - b.re_, a.im_ - b.im_, a.d_};
}

ExtPoly2 operator*(const Poly2& a, const ExtPoly2& b) { return {a * b.re_, a * b.im_, b.d_}; }

ExtPoly2 operator*(const SqrtExtScalar& c, const ExtPoly2& b) {
  require_same_field(c.discriminant(), b.d_);
  const Rat& p = c.rational_part();
  const Rat& q = c.root_part();
  return {p * b.re_ + (b.d_ * q) * b.im_, p * b.im_ + q * b.re_, b.d_};
}

std::string ExtPoly2::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string root = "sqrt(" + d_.to_string() + ")";
  if (re_.is_zero()) return "(" + im_.to_string() + ")*" + root;
  return re_.to_string() + " + (" + im_.to_string() + ")*" + root;
}

}  // namespace bidisk
