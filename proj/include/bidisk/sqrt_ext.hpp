// Arithmetic in the quadratic extension Q(sqrt(d)).
#pragma once

#include "bidisk/poly2.hpp"

#include <string>

namespace bidisk {

/// p + q*sqrt(d). Every value carries its discriminant d; mixing values of
/// different discriminants is a logic error. Equality is componentwise,
/// which is field equality when d is not a rational square.
class SqrtExtScalar {
 public:
  SqrtExtScalar(Rat p, Rat q, Rat d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}
  static SqrtExtScalar rational(Rat p, Rat d) { return {std::move(p), Rat(0), std::move(d)}; }
  static SqrtExtScalar root(Rat d) { return {Rat(0), Rat(1), std::move(d)}; }

  const Rat& rational_part() const { return p_; }
  const Rat& root_part() const { return q_; }
  const Rat& discriminant() const { return d_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  /// p^2 - d*q^2; nonzero for nonzero values when d is not a square.
  Rat norm() const { return p_ * p_ - d_ * q_ * q_; }
  SqrtExtScalar conjugate() const { return {p_, -q_, d_}; }

  SqrtExtScalar operator-() const { return {-p_, -q_, d_}; }
  friend SqrtExtScalar operator+(const SqrtExtScalar& a, const SqrtExtScalar& b);
  friend SqrtExtScalar operator-(const SqrtExtScalar& a, const SqrtExtScalar& b);
  friend SqrtExtScalar operator*(const SqrtExtScalar& a, const SqrtExtScalar& b);
  /// Throws std::domain_error on division by zero.
  friend SqrtExtScalar operator/(const SqrtExtScalar& a, const SqrtExtScalar& b);
  friend bool operator==(const SqrtExtScalar& a, const SqrtExtScalar& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.d_ == b.d_;
  }

  /// "p", "q*sqrt(d)" or "p + q*sqrt(d)".
  std::string to_string() const;

 private:
  Rat p_;
  Rat q_;
  Rat d_;
};

/// Polynomial with coefficients in Q(sqrt(d)), stored as re + im*sqrt(d)
/// with re, im in Q[z1, z2].
class ExtPoly2 {
 public:
  explicit ExtPoly2(Rat d) : d_(std::move(d)) {}
  ExtPoly2(Poly2 re, Poly2 im, Rat d) : re_(std::move(re)), im_(std::move(im)), d_(std::move(d)) {}

  const Poly2& rational_part() const { return re_; }
  const Poly2& root_part() const { return im_; }
  const Rat& discriminant() const { return d_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  /// Coefficient of the grlex-largest monomial appearing in either part.
  SqrtExtScalar leading_coeff() const;

  friend ExtPoly2 operator+(const ExtPoly2& a, const ExtPoly2& b);
  friend ExtPoly2 operator-(const ExtPoly2& a, const ExtPoly2& b);
  friend ExtPoly2 operator*(const Poly2& a, const ExtPoly2& b);
  friend ExtPoly2 operator*(const SqrtExtScalar& c, const ExtPoly2& b);
  friend bool operator==(const ExtPoly2& a, const ExtPoly2& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && a.d_ == b.d_;
  }

  std::string to_string() const;

 private:
  Poly2 re_;
  Poly2 im_;
  Rat d_;
};

}  // namespace bidisk
