// Sparse bivariate polynomials over Q in the local coordinates z1, z2.
#pragma once

#include "bidisk/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bidisk {

/// Exponent pair z1^e1 * z2^e2.
struct Monomial {
  std::uint32_t e1 = 0;
  std::uint32_t e2 = 0;

  std::uint32_t degree() const { return e1 + e2; }
  bool divides(const Monomial& other) const { return e1 <= other.e1 && e2 <= other.e2; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend Monomial operator*(Monomial a, Monomial b) { return {a.e1 + b.e1, a.e2 + b.e2}; }
};

/// Graded lexicographic order with z1 > z2; larger monomials sort first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.e1 > b.e1;
  }
};

/// True iff a > b in graded lexicographic order.
inline bool grlex_greater(const Monomial& a, const Monomial& b) { return GrlexDescending{}(a, b); }

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Element of Q[z1, z2]. No zero coefficient is ever stored and terms are
/// kept in grlex-descending order, so structural equality is polynomial
/// equality.
class Poly2 {
 public:
  using Terms = std::map<Monomial, Rat, GrlexDescending>;

  Poly2() = default;
  Poly2(const Rat& constant);  // NOLINT(google-explicit-constructor)
  Poly2(long constant) : Poly2(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  Poly2(int constant) : Poly2(Rat(constant)) {}   // NOLINT(google-explicit-constructor)

  static Poly2 z1() { return monomial({1, 0}); }
  static Poly2 z2() { return monomial({0, 1}); }
  static Poly2 monomial(Monomial m, const Rat& coeff = Rat(1));

  /// Parses the literal syntax: a sum of terms `c*z1^i*z2^j`, with `c` a
  /// rational `p/q`. Whitespace is ignored. Throws PolyParseError.
  static Poly2 parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of a term; -1 for the zero polynomial.
  int min_degree() const;
  int degree_in_z1() const;
  int degree_in_z2() const;

  Rat coeff(Monomial m) const;
  Rat constant_term() const { return coeff({0, 0}); }

  /// Requires a nonzero polynomial.
  Monomial leading_monomial() const;
  Rat leading_coeff() const;

  /// Value at (z1, z2).
  Rat evaluate(const Rat& z1, const Rat& z2) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Rat& c);

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
  friend Poly2 operator*(const Rat& c, Poly2 a) { return a *= c; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  Poly2 pow(unsigned exponent) const;
  /// Multiply by a monomial.
  Poly2 shifted(Monomial m) const;
  /// Divide every coefficient by the leading coefficient (zero stays zero).
  Poly2 monic() const;

  /// Canonical literal form, e.g. "z1^2 + 2*z1*z2 - 1/3*z2". parse(to_string(p)) == p.
  std::string to_string() const;

 private:
  void add_term(Monomial m, const Rat& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly2& p);

}  // namespace bidisk
