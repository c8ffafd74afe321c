// Algorithms on Q[z1, z2]: exact division, gcd, square roots, substitution
// and the colength of a zero-dimensional ideal.
#pragma once

#include "bidisk/poly2.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace bidisk {

class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quotient q with dividend == divisor * q, or nullopt when divisor does
/// not divide dividend in Q[z1, z2]. Throws on a zero divisor.
std::optional<Poly2> divide_exact(const Poly2& dividend, const Poly2& divisor);

/// Monic gcd (leading coefficient 1 in grlex). gcd(0, 0) = 0.
Poly2 gcd(const Poly2& a, const Poly2& b);

/// Monic gcd of three polynomials; throws DegenerateInput if all are zero.
Poly2 gcd3(const Poly2& a, const Poly2& b, const Poly2& c);

/// q with q * q == p and positive leading coefficient (0 for p == 0), or
/// nullopt when p is not the square of a polynomial over Q.
std::optional<Poly2> poly_sqrt(const Poly2& p);

/// p(e1, e2): the ring homomorphism z1 -> e1, z2 -> e2.
Poly2 substitute(const Poly2& p, const Poly2& e1, const Poly2& e2);

/// Marker for an ideal whose zero set has a curve component.
struct NotFinite {
  friend bool operator==(NotFinite, NotFinite) { return true; }
};

using Colength = std::variant<std::uint64_t, NotFinite>;

/// dim_Q Q[z1, z2] / (beta, gamma). The ideal (1) has colength 0; a
/// nonconstant common factor (or both generators zero) gives NotFinite.
Colength colength(const Poly2& beta, const Poly2& gamma);

/// Reduced Groebner basis in grlex order of the ideal generated by
/// `generators`. Used by colength; exposed for tests.
std::vector<Poly2> groebner_basis(std::vector<Poly2> generators);

}  // namespace bidisk
