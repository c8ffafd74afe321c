// Model surfaces: Hirzebruch surfaces F_n, products of curves and the
// numerical identities of surfaces with split tangent bundle.
#pragma once

#include <cstdint>
#include <vector>

namespace bidisk {

/// The divisor a*S + b*F on F_n, where S is the section with S^2 = -n and F
/// a fibre (S.F = 1, F^2 = 0).
struct DivisorFn {
  int n = 0;
  long a = 0;
  long b = 0;

  /// Intersection number with the negative section S.
  long dot_section() const { return -static_cast<long>(n) * a + b; }
  long dot(const DivisorFn& o) const { return -static_cast<long>(n) * a * o.a + a * o.b + b * o.a; }
  DivisorFn minus_section() const { return {n, a - 1, b}; }
  friend bool operator==(const DivisorFn&, const DivisorFn&) = default;
};

/// The canonical class -2S - (n+2)F.
DivisorFn canonical_divisor(int n);

struct H0Reduction {
  long value = 0;
  /// The divisors visited, starting from the input; consecutive entries
  /// have equal h^0.
  std::vector<DivisorFn> chain;
};

/// Peels S off the base locus while D.S < 0. Stops at a < 0 (value 0), at
/// a = 0 (value max(0, b+1)), or at D.S >= 0 where the higher cohomology
/// vanishes and h^0 = chi(D) by Riemann-Roch.
H0Reduction h0_fn_recursive(const DivisorFn& d);

/// Direct count of lattice points sum_{j=0}^{a} max(0, b - j n + 1).
long h0_fn_lattice(const DivisorFn& d);

/// Riemann-Roch chi(D) = 1 + (D^2 - D.K)/2 via the intersection form.
long riemann_roch_chi(const DivisorFn& d);

/// On P^2 with Pic = Z*H: true iff K = canonical_coeff*H has no square
/// root, i.e. canonical_coeff is odd.
bool p2_parity_obstruction(long canonical_coeff);

struct ProductSurface {
  int g1 = 0;
  int g2 = 0;
};

struct NumericalProfile {
  long K2 = 0;
  long chi = 0;
  long c2 = 0;
  long q = 0;
  long pg = 0;
  friend bool operator==(const NumericalProfile&, const NumericalProfile&) = default;
};

/// Section counts on a genus-g curve.
long curve_h0_canonical(int g);
long curve_h0_anticanonical(int g);
long curve_h0_bicanonical(int g);

NumericalProfile product_invariants(const ProductSurface& p);

/// dim H^0(S^2 Omega^1(-K)) on C1 x C2 by Kuenneth:
/// 1 + h0(K1) h0(-K2) + h0(-K1) h0(K2).
long product_special_tensor_dim(const ProductSurface& p);

/// P_2 = h0(2K1) * h0(2K2).
long product_bigenus(const ProductSurface& p);

/// K^2 == 8 chi and K^2 == 2 c2.
bool split_tangent_identities(const NumericalProfile& prof);

}  // namespace bidisk
