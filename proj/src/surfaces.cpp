#include "bidisk/surfaces.hpp"

#include <algorithm>
#include <stdexcept>

namespace bidisk {

DivisorFn canonical_divisor(int n) { return {n, -2, -(static_cast<long>(n) + 2)}; }

long riemann_roch_chi(const DivisorFn& d) {
  const DivisorFn k = canonical_divisor(d.n);
  const long twice = d.dot(d) - d.dot(k);  // always even
  return 1 + twice / 2;
}

H0Reduction h0_fn_recursive(const DivisorFn& d) {
  if (d.n < 0) throw std::invalid_argument("h0_fn_recursive: negative Hirzebruch index");
  H0Reduction out;
  DivisorFn cur = d;
  out.chain.push_back(cur);
  // Each peel lowers a by one, so the loop ends once a reaches 0.
  while (true) {
    if (cur.a < 0) {
      out.value = 0;
      return out;
    }
    if (cur.a == 0) {
      out.value = std::max(0L, cur.b + 1);
      return out;
    }
    if (cur.dot_section() >= 0) break;
    cur = cur.minus_section();
    out.chain.push_back(cur);
  }
  // a > 0 and D.S >= 0, hence b >= a n >= 0 and h^1 = h^2 = 0.
  out.value = riemann_roch_chi(cur);
  return out;
}

long h0_fn_lattice(const DivisorFn& d) {
  if (d.n < 0) throw std::invalid_argument("h0_fn_lattice: negative Hirzebruch index");
  long total = 0;
  for (long j = 0; j <= d.a; ++j) total += std::max(0L, d.b - j * d.n + 1);
  return total;
}

bool p2_parity_obstruction(long canonical_coeff) { return canonical_coeff % 2 != 0; }

long curve_h0_canonical(int g) { return g; }

long curve_h0_anticanonical(int g) {
  if (g == 0) return 3;
  if (g == 1) return 1;
  return 0;
}

long curve_h0_bicanonical(int g) {
  if (g == 0) return 0;
  if (g == 1) return 1;
  return 3L * g - 3;
}

NumericalProfile product_invariants(const ProductSurface& p) {
  if (p.g1 < 0 || p.g2 < 0) throw std::invalid_argument("product_invariants: negative genus");
  NumericalProfile prof;
  prof.chi = static_cast<long>(p.g1 - 1) * (p.g2 - 1);
  prof.K2 = 8 * prof.chi;
  prof.q = p.g1 + p.g2;
  prof.pg = static_cast<long>(p.g1) * p.g2;
  prof.c2 = 12 * prof.chi - prof.K2;
  return prof;
}

long product_special_tensor_dim(const ProductSurface& p) {
  if (p.g1 < 0 || p.g2 < 0) throw std::invalid_argument("product_special_tensor_dim: negative genus");
  return 1 + curve_h0_canonical(p.g1) * curve_h0_anticanonical(p.g2) +
         curve_h0_anticanonical(p.g1) * curve_h0_canonical(p.g2);
}

long product_bigenus(const ProductSurface& p) {
  if (p.g1 < 0 || p.g2 < 0) throw std::invalid_argument("product_bigenus: negative genus");
  return curve_h0_bicanonical(p.g1) * curve_h0_bicanonical(p.g2);
}

bool split_tangent_identities(const NumericalProfile& prof) {
  return prof.K2 == 8 * prof.chi && prof.K2 == 2 * prof.c2;
}

}  // namespace bidisk
