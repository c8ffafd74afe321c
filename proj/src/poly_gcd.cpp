#include "bidisk/polyalg.hpp"

#include <algorithm>
#include <utility>

namespace bidisk {

std::optional<Poly2> divide_exact(const Poly2& dividend, const Poly2& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  const Monomial lm = divisor.leading_monomial();
  const Rat lc = divisor.leading_coeff();
  Poly2 remainder = dividend;
  Poly2 quotient;
  while (!remainder.is_zero()) {
    const Monomial rm = remainder.leading_monomial();
    if (!lm.divides(rm)) return std::nullopt;
    Poly2 t = Poly2::monomial({rm.e1 - lm.e1, rm.e2 - lm.e2}, remainder.leading_coeff() / lc);
    remainder -= t * divisor;
    quotient += t;
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// gcd via the recursive view Q[z2][z1]: content gcd in Q[z2] times the
// primitive part of a primitive pseudo-remainder sequence in z1.

namespace {

using UPoly = std::vector<Rat>;  // dense in z2, index = degree
using RPoly = std::vector<UPoly>;  // dense in z1, coefficients in Q[z2]

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a = q * b + r with deg r < deg b; b nonzero.
std::pair<UPoly, UPoly> u_divmod(UPoly a, const UPoly& b) {
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rat f = a.back() * lead_inv;
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly u_monic(UPoly p) {
  if (p.empty()) return p;
  Rat inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly u_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = u_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(std::move(a));
}

RPoly to_recursive(const Poly2& p) {
  RPoly r(static_cast<std::size_t>(std::max(p.degree_in_z1() + 1, 0)));
  for (const auto& [m, c] : p.terms()) {
    UPoly& u = r[m.e1];
    if (u.size() <= m.e2) u.resize(m.e2 + 1, Rat(0));
    u[m.e2] = c;
  }
  return r;
}

Poly2 from_recursive(const RPoly& r) {
  Poly2 p;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j)
      p += Poly2::monomial({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, r[i][j]);
  return p;
}

UPoly content(const RPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? u_monic(c) : u_gcd(g, c);
    if (g.size() == 1) break;
  }
  return g;
}

RPoly primitive_part(const RPoly& p) {
  UPoly c = content(p);
  RPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].empty()) r[i] = u_divmod(p[i], c).first;
  return r;
}

// lc(b)^k * a - q * b with deg_z1 < deg_z1 b.
RPoly pseudo_remainder(RPoly a, const RPoly& b) {
  const UPoly& lcb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    UPoly lca = a.back();
    for (auto& c : a) c = u_mul(c, lcb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = u_sub(a[i + shift], u_mul(lca, b[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  RPoly ra = to_recursive(a);
  RPoly rb = to_recursive(b);
  UPoly c = u_gcd(content(ra), content(rb));
  ra = primitive_part(ra);
  rb = primitive_part(rb);
  if (ra.size() < rb.size()) std::swap(ra, rb);
  while (!rb.empty()) {
    RPoly r = pseudo_remainder(ra, rb);
    ra = std::move(rb);
    rb = r.empty() ? RPoly{} : primitive_part(r);
  }
  RPoly g = primitive_part(ra);
  for (auto& coeff : g) coeff = u_mul(coeff, c);
  trim(g);
  return from_recursive(g).monic();
}

Poly2 gcd3(const Poly2& a, const Poly2& b, const Poly2& c) {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw DegenerateInput("gcd3: all three polynomials are zero");
  return gcd(gcd(a, b), c);
}

// ---------------------------------------------------------------------------

std::optional<Poly2> poly_sqrt(const Poly2& p) {
  if (p.is_zero()) return Poly2();
  const Monomial lm = p.leading_monomial();
  if (lm.e1 % 2 != 0 || lm.e2 % 2 != 0) return std::nullopt;
  auto root_coeff = p.leading_coeff().sqrt();
  if (!root_coeff) return std::nullopt;
  const Monomial root_lm{lm.e1 / 2, lm.e2 / 2};
  const Poly2 twice_lead = Poly2::monomial(root_lm, *root_coeff * Rat(2));
  // Every term of a square root has degree >= half the lowest degree of p.
  const int min_root_degree = (p.min_degree() + 1) / 2;

  Poly2 root = Poly2::monomial(root_lm, *root_coeff);
  while (true) {
    Poly2 residual = p - root * root;
    if (residual.is_zero()) return root;
    const Monomial rm = residual.leading_monomial();
    if (!root_lm.divides(rm)) return std::nullopt;
    const Monomial next{rm.e1 - root_lm.e1, rm.e2 - root_lm.e2};
    if (static_cast<int>(next.degree()) < min_root_degree) return std::nullopt;
    root += Poly2::monomial(next, residual.leading_coeff() / twice_lead.leading_coeff());
  }
}

Poly2 substitute(const Poly2& p, const Poly2& e1, const Poly2& e2) {
  std::vector<Poly2> pow1{Poly2(1)};
  std::vector<Poly2> pow2{Poly2(1)};
  Poly2 result;
  for (const auto& [m, c] : p.terms()) {
    while (pow1.size() <= m.e1) pow1.push_back(pow1.back() * e1);
    while (pow2.size() <= m.e2) pow2.push_back(pow2.back() * e2);
    result += c * (pow1[m.e1] * pow2[m.e2]);
  }
  return result;
}

}  // namespace bidisk
