#include "bidisk/blowup.hpp"

namespace bidisk {

BlowupCoefficients BlowupCoefficients::from_tensor(const SymTensor& w) {
  return {w.a11, w.a22, w.a12 * Rat(2)};
}

SymTensor BlowupCoefficients::to_tensor() const { return {a, b, c * Rat(1, 2)}; }

Poly2 blowup_substitute(const Poly2& p) { return substitute(p, Poly2::z1(), Poly2::z1() * Poly2::z2()); }

std::optional<Poly2> blowdown_substitute(const Poly2& p) {
  Poly2 result;
  for (const auto& [m, c] : p.terms()) {
    if (m.e2 > m.e1) return std::nullopt;
    result += Poly2::monomial({m.e1 - m.e2, m.e2}, c);
  }
  return result;
}

PullbackResult pullback(const SymTensor& w) {
  const BlowupCoefficients src = BlowupCoefficients::from_tensor(w);
  const Poly2 x = Poly2::z1();
  const Poly2 u = Poly2::z2();
  const Poly2 a = blowup_substitute(src.a);
  const Poly2 b = blowup_substitute(src.b);
  const Poly2 c = blowup_substitute(src.c);

  const Poly2 numerator = a + b * u * u + c * u;
  auto reduced = divide_exact(numerator, x);
  if (!reduced) return NonRegular{numerator};
  const BlowupCoefficients chart{*reduced, b * x, Rat(2) * b * u + c};
  return BlowupChartTensor{chart.to_tensor()};
}

bool regularity_criterion(const SymTensor& w) {
  return w.a11.constant_term().is_zero() && w.a22.constant_term().is_zero() && w.a12.constant_term().is_zero();
}

std::optional<SymTensor> pushdown(const BlowupChartTensor& chart) {
  // Invert: b = b'/x, c = c' - 2 b u, a = x a' - b u^2 - c u, then u = y/x.
  const BlowupCoefficients up = BlowupCoefficients::from_tensor(chart.tensor);
  const Poly2 x = Poly2::z1();
  const Poly2 u = Poly2::z2();
  auto b = divide_exact(up.b, x);
  if (!b) return std::nullopt;
  const Poly2 c = up.c - Rat(2) * *b * u;
  const Poly2 a = x * up.a - *b * u * u - c * u;

  auto a_down = blowdown_substitute(a);
  auto b_down = blowdown_substitute(*b);
  auto c_down = blowdown_substitute(c);
  if (!a_down || !b_down || !c_down) return std::nullopt;
  return BlowupCoefficients{*a_down, *b_down, *c_down}.to_tensor();
}

}  // namespace bidisk
