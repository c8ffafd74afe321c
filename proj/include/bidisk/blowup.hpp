// Pulling a special tensor back along the blow-up of the origin.
//
// Coordinates (x, y) = (z1, z2) are centred at the blown-up point; the chart
// of the blow-up used here has coordinates (x, u) = (z1, z2) with y = u*x.
// Only this chart is computed; the other one is obtained by swapping x, y.
//
// In this module a tensor is read as (a dx^2 + b dy^2 + c dx dy)/(dx∧dy)
// with commuting products, so (a, b, c) = (a11, a22, 2*a12).
#pragma once

#include "bidisk/tensor.hpp"

#include <variant>

namespace bidisk {

struct BlowupCoefficients {
  Poly2 a;  // dx^2
  Poly2 b;  // dy^2
  Poly2 c;  // dx dy

  static BlowupCoefficients from_tensor(const SymTensor& w);
  SymTensor to_tensor() const;
  friend bool operator==(const BlowupCoefficients&, const BlowupCoefficients&) = default;
};

/// A special tensor on the (x, u) chart, pulled back from the origin.
struct BlowupChartTensor {
  SymTensor tensor;  // coordinates (z1, z2) = (x, u)
};

/// The pulled-back tensor has a pole along the exceptional divisor.
struct NonRegular {
  Poly2 numerator;  // a + b u^2 + c u evaluated at y = u x, not divisible by x
};

using PullbackResult = std::variant<BlowupChartTensor, NonRegular>;

/// Substitutes y = u x and divides by the Jacobian x:
///   dx^2 (a + b u^2 + c u)/x + du^2 (b x) + dx du (2 b u + c).
PullbackResult pullback(const SymTensor& w);

/// True iff all coefficients vanish at the centre; equivalent to the success
/// of pullback.
bool regularity_criterion(const SymTensor& w);

/// Inverse substitution u = y/x: recovers the tensor downstairs. Returns
/// nullopt if a coefficient is not a polynomial in (x, y).
std::optional<SymTensor> pushdown(const BlowupChartTensor& chart);

/// The blow-up substitution (x, u) -> (x, u x) applied to a function.
Poly2 blowup_substitute(const Poly2& p);

/// Inverse substitution u = y/x on a chart function, when the result is a
/// polynomial.
std::optional<Poly2> blowdown_substitute(const Poly2& p);

}  // namespace bidisk
