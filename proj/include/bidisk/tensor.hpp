// Special tensors in local coordinates and the corresponding trace-zero
// endomorphisms of the tangent bundle.
//
// A special tensor is written
//
//   w = (a11 dz1⊗dz1 + a22 dz2⊗dz2 + a12 (dz1⊗dz2 + dz2⊗dz1)) / (dz1∧dz2)
//
// and corresponds to the endomorphism [[-a12, -a22], [a11, a12]]. Entries of
// that matrix are named (a, b, c) = (m11, m12, m21), so that a nilpotent
// endomorphism reads [[a, b], [c, -a]] with a^2 = -b*c.
#pragma once

#include "bidisk/polyalg.hpp"
#include "bidisk/sqrt_ext.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace bidisk {

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Local data whose determinant is not constant cannot come from a global
/// special tensor.
class NotASpecialTensor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SymTensor {
  Poly2 a11;
  Poly2 a22;
  Poly2 a12;

  bool is_zero() const { return a11.is_zero() && a22.is_zero() && a12.is_zero(); }
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

  /// Literal "a11=<poly>; a22=<poly>; a12=<poly>". Fields may appear in any
  /// order; each exactly once. Throws InvalidInput or PolyParseError.
  static SymTensor parse(std::string_view text);
  std::string to_string() const;
};

struct Matrix2 {
  Poly2 m11, m12, m21, m22;

  Poly2 trace() const { return m11 + m22; }
  Poly2 det() const { return m11 * m22 - m12 * m21; }
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
  bool is_zero() const { return m11.is_zero() && m12.is_zero() && m21.is_zero() && m22.is_zero(); }
};

using PolyVector = std::array<Poly2, 2>;
PolyVector apply(const Matrix2& m, const PolyVector& v);

/// 2x2 polynomial matrix with m11 + m22 == 0.
class TraceZeroEndo {
 public:
  /// Throws InvalidInput when the trace is not identically zero.
  explicit TraceZeroEndo(Matrix2 m);
  const Matrix2& matrix() const { return m_; }
  const Poly2& a() const { return m_.m11; }
  const Poly2& b() const { return m_.m12; }
  const Poly2& c() const { return m_.m21; }
  friend bool operator==(const TraceZeroEndo&, const TraceZeroEndo&) = default;

 private:
  Matrix2 m_;
};

TraceZeroEndo tensor_to_endo(const SymTensor& w);
/// Throws InvalidInput when the trace of `m` is nonzero.
SymTensor endo_to_tensor(const Matrix2& m);
SymTensor endo_to_tensor(const TraceZeroEndo& e);

struct TensorDet {
  Poly2 value;  // a11*a22 - a12^2
  bool is_constant = false;
};
TensorDet tensor_det(const SymTensor& w);

using ExtVector = std::array<ExtPoly2, 2>;

struct EigenSplit {
  SqrtExtScalar eigenvalue;  // c with c^2 = -det; eigenvalues are +c and -c
  ExtVector eigenvector_plus;
  ExtVector eigenvector_minus;
};

/// Requires det(w) to be a nonzero constant. Throws InvalidInput when det
/// vanishes identically (use nilpotent_decompose) and NotASpecialTensor when
/// it is not constant. Eigenvectors are scaled so the leading coefficient of
/// their first nonzero component is 1.
EigenSplit eigen_split(const SymTensor& w);

/// e * v for a rational matrix and an extension-valued vector.
ExtVector apply(const Matrix2& m, const ExtVector& v);

struct NilpotentDecomposition {
  Poly2 delta;
  Poly2 beta;
  Poly2 gamma;
  PolyVector kernel_generator;  // (beta, gamma)
  Colength z_colength;
};

/// Which square root failed over Q.
struct NotASquare {
  std::string which;  // "-b/delta" or "c/delta"
  Poly2 value;
};

using NilpotentResult = std::variant<NilpotentDecomposition, NotASquare>;

/// delta = gcd3(a, b, c); beta = sqrt(-b/delta), gamma = sqrt(c/delta) with
/// the sign of gamma chosen so that a/delta = beta*gamma. Requires w != 0 and
/// det(w) == 0 identically (InvalidInput otherwise).
NilpotentResult nilpotent_decompose(const SymTensor& w);

/// c2 == length(Z) + L^2 - L.Delta.
bool chern_consistency(long c2, long z_len, long L_self, long L_dot_Delta);

}  // namespace bidisk
