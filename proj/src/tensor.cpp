#include "bidisk/tensor.hpp"

#include <cctype>
#include <optional>

namespace bidisk {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SymTensor SymTensor::parse(std::string_view text) {
  std::optional<Poly2> a11, a22, a12;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = strip(text.substr(start, end - start));
    start = end + 1;
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("tensor literal: expected name=value in '" + std::string(field) + "'");
    std::string_view name = strip(field.substr(0, eq));
    std::optional<Poly2>* slot = name == "a11" ? &a11 : name == "a22" ? &a22 : name == "a12" ? &a12 : nullptr;
    if (slot == nullptr) throw InvalidInput("tensor literal: unknown field '" + std::string(name) + "'");
    if (slot->has_value()) throw InvalidInput("tensor literal: duplicate field '" + std::string(name) + "'");
    *slot = Poly2::parse(field.substr(eq + 1));
  }
  if (!a11 || !a22 || !a12) throw InvalidInput("tensor literal: fields a11, a22 and a12 are all required");
  return {*a11, *a22, *a12};
}

std::string SymTensor::to_string() const {
  return "a11=" + a11.to_string() + "; a22=" + a22.to_string() + "; a12=" + a12.to_string();
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
          x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
}

PolyVector apply(const Matrix2& m, const PolyVector& v) {
  return {m.m11 * v[0] + m.m12 * v[1], m.m21 * v[0] + m.m22 * v[1]};
}

ExtVector apply(const Matrix2& m, const ExtVector& v) {
  return {m.m11 * v[0] + m.m12 * v[1], m.m21 * v[0] + m.m22 * v[1]};
}

TraceZeroEndo::TraceZeroEndo(Matrix2 m) : m_(std::move(m)) {
  if (!m_.trace().is_zero()) throw InvalidInput("endomorphism has nonzero trace " + m_.trace().to_string());
}

TraceZeroEndo tensor_to_endo(const SymTensor& w) { return TraceZeroEndo(Matrix2{-w.a12, -w.a22, w.a11, w.a12}); }

SymTensor endo_to_tensor(const Matrix2& m) { return endo_to_tensor(TraceZeroEndo(m)); }

SymTensor endo_to_tensor(const TraceZeroEndo& e) {
  const Matrix2& m = e.matrix();
  return {m.m21, -m.m12, m.m22};
}

TensorDet tensor_det(const SymTensor& w) {
  Poly2 d = w.a11 * w.a22 - w.a12 * w.a12;
  bool constant = d.is_constant();
  return {std::move(d), constant};
}

// ---------------------------------------------------------------------------

namespace {

ExtVector eigenvector(const Matrix2& m, const SqrtExtScalar& lambda) {
  const Rat& d = lambda.discriminant();
  // (m12, lambda - m11) and (lambda - m22, m21) both solve (m - lambda) v = 0
  // because lambda^2 = -det(m) and trace(m) = 0; at least one is nonzero.
  ExtVector v{ExtPoly2(m.m12, Poly2(), d),
              ExtPoly2(Poly2(lambda.rational_part()) - m.m11, Poly2(lambda.root_part()), d)};
  if (v[0].is_zero() && v[1].is_zero()) {
    v = {ExtPoly2(Poly2(lambda.rational_part()) - m.m22, Poly2(lambda.root_part()), d),
         ExtPoly2(m.m21, Poly2(), d)};
  }
  const ExtPoly2& first = v[0].is_zero() ? v[1] : v[0];
  const SqrtExtScalar one = SqrtExtScalar::rational(Rat(1), d);
  const SqrtExtScalar scale = one / first.leading_coeff();
  return {scale * v[0], scale * v[1]};
}

}  // namespace

EigenSplit eigen_split(const SymTensor& w) {
  const TensorDet det = tensor_det(w);
  if (det.value.is_zero()) throw InvalidInput("eigen_split: determinant vanishes; use the nilpotent decomposition");
  if (!det.is_constant) throw NotASpecialTensor("eigen_split: determinant " + det.value.to_string() + " is not constant");

  const Rat disc = -det.value.constant_term();
  std::optional<Rat> rational_root = disc.sqrt();
  SqrtExtScalar c = rational_root ? SqrtExtScalar::rational(*rational_root, disc) : SqrtExtScalar::root(disc);

  const TraceZeroEndo e = tensor_to_endo(w);
  return {c, eigenvector(e.matrix(), c), eigenvector(e.matrix(), -c)};
}

NilpotentResult nilpotent_decompose(const SymTensor& w) {
  if (w.is_zero()) throw InvalidInput("nilpotent_decompose: zero tensor");
  if (!tensor_det(w).value.is_zero()) throw InvalidInput("nilpotent_decompose: determinant is not identically zero");

  const TraceZeroEndo e = tensor_to_endo(w);
  const Poly2 delta = gcd3(e.a(), e.b(), e.c());
  const Poly2 a = *divide_exact(e.a(), delta);
  const Poly2 b = *divide_exact(e.b(), delta);
  const Poly2 c = *divide_exact(e.c(), delta);

  auto beta = poly_sqrt(-b);
  if (!beta) return NotASquare{"-b/delta", -b};
  auto gamma = poly_sqrt(c);
  if (!gamma) return NotASquare{"c/delta", c};
  if (*beta * *gamma != a) *gamma = -*gamma;
  // a^2 = -b*c = (beta*gamma)^2 forces a = +-beta*gamma.
  if (*beta * *gamma != a) throw std::logic_error("nilpotent_decompose: incompatible square-root signs");

  return NilpotentDecomposition{delta, *beta, *gamma, {*beta, *gamma}, colength(*beta, *gamma)};
}

bool chern_consistency(long c2, long z_len, long L_self, long L_dot_Delta) {
  return c2 == z_len + L_self - L_dot_Delta;
}

}  // namespace bidisk
