// Deciding whether a compact complex surface is uniformized by the bidisk,
// the ball or neither, from its numerical invariants and tensor status.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bidisk {

struct TensorStatus {
  enum class Kind { NoTensor, SemiSpecialExists, SemiSpecialUnique, SpecialDim };
  Kind kind = Kind::NoTensor;
  long dim = 0;  // meaningful for SpecialDim only

  static TensorStatus none() { return {Kind::NoTensor, 0}; }
  static TensorStatus semi_special_exists() { return {Kind::SemiSpecialExists, 0}; }
  static TensorStatus semi_special_unique() { return {Kind::SemiSpecialUnique, 1}; }
  static TensorStatus special_dim(long d) { return {Kind::SpecialDim, d}; }

  /// A nonzero (semi) special tensor is known to exist.
  bool present() const;
  std::string to_string() const;
  friend bool operator==(const TensorStatus&, const TensorStatus&) = default;
};

struct SurfaceInvariants {
  long K2 = 0;
  std::optional<long> chi;
  std::optional<long> P2;
  std::optional<long> q;
  TensorStatus tensor;
};

enum class Verdict { Bidisk, Quadric, Ball, Dichotomy, NotCovered, Contradiction };

std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::NotCovered;
  std::string contradiction_reason;  // empty unless verdict == Contradiction
  /// Rules consulted and checks performed, in order, as "label: detail".
  std::vector<std::string> evidence;
  std::vector<std::string> warnings;
};

/// Evidence labels.
namespace rule {
inline constexpr const char* kTensorDichotomy = "tensor-dichotomy";
inline constexpr const char* kQuadric = "quadric:P2=0";
inline constexpr const char* kBidisk = "bidisk-quotient:P2>=2";
inline constexpr const char* kBigenusGap = "bigenus-gap:P2=1";
inline constexpr const char* kDichotomyOpen = "dichotomy:P2-unknown";
inline constexpr const char* kSplitProfile = "check:K2=8chi";
inline constexpr const char* kQuadricProfile = "check:quadric-profile";
inline constexpr const char* kUniqueness = "check:tensor-uniqueness";
inline constexpr const char* kMiyaokaYau = "miyaoka-yau:K2=9chi";
inline constexpr const char* kNotCovered = "not-covered";
}  // namespace rule

/// Rule order: tensor + K2 > 0 (quadric / bidisk dichotomy, split by P2),
/// then the Miyaoka-Yau ball criterion, else NotCovered. Consistency checks
/// run after a rule fires and may downgrade to Contradiction. Throws
/// std::invalid_argument for negative P2, q or special-tensor dimension.
Classification classify(const SurfaceInvariants& inv);

/// chi + K2, the bigenus of a minimal surface with ample canonical class.
/// Throws std::invalid_argument unless chi >= 1 and K2 >= 1.
long min_bigenus(long chi, long K2);

/// Dimension of the special tensors on an etale double cover X' given the
/// special and eta-twisted (semi special) tensor dimensions on X.
long double_cover_dims(long dim_special, long dim_twisted);

using InvariantPredicate = std::function<bool(const SurfaceInvariants&)>;

/// Necessary condition for a quotient of the n-polydisk: a semi special
/// tensor and K^n > 0. Only n = 2 is supported (std::invalid_argument
/// otherwise).
InvariantPredicate polydisk_necessary_profile(int n);

}  // namespace bidisk
