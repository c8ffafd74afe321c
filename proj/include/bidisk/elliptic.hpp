// Divisor arithmetic on minimal properly elliptic surfaces f: X -> B.
#pragma once

#include "bidisk/rational.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bidisk {

class InvalidDescriptor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FibreFamily { I, IStar, II, III, IV, IIStar, IIIStar, IVStar };

/// A singular fibre F = sum m_i C_i in Kodaira's notation. Tags are "I5",
/// "I0*", "II", "III", "IV", "II*", "III*", "IV*", and "3I2" for the
/// multiple fibre of multiplicity 3 and type I_2.
struct KodairaFibre {
  FibreFamily family = FibreFamily::I;
  int k = 0;            // index of I_k / I_k*
  int multiplicity = 1;  // n_p; >= 2 iff multiple
  std::vector<int> component_multiplicities;

  bool is_multiple() const { return multiplicity >= 2; }
  std::string tag() const;
  friend bool operator==(const KodairaFibre&, const KodairaFibre&) = default;
};

/// Parses a tag and fills in the standard component multiplicities.
/// Throws std::invalid_argument for unknown tags.
KodairaFibre standard_fibre(std::string_view tag);

/// The fibre types checked fibre by fibre: I_k (1 <= k <= 10), I_k*
/// (0 <= k <= 5), II, III, IV, II*, III*, IV*, and m I_k (2 <= m <= 5,
/// 0 <= k <= 4).
std::vector<KodairaFibre> standard_kodaira_table();

/// Reads "<tag> <m_1> ... <m_h>" lines ('#' starts a comment). Checks that
/// each tag parses, multiplicities are positive and multiple fibres have all
/// m_i = n_p. Throws FixtureError naming the file (and line).
std::vector<KodairaFibre> load_kodaira_table(const std::filesystem::path& path);

/// Writes the table in the format read by load_kodaira_table.
std::string format_kodaira_table(const std::vector<KodairaFibre>& table);

/// Neither 2*S_hat_p >= F_p nor S_m,p >= F_p. For a multiple fibre this is
/// (n_p - 1) < n_p; otherwise some component must have m_i = 1 so that
/// 2(m_i - 1) < m_i.
bool multiple_fibre_claim_check(const KodairaFibre& f);

struct EllipticDescriptor {
  long b = 0;   // genus of the base
  long chi = 1;
  long pg = 0;
  long q = 0;
  std::vector<long> multiple_fibre_orders;
  std::vector<KodairaFibre> singular_fibres;

  /// Throws InvalidDescriptor unless chi >= 1, chi = 1 + pg - q, q = b
  /// and every multiple fibre order is >= 2.
  void validate() const;
};

/// deg(delta) = chi - 2 + 2b in the canonical bundle formula.
long delta_degree(long chi, long b);

/// deg(2K_B - delta) = 3b - 3 - pg. Throws InvalidDescriptor if pg < b.
long special_tensor_degree(long b, long pg);

enum class NilpotentExistence { Guaranteed, NotGuaranteed };

struct NilpotentVerdict {
  NilpotentExistence status = NilpotentExistence::NotGuaranteed;
  std::string reason;
  bool exists() const { return status == NilpotentExistence::Guaranteed; }
};

/// Sufficient criterion: a divisor of degree >= b on B is effective, so a
/// nilpotent special tensor exists when 3 <= b and b <= pg <= 2b - 3.
/// NotGuaranteed does not mean no tensor exists. Throws InvalidDescriptor if
/// pg < b.
NilpotentVerdict exists_nilpotent_special_tensor(long b, long pg);

/// deg(delta) + sum (n_i - 1)/n_i; positive for properly elliptic surfaces.
Rat canonical_bundle_degree(const EllipticDescriptor& d);

struct WeierstrassFamily {
  long h = 0;
  long b = 0;              // 6h + 1
  long M_degree = 0;       // deg(h H) = 2h
  long KB_degree = 0;      // 2b - 2
  long six_M_degree = 0;   // 12h
  long residual_degree = 0;  // deg(K_B - 6M) = 0
  long h0 = 0;             // h^0(2L - K_X) with K_B == 6M
};

/// Hyperelliptic base of genus b = 6h + 1 with M = hH. Throws
/// std::invalid_argument for h < 1.
WeierstrassFamily weierstrass_example(long h);

}  // namespace bidisk
