// Built-in verification suite run by `bidisk selftest`.
#pragma once

#include "bidisk/kernels.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace bidisk {

struct PropertyOutcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return cases > 0 && failures == 0; }
};

/// endo_to_tensor . tensor_to_endo == id and trace == 0 on random tensors.
PropertyOutcome tensor_round_trip_property(std::size_t count, std::uint64_t seed, ExecutionPolicy policy);

/// Builds eps = delta*[[beta*gamma, -beta^2], [gamma^2, -beta*gamma]] from
/// random monic delta and coprime beta, gamma (entries of degree <= 4),
/// decomposes it and checks recovery up to a common sign, eps^2 = 0,
/// eps*(beta, gamma)^t = 0 and that both columns of eps/delta are multiples
/// of (beta, gamma)^t.
PropertyOutcome nilpotent_synthesis_property(std::size_t count, std::uint64_t seed, ExecutionPolicy policy);

/// pullback succeeds iff regularity_criterion, for random tensors of degree
/// <= 3 (roughly half of them forced to vanish at the origin), plus the
/// pushdown and determinant identities on the regular ones.
PropertyOutcome blowup_equivalence_property(std::size_t count, std::uint64_t seed, ExecutionPolicy policy);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every check; a missing or malformed fixture fails the
/// "kodaira_fixture" check and skips the fibre claim check.
std::vector<CheckResult> run_selftest(const std::filesystem::path& kodaira_fixture, ExecutionPolicy policy);

/// Shipped location of the Kodaira table fixture.
std::filesystem::path default_kodaira_fixture();

}  // namespace bidisk
