// Data-parallel sweeps over independent inputs. Every kernel has a serial
// reference path and an OpenMP path; both produce identical, input-ordered
// results.
#pragma once

#include "bidisk/classify.hpp"
#include "bidisk/elliptic.hpp"
#include "bidisk/surfaces.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace bidisk {

enum class ExecutionPolicy { Serial, Parallel };

/// Calls body(i) for every i in [0, n). Under Parallel the calls run on
/// OpenMP threads; the first exception thrown by any call is rethrown after
/// the loop.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, ExecutionPolicy policy);

/// Number of OpenMP threads a Parallel sweep would use.
int parallel_width();

struct GridMismatch {
  DivisorFn divisor;
  long recursive = 0;
  long lattice = 0;
};

/// Compares h0_fn_recursive with h0_fn_lattice on 0 <= n <= max_n,
/// |a|, |b| <= max_abs. Returns the disagreements in grid order.
std::vector<GridMismatch> hirzebruch_grid_mismatches(int max_n, long max_abs, ExecutionPolicy policy);

/// Tags of fibres failing multiple_fibre_claim_check, in table order.
std::vector<std::string> kodaira_claim_failures(const std::vector<KodairaFibre>& table, ExecutionPolicy policy);

struct ClassifyFuzzStats {
  std::size_t inputs = 0;
  std::size_t bidisk_violations = 0;  // Bidisk with chi known and K2 != 8 chi
  std::size_t ball_violations = 0;    // Ball with K2 != 9 chi
  std::size_t refinement_violations = 0;  // Exists vs Unique disagree (P2 known, != 1)
  std::size_t exceptions = 0;
};

/// Sweeps K2 in [-10, 20], chi in [-5, 5] or unknown, P2 in [0, 20] or
/// unknown and every tensor state.
ClassifyFuzzStats classify_fuzz(ExecutionPolicy policy);

}  // namespace bidisk
