#include "bidisk/kernels.hpp"
#include "bidisk/random_poly.hpp"

#include <omp.h>

#include <exception>
#include <mutex>

namespace bidisk {

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body, ExecutionPolicy policy) {
  if (policy == ExecutionPolicy::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

int parallel_width() { return omp_get_max_threads(); }

std::vector<GridMismatch> hirzebruch_grid_mismatches(int max_n, long max_abs, ExecutionPolicy policy) {
  std::vector<DivisorFn> grid;
  for (int n = 0; n <= max_n; ++n)
    for (long a = -max_abs; a <= max_abs; ++a)
      for (long b = -max_abs; b <= max_abs; ++b) grid.push_back({n, a, b});

  std::vector<GridMismatch> results(grid.size());
  std::vector<char> bad(grid.size(), 0);
  for_each_index(grid.size(), [&](std::size_t i) {
    const long rec = h0_fn_recursive(grid[i]).value;
    const long lat = h0_fn_lattice(grid[i]);
    if (rec != lat) {
      results[i] = {grid[i], rec, lat};
      bad[i] = 1;
    }
  }, policy);

  std::vector<GridMismatch> mismatches;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (bad[i]) mismatches.push_back(results[i]);
  return mismatches;
}

std::vector<std::string> kodaira_claim_failures(const std::vector<KodairaFibre>& table, ExecutionPolicy policy) {
  std::vector<char> ok(table.size(), 0);
  for_each_index(table.size(), [&](std::size_t i) { ok[i] = multiple_fibre_claim_check(table[i]) ? 1 : 0; }, policy);
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!ok[i]) failures.push_back(table[i].tag());
  return failures;
}

namespace {

std::vector<TensorStatus> all_tensor_states() {
  return {TensorStatus::none(),           TensorStatus::semi_special_exists(), TensorStatus::semi_special_unique(),
          TensorStatus::special_dim(0),   TensorStatus::special_dim(1),        TensorStatus::special_dim(2),
          TensorStatus::special_dim(3)};
}

}  // namespace

ClassifyFuzzStats classify_fuzz(ExecutionPolicy policy) {
  std::vector<std::optional<long>> chis{std::nullopt};
  for (long c = -5; c <= 5; ++c) chis.emplace_back(c);
  std::vector<std::optional<long>> p2s{std::nullopt};
  for (long p = 0; p <= 20; ++p) p2s.emplace_back(p);
  const std::vector<std::optional<long>> qs{std::nullopt, 0L, 2L};

  struct Cell {
    long K2;
    std::optional<long> chi, P2, q;
  };
  std::vector<Cell> cells;
  for (long k2 = -10; k2 <= 20; ++k2)
    for (const auto& chi : chis)
      for (const auto& p2 : p2s)
        for (const auto& q : qs) cells.push_back({k2, chi, p2, q});

  const auto states = all_tensor_states();
  struct Local {
    std::size_t inputs = 0, bidisk = 0, ball = 0, refinement = 0, exceptions = 0;
  };
  std::vector<Local> per_cell(cells.size());

  for_each_index(cells.size(), [&](std::size_t i) {
    const Cell& c = cells[i];
    Local& out = per_cell[i];
    std::optional<Verdict> exists_verdict, unique_verdict;
    for (const auto& t : states) {
      ++out.inputs;
      try {
        const Classification r = classify({c.K2, c.chi, c.P2, c.q, t});
        if (r.verdict == Verdict::Bidisk && c.chi && c.K2 != 8 * *c.chi) ++out.bidisk;
        if (r.verdict == Verdict::Ball && (!c.chi || c.K2 != 9 * *c.chi)) ++out.ball;
        if (t.kind == TensorStatus::Kind::SemiSpecialExists) exists_verdict = r.verdict;
        if (t.kind == TensorStatus::Kind::SemiSpecialUnique) unique_verdict = r.verdict;
      } catch (...) {
        ++out.exceptions;
      }
    }
    if (c.P2 && *c.P2 != 1 && exists_verdict != unique_verdict) ++out.refinement;
  }, policy);

  ClassifyFuzzStats stats;
  for (const auto& l : per_cell) {
    stats.inputs += l.inputs;
    stats.bidisk_violations += l.bidisk;
    stats.ball_violations += l.ball;
    stats.refinement_violations += l.refinement;
    stats.exceptions += l.exceptions;
  }
  return stats;
}

// ---------------------------------------------------------------------------

Poly2 random_poly(std::mt19937_64& rng, const PolyShape& shape) {
  std::uniform_int_distribution<int> terms(0, shape.max_terms);
  std::uniform_int_distribution<int> deg(0, shape.max_degree);
  std::uniform_int_distribution<long> num(-shape.coeff_range, shape.coeff_range);
  std::uniform_int_distribution<long> den(1, std::max(1L, shape.max_denominator));
  Poly2 p;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    const int total = deg(rng);
    std::uniform_int_distribution<int> split(0, total);
    const int e1 = split(rng);
    p += Poly2::monomial({static_cast<std::uint32_t>(e1), static_cast<std::uint32_t>(total - e1)},
                         Rat(num(rng), den(rng)));
  }
  return p;
}

Poly2 random_nonzero_poly(std::mt19937_64& rng, const PolyShape& shape) {
  while (true) {
    Poly2 p = random_poly(rng, shape);
    if (!p.is_zero()) return p;
  }
}

SymTensor random_tensor(std::mt19937_64& rng, const PolyShape& shape) {
  Poly2 a11 = random_poly(rng, shape);
  Poly2 a22 = random_poly(rng, shape);
  Poly2 a12 = random_poly(rng, shape);
  return {std::move(a11), std::move(a22), std::move(a12)};
}

}  // namespace bidisk
