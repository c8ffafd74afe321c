#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace bidisk::oracle {

const std::vector<Poly2>& irreducible_pool() {
  static const std::vector<Poly2> pool = {
      Poly2::parse("z1"),
      Poly2::parse("z2"),
      Poly2::parse("z1 + z2"),
      Poly2::parse("z1 - 2*z2 + 1"),
      Poly2::parse("z1^2 + z2"),
      Poly2::parse("z2^2 + z1 + 3"),
      Poly2::parse("z1*z2 + 1"),
      Poly2::parse("z1^2 + z2^2 + 1"),
  };
  return pool;
}

Poly2 Factored::expand() const {
  Poly2 p(unit);
  const auto& pool = irreducible_pool();
  for (std::size_t i = 0; i < exponents.size(); ++i) p *= pool[i].pow(static_cast<unsigned>(exponents[i]));
  return p;
}

Factored random_factored(std::mt19937_64& rng, int max_exponent, int max_factors) {
  const auto& pool = irreducible_pool();
  Factored f;
  f.exponents.assign(pool.size(), 0);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> count(0, max_factors);
  std::uniform_int_distribution<int> expo(1, max_exponent);
  std::uniform_int_distribution<long> unit(1, 6);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) f.exponents[pick(rng)] += expo(rng);
  f.unit = Rat(unit(rng) * (rng() % 2 == 0 ? 1 : -1), unit(rng));
  return f;
}

Poly2 gcd_by_factor_intersection(const std::vector<Factored>& inputs) {
  const auto& pool = irreducible_pool();
  Poly2 g(1);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    int e = inputs.front().exponents[i];
    for (const auto& f : inputs) e = std::min(e, f.exponents[i]);
    g *= pool[i].pow(static_cast<unsigned>(e));
  }
  return g * g.leading_coeff().inverse();
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rat inv = rows[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rat f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t macaulay_quotient_dim(const std::vector<Poly2>& generators, int D) {
  std::map<std::pair<int, int>, std::size_t> column;
  for (int d = 0; d <= D; ++d)
    for (int i = 0; i <= d; ++i) column.emplace(std::make_pair(i, d - i), column.size());

  std::vector<std::vector<Rat>> rows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const int dg = g.total_degree();
    for (int d = 0; d + dg <= D; ++d)
      for (int i = 0; i <= d; ++i) {
        std::vector<Rat> row(column.size(), Rat(0));
        const Poly2 shifted = g.shifted({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(d - i)});
        for (const auto& [m, c] : shifted.terms()) row[column.at({static_cast<int>(m.e1), static_cast<int>(m.e2)})] = c;
        rows.push_back(std::move(row));
      }
  }
  return column.size() - rational_rank(std::move(rows));
}

}  // namespace bidisk::oracle
