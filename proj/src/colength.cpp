#include "bidisk/polyalg.hpp"

#include <algorithm>
#include <utility>

namespace bidisk {

namespace {

Monomial lcm(Monomial a, Monomial b) { return {std::max(a.e1, b.e1), std::max(a.e2, b.e2)}; }

Monomial quotient(Monomial num, Monomial den) { return {num.e1 - den.e1, num.e2 - den.e2}; }

// Full reduction of f modulo the set g (every term, not only the leading one).
Poly2 reduce(Poly2 f, const std::vector<Poly2>& g) {
  Poly2 remainder;
  while (!f.is_zero()) {
    const Monomial lm = f.leading_monomial();
    const Rat lc = f.leading_coeff();
    bool divided = false;
    for (const auto& h : g) {
      if (h.is_zero() || !h.leading_monomial().divides(lm)) continue;
      f -= h.shifted(quotient(lm, h.leading_monomial())) * (lc / h.leading_coeff());
      divided = true;
      break;
    }
    if (!divided) {
      remainder += Poly2::monomial(lm, lc);
      f -= Poly2::monomial(lm, lc);
    }
  }
  return remainder;
}

Poly2 s_polynomial(const Poly2& f, const Poly2& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.shifted(quotient(l, f.leading_monomial())) * f.leading_coeff().inverse() -
         g.shifted(quotient(l, g.leading_monomial())) * g.leading_coeff().inverse();
}

}  // namespace

std::vector<Poly2> groebner_basis(std::vector<Poly2> generators) {
  std::vector<Poly2> basis;
  for (auto& g : generators)
    if (!g.is_zero()) basis.push_back(g.monic());

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const Monomial li = basis[i].leading_monomial();
    const Monomial lj = basis[j].leading_monomial();
    // Buchberger's first criterion: coprime leading monomials reduce to zero.
    if (lcm(li, lj) == li * lj) continue;
    Poly2 r = reduce(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<Poly2> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial li = basis[i].leading_monomial();
      const Monomial lj = basis[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Poly2> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly2> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Poly2 tail = minimal[i] - Poly2::monomial(minimal[i].leading_monomial(), Rat(1));
    reduced.push_back(Poly2::monomial(minimal[i].leading_monomial(), Rat(1)) + reduce(tail, others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly2& a, const Poly2& b) {
    return grlex_greater(b.leading_monomial(), a.leading_monomial());
  });
  return reduced;
}

Colength colength(const Poly2& beta, const Poly2& gamma) {
  const Poly2 common = gcd(beta, gamma);
  if (common.is_zero() || !common.is_constant()) return NotFinite{};

  const std::vector<Poly2> basis = groebner_basis({beta, gamma});
  std::vector<Monomial> leading;
  for (const auto& g : basis) leading.push_back(g.leading_monomial());

  std::optional<std::uint32_t> z1_bound;
  std::optional<std::uint32_t> z2_bound;
  for (const auto& m : leading) {
    if (m.degree() == 0) return std::uint64_t{0};
    if (m.e2 == 0) z1_bound = std::min(z1_bound.value_or(m.e1), m.e1);
    if (m.e1 == 0) z2_bound = std::min(z2_bound.value_or(m.e2), m.e2);
  }
  if (!z1_bound || !z2_bound) return NotFinite{};

  std::uint64_t count = 0;
  for (std::uint32_t i = 0; i < *z1_bound; ++i)
    for (std::uint32_t j = 0; j < *z2_bound; ++j) {
      const Monomial m{i, j};
      if (std::none_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); })) ++count;
    }
  return count;
}

}  // namespace bidisk
