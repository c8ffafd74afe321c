// Seeded generators for random polynomials and tensors (tests, selftest,
// benchmarks).
#pragma once

#include "bidisk/tensor.hpp"

#include <random>

namespace bidisk {

struct PolyShape {
  int max_degree = 3;
  int max_terms = 4;
  long coeff_range = 5;  // numerators in [-coeff_range, coeff_range]
  long max_denominator = 1;
};

Poly2 random_poly(std::mt19937_64& rng, const PolyShape& shape);
/// Like random_poly but never the zero polynomial.
Poly2 random_nonzero_poly(std::mt19937_64& rng, const PolyShape& shape);
SymTensor random_tensor(std::mt19937_64& rng, const PolyShape& shape);

}  // namespace bidisk
