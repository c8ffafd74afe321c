#include "bidisk/selftest.hpp"
#include "bidisk/blowup.hpp"
#include "bidisk/random_poly.hpp"

#include <mutex>
#include <sstream>

namespace bidisk {

namespace {

// Collects per-case failures from a parallel sweep in case order.
class FailureLog {
 public:
  explicit FailureLog(std::size_t n) : messages_(n) {}
  void fail(std::size_t i, std::string msg) { messages_[i] = std::move(msg); }
  PropertyOutcome outcome() const {
    PropertyOutcome out;
    out.cases = messages_.size();
    for (const auto& m : messages_) {
      if (m.empty()) continue;
      if (out.failures++ == 0) out.first_failure = m;
    }
    return out;
  }

 private:
  std::vector<std::string> messages_;
};

Poly2 without_constant(const Poly2& p) { return p - Poly2(p.constant_term()); }

// f with col == f * (beta, gamma), if any.
std::optional<Poly2> multiple_of(const PolyVector& col, const Poly2& beta, const Poly2& gamma) {
  std::optional<Poly2> f;
  if (!beta.is_zero()) {
    f = divide_exact(col[0], beta);
  } else if (!gamma.is_zero()) {
    f = divide_exact(col[1], gamma);
  }
  if (!f) return std::nullopt;
  if (*f * beta != col[0] || *f * gamma != col[1]) return std::nullopt;
  return f;
}

}  // namespace

PropertyOutcome tensor_round_trip_property(std::size_t count, std::uint64_t seed, ExecutionPolicy policy) {
  FailureLog log(count);
  for_each_index(count, [&](std::size_t i) {
    std::mt19937_64 rng(seed + i);
    const SymTensor w = random_tensor(rng, {4, 5, 7, 3});
    const TraceZeroEndo e = tensor_to_endo(w);
    if (!e.matrix().trace().is_zero()) return log.fail(i, "nonzero trace for " + w.to_string());
    if (endo_to_tensor(e) != w) return log.fail(i, "tensor round trip failed for " + w.to_string());
    if (tensor_to_endo(endo_to_tensor(e)).matrix() != e.matrix())
      return log.fail(i, "endomorphism round trip failed for " + w.to_string());
    if (tensor_det(w).value != e.matrix().det()) return log.fail(i, "det mismatch for " + w.to_string());
  }, policy);
  return log.outcome();
}

PropertyOutcome nilpotent_synthesis_property(std::size_t count, std::uint64_t seed, ExecutionPolicy policy) {
  FailureLog log(count);
  for_each_index(count, [&](std::size_t i) {
    std::mt19937_64 rng(seed + i);
    std::uniform_int_distribution<int> split(0, 2);
    const int delta_deg = split(rng);
    const int root_deg = (4 - delta_deg) / 2;
    const Poly2 delta = random_nonzero_poly(rng, {delta_deg, 3, 4, 2}).monic();
    Poly2 beta, gamma;
    do {
      beta = random_nonzero_poly(rng, {root_deg, 3, 4, 2});
      gamma = random_nonzero_poly(rng, {root_deg, 3, 4, 2});
    } while (!gcd(beta, gamma).is_constant());

    const Matrix2 eps{delta * beta * gamma, -(delta * beta * beta), delta * gamma * gamma, -(delta * beta * gamma)};
    const SymTensor w = endo_to_tensor(eps);
    const std::string where = "delta=" + delta.to_string() + ", beta=" + beta.to_string() + ", gamma=" + gamma.to_string();

    if (!(eps * eps).is_zero()) return log.fail(i, "eps^2 != 0 for " + where);
    const NilpotentResult res = nilpotent_decompose(w);
    const auto* d = std::get_if<NilpotentDecomposition>(&res);
    if (d == nullptr) return log.fail(i, "NotASquare for " + where);

    const Rat sign(beta.leading_coeff().sign());
    if (d->delta != delta || d->beta != beta * sign || d->gamma != gamma * sign)
      return log.fail(i, "recovered (" + d->delta.to_string() + ", " + d->beta.to_string() + ", " +
                             d->gamma.to_string() + ") for " + where);
    const PolyVector kernel = apply(eps, d->kernel_generator);
    if (!kernel[0].is_zero() || !kernel[1].is_zero()) return log.fail(i, "eps*(beta, gamma) != 0 for " + where);
    const PolyVector col1{*divide_exact(eps.m11, d->delta), *divide_exact(eps.m21, d->delta)};
    const PolyVector col2{*divide_exact(eps.m12, d->delta), *divide_exact(eps.m22, d->delta)};
    if (!multiple_of(col1, d->beta, d->gamma) || !multiple_of(col2, d->beta, d->gamma))
      return log.fail(i, "image of eps/delta not in span of (beta, gamma) for " + where);
  }, policy);
  return log.outcome();
}

PropertyOutcome blowup_equivalence_property(std::size_t count, std::uint64_t seed, ExecutionPolicy policy) {
  FailureLog log(count);
  for_each_index(count, [&](std::size_t i) {
    std::mt19937_64 rng(seed + i);
    SymTensor w = random_tensor(rng, {3, 4, 5, 2});
    if (i % 2 == 0) w = {without_constant(w.a11), without_constant(w.a22), without_constant(w.a12)};
    if (i % 7 == 3) w.a22 += Poly2(1);  // single nonvanishing coefficient

    const bool criterion = regularity_criterion(w);
    const PullbackResult p = pullback(w);
    const auto* chart = std::get_if<BlowupChartTensor>(&p);
    if (criterion != (chart != nullptr))
      return log.fail(i, "criterion " + std::to_string(criterion) + " disagrees with pullback for " + w.to_string());
    if (chart == nullptr) return;
    const auto down = pushdown(*chart);
    if (!down || *down != w) return log.fail(i, "pushdown does not recover " + w.to_string());
    if (tensor_det(chart->tensor).value != blowup_substitute(tensor_det(w).value))
      return log.fail(i, "det does not pull back for " + w.to_string());
  }, policy);
  return log.outcome();
}

std::filesystem::path default_kodaira_fixture() { return std::filesystem::path(BIDISK_DATA_DIR) / "kodaira_table.txt"; }

namespace {

CheckResult from_property(std::string name, const PropertyOutcome& o) {
  std::string detail = std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) + " cases";
  if (!o.first_failure.empty()) detail += "; first failure: " + o.first_failure;
  return {std::move(name), o.passed(), detail};
}

CheckResult check_classifier_table() {
  struct Row {
    SurfaceInvariants inv;
    Verdict expected;
  };
  const Row rows[] = {
      {{8, 1, 9, 0, TensorStatus::semi_special_unique()}, Verdict::Bidisk},
      {{8, 1, 0, 0, TensorStatus::semi_special_unique()}, Verdict::Quadric},
      {{9, 1, 3, 0, TensorStatus::none()}, Verdict::Ball},
      {{0, 0, 3, 2, TensorStatus::special_dim(3)}, Verdict::NotCovered},
      {{16, 2, 5, std::nullopt, TensorStatus::semi_special_exists()}, Verdict::Bidisk},
      {{8, 1, 1, 0, TensorStatus::semi_special_unique()}, Verdict::Contradiction},
      {{8, 1, 9, 0, TensorStatus::special_dim(2)}, Verdict::Contradiction},
  };
  std::size_t ok = 0;
  std::string detail;
  for (const auto& row : rows) {
    const Verdict got = classify(row.inv).verdict;
    if (got == row.expected) {
      ++ok;
    } else if (detail.empty()) {
      detail = "; expected " + to_string(row.expected) + ", got " + to_string(got);
    }
  }
  constexpr std::size_t total = std::size(rows);
  return {"classifier_truth_table", ok == total, std::to_string(ok) + "/" + std::to_string(total) + " rows" + detail};
}

CheckResult check_elliptic_arithmetic() {
  std::size_t bad = 0;
  for (long b = 0; b <= 20; ++b)
    for (long pg = b; pg <= b + 30; ++pg)
      if (special_tensor_degree(b, pg) + delta_degree(1 + pg - b, b) != 4 * b - 4) ++bad;
  for (long b = 0; b <= 30; ++b)
    for (long pg = b; pg <= 30; ++pg) {
      const bool window = b >= 3 && b <= pg && pg <= 2 * b - 3;
      if (exists_nilpotent_special_tensor(b, pg).exists() != window) ++bad;
    }
  for (long h = 1; h <= 10; ++h) {
    const WeierstrassFamily w = weierstrass_example(h);
    if (w.b != 6 * h + 1 || w.residual_degree != 0 || w.h0 != 1) ++bad;
  }
  return {"elliptic_arithmetic", bad == 0, std::to_string(bad) + " violations"};
}

CheckResult check_product_identities() {
  std::size_t bad = 0;
  for (int g1 = 0; g1 <= 6; ++g1)
    for (int g2 = 0; g2 <= 6; ++g2) {
      const NumericalProfile p = product_invariants({g1, g2});
      if (p.K2 != 8 * p.chi || p.c2 != 12 * p.chi - p.K2 || p.chi != 1 + p.pg - p.q) ++bad;
      if (!split_tangent_identities(p)) ++bad;
      if (g1 >= 2 && g2 >= 2 && product_special_tensor_dim({g1, g2}) != 1) ++bad;
    }
  if (product_special_tensor_dim({0, 0}) != 1 || product_special_tensor_dim({1, 1}) != 3 ||
      product_special_tensor_dim({1, 2}) != 3)
    ++bad;
  return {"product_identities", bad == 0, std::to_string(bad) + " violations"};
}

CheckResult check_vanishing_chain() {
  std::size_t bad = 0;
  for (int n = 0; n <= 20; ++n) {
    const DivisorFn d{n, 2, -(n + 2L)};
    const H0Reduction red = h0_fn_recursive(d);
    const std::vector<DivisorFn> expected{d, {n, 1, -(n + 2L)}, {n, 0, -(n + 2L)}};
    if (red.value != 0 || h0_fn_lattice(d) != 0 || red.chain != expected) ++bad;
  }
  return {"hirzebruch_vanishing_chain", bad == 0, std::to_string(bad) + " violations for 0 <= n <= 20"};
}

}  // namespace

std::vector<CheckResult> run_selftest(const std::filesystem::path& kodaira_fixture, ExecutionPolicy policy) {
  std::vector<CheckResult> checks;

  try {
    const auto table = load_kodaira_table(kodaira_fixture);
    checks.push_back({"kodaira_fixture", !table.empty(),
                      std::to_string(table.size()) + " fibre types from " + kodaira_fixture.string()});
    const auto failures = kodaira_claim_failures(table, policy);
    std::string detail = std::to_string(table.size() - failures.size()) + "/" + std::to_string(table.size()) + " fibres";
    if (!failures.empty()) {
      detail += "; failing:";
      for (const auto& t : failures) detail += " " + t;
    }
    checks.push_back({"multiple_fibre_claim_check", failures.empty() && !table.empty(), detail});
  } catch (const FixtureError& e) {
    checks.push_back({"kodaira_fixture", false, e.what()});
  }

  const auto mismatches = hirzebruch_grid_mismatches(5, 10, policy);
  std::string grid_detail = std::to_string(mismatches.size()) + " mismatches on n <= 5, |a|, |b| <= 10";
  if (!mismatches.empty()) {
    const auto& m = mismatches.front();
    grid_detail += "; first: n=" + std::to_string(m.divisor.n) + " a=" + std::to_string(m.divisor.a) +
                   " b=" + std::to_string(m.divisor.b);
  }
  checks.push_back({"hirzebruch_oracle_agreement", mismatches.empty(), grid_detail});
  checks.push_back(check_vanishing_chain());

  checks.push_back(from_property("tensor_round_trips", tensor_round_trip_property(100, 1001, policy)));
  checks.push_back(from_property("nilpotent_synthesis_round_trip", nilpotent_synthesis_property(100, 2002, policy)));
  checks.push_back(from_property("blowup_equivalence", blowup_equivalence_property(200, 3003, policy)));

  checks.push_back(check_classifier_table());
  const ClassifyFuzzStats fuzz = classify_fuzz(policy);
  checks.push_back({"classifier_fuzz",
                    fuzz.bidisk_violations + fuzz.ball_violations + fuzz.refinement_violations + fuzz.exceptions == 0,
                    std::to_string(fuzz.inputs) + " inputs, " +
                        std::to_string(fuzz.bidisk_violations + fuzz.ball_violations + fuzz.refinement_violations) +
                        " violations, " + std::to_string(fuzz.exceptions) + " exceptions"});
  checks.push_back(check_elliptic_arithmetic());
  checks.push_back(check_product_identities());
  return checks;
}

}  // namespace bidisk
