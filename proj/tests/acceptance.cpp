// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failures (capped).

#include "bidisk/blowup.hpp"
#include "bidisk/classify.hpp"
#include "bidisk/elliptic.hpp"
#include "bidisk/jobs.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/selftest.hpp"
#include "bidisk/surfaces.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace bidisk;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && limit_seconds > 0 && secs >= limit_seconds) {
    o.ok = false;
    o.note = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s";
  }
  if (!o.ok) ++failures;
  std::printf("%s [%2d] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", number, title.c_str(), secs,
              o.note.empty() ? "" : ": ", o.note.c_str());
  std::fflush(stdout);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + BIDISK_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_label(const Classification& c, const char* label) {
  return std::any_of(c.evidence.begin(), c.evidence.end(),
                     [&](const std::string& e) { return e.rfind(std::string(label) + ":", 0) == 0; });
}

}  // namespace

int main() {
  criterion(1, "h0(2S - (n+2)F) = 0 on F_n, 0 <= n <= 20, with the three-step chain", 1.0, [] {
    Outcome o;
    for (int n = 0; n <= 20; ++n) {
      const DivisorFn d{n, 2, -(n + 2)};
      const H0Reduction r = h0_fn_recursive(d);
      const std::string at = "n = " + std::to_string(n);
      o.require(r.value == 0 && h0_fn_lattice(d) == 0, at + ": nonzero h0");
      o.require(r.chain.size() == 3, at + ": chain length " + std::to_string(r.chain.size()));
      if (r.chain.size() == 3) {
        o.require(r.chain[1] == DivisorFn{n, 1, -(n + 2)} && r.chain[2] == DivisorFn{n, 0, -(n + 2)},
                  at + ": wrong chain");
        for (const auto& step : r.chain) o.require(h0_fn_lattice(step) == 0, at + ": chain step has sections");
      }
    }
    return o;
  });

  criterion(2, "recursive vs lattice h0 on n <= 5, |a|, |b| <= 10", 1.0, [] {
    Outcome o;
    std::size_t cases = 0;
    for (int n = 0; n <= 5; ++n)
      for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
          ++cases;
          o.require(h0_fn_recursive({n, a, b}).value == h0_fn_lattice({n, a, b}),
                    "mismatch at " + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b));
        }
    o.require(cases == 2646, "grid size " + std::to_string(cases));
    o.require(hirzebruch_grid_mismatches(5, 10, ExecutionPolicy::Parallel).empty(), "parallel sweep mismatch");
    return o;
  });

  criterion(3, "tensor/endomorphism and (delta, beta, gamma) round trips", 5.0, [] {
    Outcome o;
    const auto rt = tensor_round_trip_property(200, 101, ExecutionPolicy::Parallel);
    o.require(rt.passed(), "tensor round trip: " + rt.first_failure);
    const auto ns = nilpotent_synthesis_property(150, 103, ExecutionPolicy::Parallel);
    o.require(ns.passed() && ns.cases >= 100, "nilpotent synthesis: " + ns.first_failure);
    return o;
  });

  criterion(4, "pullback succeeds iff coefficients vanish at the centre", 2.0, [] {
    Outcome o;
    const auto r = pullback(BlowupCoefficients{Poly2(1), Poly2(), Poly2()}.to_tensor());
    o.require(std::holds_alternative<NonRegular>(r), "constant (1, 0, 0) lifted");
    o.require(!regularity_criterion(BlowupCoefficients{Poly2(1), Poly2(), Poly2()}.to_tensor()),
              "criterion accepts (1, 0, 0)");
    const auto p = blowup_equivalence_property(250, 107, ExecutionPolicy::Parallel);
    o.require(p.passed() && p.cases >= 200, p.first_failure);
    return o;
  });

  criterion(5, "classifier truth table and evidence labels", 1.0, [] {
    Outcome o;
    auto check = [&](const SurfaceInvariants& in, Verdict v, std::initializer_list<const char*> labels,
                     const std::string& name) {
      const Classification c = classify(in);
      o.require(c.verdict == v, name + ": got " + to_string(c.verdict));
      for (const char* l : labels) o.require(has_label(c, l), name + ": missing evidence " + l);
      if (v == Verdict::Contradiction)
        o.require(c.contradiction_reason.rfind(*labels.begin(), 0) == 0, name + ": reason " + c.contradiction_reason);
    };
    check({8, 1, 9, 0, TensorStatus::semi_special_unique()}, Verdict::Bidisk,
          {rule::kTensorDichotomy, rule::kBidisk, rule::kSplitProfile}, "bidisk");
    check({8, 1, 0, 0, TensorStatus::semi_special_unique()}, Verdict::Quadric,
          {rule::kTensorDichotomy, rule::kQuadric, rule::kQuadricProfile}, "quadric");
    check({9, 1, 3, 0, TensorStatus::none()}, Verdict::Ball, {rule::kMiyaokaYau}, "ball");
    check({18, 2, 1, std::nullopt, TensorStatus::none()}, Verdict::Ball, {rule::kMiyaokaYau}, "ball chi=2");
    check({0, 0, 3, 2, TensorStatus::special_dim(3)}, Verdict::NotCovered, {rule::kNotCovered}, "torus");
    check({8, 1, 1, 0, TensorStatus::semi_special_unique()}, Verdict::Contradiction, {rule::kBigenusGap}, "P2 = 1");
    check({8, 1, 9, 0, TensorStatus::special_dim(2)}, Verdict::Contradiction, {rule::kUniqueness}, "dim 2");
    return o;
  });

  criterion(6, "elliptic degree identity, effectiveness window, Weierstrass family", 1.0, [] {
    Outcome o;
    for (long b = 0; b <= 20; ++b)
      for (long pg = b; pg <= b + 20; ++pg)
        o.require(special_tensor_degree(b, pg) + delta_degree(1 + pg - b, b) == 4 * b - 4,
                  "degree identity at b = " + std::to_string(b));
    for (long b = 0; b <= 30; ++b)
      for (long pg = b; pg <= 30; ++pg)
        o.require(exists_nilpotent_special_tensor(b, pg).exists() == (b >= 3 && pg <= 2 * b - 3),
                  "window at (" + std::to_string(b) + ", " + std::to_string(pg) + ")");
    for (long h = 1; h <= 10; ++h) {
      const auto w = weierstrass_example(h);
      o.require(w.b == 6 * h + 1 && w.residual_degree == 0 && w.h0 == 1, "weierstrass h = " + std::to_string(h));
    }
    return o;
  });

  criterion(7, "fibrewise claim on every fibre of the shipped Kodaira table", 1.0, [] {
    Outcome o;
    const auto table = load_kodaira_table(default_kodaira_fixture());
    o.require(table == standard_kodaira_table(), "shipped table differs from the standard list");
    o.require(table.size() == 42, "table has " + std::to_string(table.size()) + " fibres");
    const auto failed = kodaira_claim_failures(table, ExecutionPolicy::Parallel);
    o.require(failed.empty(), failed.empty() ? "" : "claim fails for " + failed.front());
    return o;
  });

  criterion(8, "Kuenneth special tensor dimensions and the (1, 2) discrepancy warning", 1.0, [] {
    Outcome o;
    o.require(product_special_tensor_dim({0, 0}) == 1, "(0, 0)");
    o.require(product_special_tensor_dim({1, 1}) == 3, "(1, 1)");
    for (int g1 = 2; g1 <= 10; ++g1)
      for (int g2 = 2; g2 <= 10; ++g2)
        o.require(product_special_tensor_dim({g1, g2}) == 1, "(" + std::to_string(g1) + ", " + std::to_string(g2) + ")");
    Job job{"p12", ProductJob{{1, 2}}};
    const JobReport r = run_job(job);
    o.require(r.ok && r.result["special_tensor_dim"] == 3, "(1, 2) dimension");
    o.require(std::find(r.warnings.begin(), r.warnings.end(), kProductUniquenessDiscrepancy) != r.warnings.end(),
              "(1, 2) report lacks the discrepancy warning");
    return o;
  });

  criterion(9, "product Noether identities and bigenus lower bound", 1.0, [] {
    Outcome o;
    for (int g1 = 0; g1 <= 6; ++g1)
      for (int g2 = 0; g2 <= 6; ++g2) {
        const auto p = product_invariants({g1, g2});
        o.require(p.K2 == 8 * p.chi && p.c2 == 12 * p.chi - p.K2 && p.chi == 1 + p.pg - p.q,
                  "(" + std::to_string(g1) + ", " + std::to_string(g2) + ")");
      }
    for (long chi = 1; chi <= 20; ++chi)
      for (long K2 = 1; K2 <= 20; ++K2) o.require(min_bigenus(chi, K2) >= 2, "min_bigenus");
    return o;
  });

  criterion(10, "CLI report determinism and selftest exit codes", 0, [] {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path();
    const auto first = dir / "bidisk_acceptance_run1.json";
    const auto second = dir / "bidisk_acceptance_run2.json";
    const std::string jobs = (std::filesystem::path(BIDISK_DATA_DIR) / "example_jobs.json").string();
    o.require(run_cli("run \"" + jobs + "\" -o \"" + first.string() + "\"") == 0, "first run failed");
    o.require(run_cli("run \"" + jobs + "\" -o \"" + second.string() + "\"") == 0, "second run failed");
    const std::string a = slurp(first);
    o.require(!a.empty() && a == slurp(second), "reports differ");
    std::filesystem::remove(first);
    std::filesystem::remove(second);
    o.require(run_cli("selftest") == 0, "clean selftest failed");
    const std::string corrupt = (std::filesystem::path(BIDISK_TEST_FIXTURES) / "kodaira_table_corrupt.txt").string();
    const int faulted = run_cli("selftest --kodaira-table \"" + corrupt + "\"");
    o.require(faulted != 0 && faulted != -1, "injected fault not detected");
    return o;
  });

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return std::min(failures, 125);
}
