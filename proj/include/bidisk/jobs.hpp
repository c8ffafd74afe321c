// Batch jobs: JSON job files in, JSON reports out.
//
// A job file is {"jobs": [ {"id": ..., "kind": ..., <fields>}, ... ]}; see
// README.md for the fields of each kind. Reports keep input order and a fixed
// field order, so identical input gives byte-identical output.
#pragma once

#include "bidisk/classify.hpp"
#include "bidisk/elliptic.hpp"
#include "bidisk/kernels.hpp"
#include "bidisk/surfaces.hpp"
#include "bidisk/tensor.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bidisk {

class JobParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChernData {
  long c2 = 0;
  long L_self = 0;
  long L_dot_Delta = 0;
};

struct ClassifyJob { SurfaceInvariants invariants; };
struct TensorJob { SymTensor tensor; std::optional<ChernData> chern; };
struct BlowupJob { SymTensor tensor; };
struct H0Job { DivisorFn divisor; };
struct EllipticJob { EllipticDescriptor descriptor; };
struct ProductJob { ProductSurface surface; };
struct WeierstrassJob { long h = 0; };

using JobSpec = std::variant<ClassifyJob, TensorJob, BlowupJob, H0Job, EllipticJob, ProductJob, WeierstrassJob>;

struct Job {
  std::string id;
  JobSpec spec;
  std::string kind() const;
};

/// Parses a job file. `source` names the input in error messages. Throws
/// JobParseError with the byte offset (syntax) or the JSON path (schema).
std::vector<Job> parse_job_file(std::string_view text, const std::string& source = "<input>");
std::vector<Job> load_job_file(const std::filesystem::path& path);

struct JobReport {
  std::string id;
  std::string kind;
  bool ok = true;
  std::string error;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  std::vector<std::string> evidence;
  std::vector<std::string> warnings;
};

/// Runs one job. Computational errors are captured in the report.
JobReport run_job(const Job& job);

/// Runs all jobs; the report vector is in input order under either policy.
std::vector<JobReport> run_jobs(const std::vector<Job>& jobs, ExecutionPolicy policy);

/// The full report document, pretty-printed with a trailing newline.
std::string render_report(const std::vector<JobReport>& reports);

std::size_t error_count(const std::vector<JobReport>& reports);

/// Warning attached to the genus (1, 2) product.
inline constexpr const char* kProductUniquenessDiscrepancy =
    "uniqueness discrepancy: the product of an elliptic curve and a genus-2 curve is commonly listed as having a "
    "unique semi special tensor, but the Kuenneth count gives a 3-dimensional space of special tensors";

}  // namespace bidisk
