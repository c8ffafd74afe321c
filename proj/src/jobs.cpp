#include "bidisk/jobs.hpp"
#include "bidisk/blowup.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bidisk {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const char* kind_name(const JobSpec& spec) {
  static constexpr const char* names[] = {"classify", "tensor", "blowup", "h0", "elliptic", "product", "weierstrass"};
  return names[spec.index()];
}

// Reads typed fields from one JSON object, reporting errors by JSON path and
// rejecting fields that were never read.
class Fields {
 public:
  Fields(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& what) const { throw JobParseError(path_ + ": " + what); }
  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw JobParseError(path_ + "." + key + ": " + what);
  }

  bool has(const std::string& key) {
    seen_.insert(key);
    return obj_.contains(key) && !obj_.at(key).is_null();
  }

  const json& raw(const std::string& key) {
    if (!has(key)) fail(key, "missing required field");
    return obj_.at(key);
  }

  long integer(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<long>();
  }

  std::optional<long> optional_integer(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return integer(key);
  }

  std::string string(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

  std::string path(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (const auto& [key, value] : obj_.items())
      if (!seen_.count(key)) throw JobParseError(path_ + ": unknown field '" + key + "'");
  }

 private:
  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

SymTensor parse_tensor_field(Fields& f, const std::string& key) {
  const std::string literal = f.string(key);
  try {
    return SymTensor::parse(literal);
  } catch (const std::exception& e) {
    f.fail(key, e.what());
  }
}

TensorStatus parse_tensor_status(Fields& f) {
  const json& v = f.raw("tensor");
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "none") return TensorStatus::none();
    if (s == "semi-special-exists") return TensorStatus::semi_special_exists();
    if (s == "semi-special-unique") return TensorStatus::semi_special_unique();
    f.fail("tensor", "unknown tensor status '" + s + "'");
  }
  Fields inner(v, f.path("tensor"));
  const long d = inner.integer("special_dim");
  inner.finish();
  if (d < 0) f.fail("tensor", "special_dim must be nonnegative");
  return TensorStatus::special_dim(d);
}

JobSpec parse_spec(const std::string& kind, Fields& f) {
  if (kind == "classify") {
    SurfaceInvariants inv;
    inv.K2 = f.integer("K2");
    inv.chi = f.optional_integer("chi");
    inv.P2 = f.optional_integer("P2");
    inv.q = f.optional_integer("q");
    inv.tensor = parse_tensor_status(f);
    return ClassifyJob{inv};
  }
  if (kind == "tensor") {
    TensorJob job{parse_tensor_field(f, "tensor"), std::nullopt};
    if (f.has("chern")) {
      Fields c(f.raw("chern"), f.path("chern"));
      job.chern = ChernData{c.integer("c2"), c.integer("L_self"), c.integer("L_dot_Delta")};
      c.finish();
    }
    return job;
  }
  if (kind == "blowup") return BlowupJob{parse_tensor_field(f, "tensor")};
  if (kind == "h0") {
    Fields d(f.raw("divisor"), f.path("divisor"));
    const long n = d.integer("n");
    if (n < 0 || n > 1000) d.fail("n", "Hirzebruch index must lie in [0, 1000]");
    H0Job job{{static_cast<int>(n), d.integer("a"), d.integer("b")}};
    d.finish();
    return job;
  }
  if (kind == "elliptic") {
    EllipticDescriptor e;
    e.b = f.integer("b");
    e.pg = f.integer("pg");
    e.q = f.optional_integer("q").value_or(e.b);
    e.chi = f.optional_integer("chi").value_or(1 + e.pg - e.q);
    if (f.has("multiple_fibres")) {
      const json& arr = f.raw("multiple_fibres");
      if (!arr.is_array()) f.fail("multiple_fibres", "expected an array of integers");
      for (const auto& n : arr) {
        if (!n.is_number_integer()) f.fail("multiple_fibres", "expected an array of integers");
        e.multiple_fibre_orders.push_back(n.get<long>());
      }
    }
    if (f.has("singular_fibres")) {
      const json& arr = f.raw("singular_fibres");
      if (!arr.is_array()) f.fail("singular_fibres", "expected an array of fibre type tags");
      for (const auto& t : arr) {
        if (!t.is_string()) f.fail("singular_fibres", "expected an array of fibre type tags");
        try {
          e.singular_fibres.push_back(standard_fibre(t.get<std::string>()));
        } catch (const std::invalid_argument& err) {
          f.fail("singular_fibres", err.what());
        }
      }
    }
    return EllipticJob{e};
  }
  if (kind == "product") {
    const long g1 = f.integer("g1");
    const long g2 = f.integer("g2");
    if (g1 < 0 || g2 < 0 || g1 > 100000 || g2 > 100000) f.fail("genera must lie in [0, 100000]");
    return ProductJob{{static_cast<int>(g1), static_cast<int>(g2)}};
  }
  if (kind == "weierstrass") return WeierstrassJob{f.integer("h")};
  f.fail("kind", "unknown job kind '" + kind + "'");
}

ordered_json divisor_json(const DivisorFn& d) { return ordered_json{{"n", d.n}, {"a", d.a}, {"b", d.b}}; }

ordered_json colength_json(const Colength& c) {
  if (std::holds_alternative<NotFinite>(c)) return "NotFinite";
  return std::get<std::uint64_t>(c);
}

ordered_json vector_json(const PolyVector& v) { return ordered_json::array({v[0].to_string(), v[1].to_string()}); }
ordered_json vector_json(const ExtVector& v) { return ordered_json::array({v[0].to_string(), v[1].to_string()}); }

// --- per-kind execution ----------------------------------------------------

void execute(const ClassifyJob& job, JobReport& r) {
  const Classification c = classify(job.invariants);
  r.result["verdict"] = to_string(c.verdict);
  if (c.verdict == Verdict::Contradiction) r.result["contradiction"] = c.contradiction_reason;
  r.result["polydisk_necessary_profile"] = polydisk_necessary_profile(2)(job.invariants);
  r.evidence = c.evidence;
  r.warnings = c.warnings;
}

void execute(const TensorJob& job, JobReport& r) {
  const SymTensor& w = job.tensor;
  const TraceZeroEndo endo = tensor_to_endo(w);
  const Matrix2& m = endo.matrix();
  r.result["tensor"] = w.to_string();
  r.result["endomorphism"] = ordered_json::array({ordered_json::array({m.m11.to_string(), m.m12.to_string()}),
                                                  ordered_json::array({m.m21.to_string(), m.m22.to_string()})});
  const TensorDet det = tensor_det(w);
  r.result["det"] = det.value.to_string();
  r.result["det_constant"] = det.is_constant;

  if (w.is_zero()) {
    r.result["branch"] = "zero";
    r.warnings.push_back("the zero tensor is not a special tensor");
  } else if (!det.is_constant) {
    r.result["branch"] = "nonconstant-det";
    r.warnings.push_back("determinant is not constant: these local coefficients do not come from a global special "
                         "tensor");
  } else if (!det.value.is_zero()) {
    const EigenSplit s = eigen_split(w);
    r.result["branch"] = "eigen";
    r.result["eigenvalue"] = s.eigenvalue.to_string();
    r.result["eigenvector_plus"] = vector_json(s.eigenvector_plus);
    r.result["eigenvector_minus"] = vector_json(s.eigenvector_minus);
    r.evidence.push_back("eigen-split: constant det " + det.value.to_string() + ", eigenvalues +-c with c = " +
                         s.eigenvalue.to_string());
  } else {
    r.result["branch"] = "nilpotent";
    const NilpotentResult n = nilpotent_decompose(w);
    if (const auto* bad = std::get_if<NotASquare>(&n)) {
      r.result["decomposition"] = nullptr;
      r.warnings.push_back("NotASquare: " + bad->which + " = " + bad->value.to_string() +
                           " is not a square over Q; the kernel factorization needs a field extension");
    } else {
      const auto& d = std::get<NilpotentDecomposition>(n);
      r.result["decomposition"] = ordered_json{{"delta", d.delta.to_string()},
                                               {"beta", d.beta.to_string()},
                                               {"gamma", d.gamma.to_string()},
                                               {"kernel_generator", vector_json(d.kernel_generator)},
                                               {"z_colength", colength_json(d.z_colength)}};
      r.evidence.push_back("nilpotent-decomposition: eps = delta*[[beta*gamma, -beta^2], [gamma^2, -beta*gamma]]");
      if (job.chern) {
        if (const auto* len = std::get_if<std::uint64_t>(&d.z_colength)) {
          const bool ok = chern_consistency(job.chern->c2, static_cast<long>(*len), job.chern->L_self,
                                            job.chern->L_dot_Delta);
          r.result["chern_consistent"] = ok;
          r.evidence.push_back(std::string("chern: c2 = length(Z) + L^2 - L.Delta ") + (ok ? "holds" : "fails"));
        } else {
          r.result["chern_consistent"] = nullptr;
          r.warnings.push_back("chern check skipped: Z is not zero-dimensional");
        }
      }
    }
  }
  if (job.chern && !r.result.contains("chern_consistent")) {
    r.warnings.push_back("chern data ignored: only used with a nilpotent decomposition");
  }
}

void execute(const BlowupJob& job, JobReport& r) {
  const SymTensor& w = job.tensor;
  const bool criterion = regularity_criterion(w);
  const PullbackResult p = pullback(w);
  r.result["tensor"] = w.to_string();
  r.result["vanishes_at_center"] = criterion;
  if (const auto* chart = std::get_if<BlowupChartTensor>(&p)) {
    r.result["regular"] = true;
    r.result["chart_tensor"] = chart->tensor.to_string();
    const bool det_ok = tensor_det(chart->tensor).value == blowup_substitute(tensor_det(w).value);
    r.result["det_pulls_back"] = det_ok;
    const auto down = pushdown(*chart);
    r.result["pushdown_recovers_tensor"] = down.has_value() && *down == w;
    r.evidence.push_back("blowup: coefficients vanish at the center, pullback is regular");
  } else {
    r.result["regular"] = false;
    r.result["pole_numerator"] = std::get<NonRegular>(p).numerator.to_string();
    r.evidence.push_back("blowup: a + b u^2 + c u is not divisible by x, pullback has a pole");
  }
  if (criterion != std::holds_alternative<BlowupChartTensor>(p))
    throw std::logic_error("blowup: pullback disagrees with the regularity criterion");
}

void execute(const H0Job& job, JobReport& r) {
  const H0Reduction red = h0_fn_recursive(job.divisor);
  const long lattice = h0_fn_lattice(job.divisor);
  r.result["divisor"] = divisor_json(job.divisor);
  r.result["h0"] = red.value;
  r.result["h0_lattice"] = lattice;
  ordered_json chain = ordered_json::array();
  for (const auto& d : red.chain) chain.push_back(divisor_json(d));
  r.result["chain"] = chain;
  r.evidence.push_back("h0-reduction: " + std::to_string(red.chain.size() - 1) + " section peel(s) while D.S < 0");
  if (red.value != lattice) throw std::logic_error("h0: recursive reduction disagrees with the lattice count");
}

void execute(const EllipticJob& job, JobReport& r) {
  const EllipticDescriptor& e = job.descriptor;
  e.validate();
  r.result["b"] = e.b;
  r.result["chi"] = e.chi;
  r.result["pg"] = e.pg;
  r.result["q"] = e.q;
  r.result["delta_degree"] = delta_degree(e.chi, e.b);
  r.result["special_tensor_degree"] = special_tensor_degree(e.b, e.pg);
  const NilpotentVerdict v = exists_nilpotent_special_tensor(e.b, e.pg);
  r.result["nilpotent_special_tensor"] = v.exists() ? "guaranteed" : "not-guaranteed";
  r.result["reason"] = v.reason;
  const Rat k = canonical_bundle_degree(e);
  r.result["canonical_degree"] = k.to_string();
  r.result["properly_elliptic"] = k.sign() > 0;
  if (k.sign() <= 0) r.warnings.push_back("canonical degree " + k.to_string() + " <= 0: not properly elliptic");
  ordered_json fibres = ordered_json::array();
  for (const auto& f : e.singular_fibres) {
    const bool ok = multiple_fibre_claim_check(f);
    fibres.push_back(ordered_json{{"type", f.tag()}, {"claim", ok}});
    if (!ok) r.warnings.push_back("fibre " + f.tag() + " fails the pushforward claim check");
  }
  r.result["fibres"] = fibres;
  r.evidence.push_back("canonical-bundle-formula: deg delta = chi - 2 + 2b");
  r.evidence.push_back("effectiveness: degree >= b on B is effective; window b <= pg <= 2b-3, b >= 3");
  if (!v.exists()) r.warnings.push_back("not-guaranteed is not a proof of non-existence");
}

void execute(const ProductJob& job, JobReport& r) {
  const ProductSurface& p = job.surface;
  const NumericalProfile prof = product_invariants(p);
  const long dim = product_special_tensor_dim(p);
  const long p2 = product_bigenus(p);
  r.result["g1"] = p.g1;
  r.result["g2"] = p.g2;
  r.result["profile"] =
      ordered_json{{"K2", prof.K2}, {"chi", prof.chi}, {"c2", prof.c2}, {"q", prof.q}, {"pg", prof.pg}};
  r.result["special_tensor_dim"] = dim;
  r.result["P2"] = p2;
  r.result["split_tangent_identities"] = split_tangent_identities(prof);
  const Classification c = classify({prof.K2, prof.chi, p2, prof.q, TensorStatus::special_dim(dim)});
  r.result["verdict"] = to_string(c.verdict);
  if (c.verdict == Verdict::Contradiction) r.result["contradiction"] = c.contradiction_reason;
  r.evidence.push_back("kuenneth: 1 + h0(K1) h0(-K2) + h0(-K1) h0(K2) = " + std::to_string(dim));
  r.evidence.insert(r.evidence.end(), c.evidence.begin(), c.evidence.end());
  r.warnings = c.warnings;
  if ((p.g1 == 1 && p.g2 == 2) || (p.g1 == 2 && p.g2 == 1)) r.warnings.push_back(kProductUniquenessDiscrepancy);
}

void execute(const WeierstrassJob& job, JobReport& r) {
  const WeierstrassFamily w = weierstrass_example(job.h);
  r.result["h"] = w.h;
  r.result["b"] = w.b;
  r.result["M_degree"] = w.M_degree;
  r.result["KB_degree"] = w.KB_degree;
  r.result["six_M_degree"] = w.six_M_degree;
  r.result["residual_degree"] = w.residual_degree;
  r.result["h0"] = w.h0;
  r.evidence.push_back("weierstrass: deg(K_B - 6M) = (2b - 2) - 12h = 0");
  r.warnings.push_back("assumes K_B is linearly equivalent to 6M (M = hH), so the degree-0 class is trivial");
  r.warnings.push_back("global uniqueness of the special tensor is not decided");
}

}  // namespace

std::string Job::kind() const { return kind_name(spec); }

std::vector<Job> parse_job_file(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw JobParseError(source + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
  Fields top(doc, source);
  const json& arr = top.raw("jobs");
  if (!arr.is_array()) top.fail("jobs", "expected an array");
  top.finish();

  std::vector<Job> jobs;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Fields f(arr[i], source + ": jobs[" + std::to_string(i) + "]");
    Job job;
    job.id = f.string("id");
    if (!ids.insert(job.id).second) f.fail("id", "duplicate job id '" + job.id + "'");
    const std::string kind = f.string("kind");
    job.spec = parse_spec(kind, f);
    f.finish();
    jobs.push_back(std::move(job));
  }
  return jobs;
}

std::vector<Job> load_job_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JobParseError(path.string() + ": cannot open job file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job_file(buf.str(), path.string());
}

JobReport run_job(const Job& job) {
  JobReport r;
  r.id = job.id;
  r.kind = job.kind();
  try {
    std::visit([&](const auto& spec) { execute(spec, r); }, job.spec);
  } catch (const std::exception& e) {
    r.ok = false;
    r.error = e.what();
    r.result = ordered_json::object();
  }
  return r;
}

std::vector<JobReport> run_jobs(const std::vector<Job>& jobs, ExecutionPolicy policy) {
  std::vector<JobReport> reports(jobs.size());
  for_each_index(jobs.size(), [&](std::size_t i) { reports[i] = run_job(jobs[i]); }, policy);
  return reports;
}

std::size_t error_count(const std::vector<JobReport>& reports) {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.ok ? 0 : 1;
  return n;
}

std::string render_report(const std::vector<JobReport>& reports) {
  ordered_json doc;
  doc["format"] = "bidisk-report/1";
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json j;
    j["id"] = r.id;
    j["kind"] = r.kind;
    j["status"] = r.ok ? "ok" : "error";
    if (!r.ok) j["error"] = r.error;
    j["result"] = r.result;
    j["evidence"] = r.evidence;
    j["warnings"] = r.warnings;
    arr.push_back(std::move(j));
  }
  doc["jobs"] = std::move(arr);
  doc["summary"] = ordered_json{{"jobs", reports.size()}, {"errors", error_count(reports)}};
  return doc.dump(2) + "\n";
}

}  // namespace bidisk
