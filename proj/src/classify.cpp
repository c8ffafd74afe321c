#include "bidisk/classify.hpp"

#include <stdexcept>

namespace bidisk {

bool TensorStatus::present() const {
  switch (kind) {
    case Kind::NoTensor: return false;
    case Kind::SemiSpecialExists:
    case Kind::SemiSpecialUnique: return true;
    case Kind::SpecialDim: return dim >= 1;
  }
  return false;
}

std::string TensorStatus::to_string() const {
  switch (kind) {
    case Kind::NoTensor: return "none";
    case Kind::SemiSpecialExists: return "semi-special-exists";
    case Kind::SemiSpecialUnique: return "semi-special-unique";
    case Kind::SpecialDim: return "special-dim(" + std::to_string(dim) + ")";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bidisk: return "Bidisk";
    case Verdict::Quadric: return "Quadric";
    case Verdict::Ball: return "Ball";
    case Verdict::Dichotomy: return "Dichotomy";
    case Verdict::NotCovered: return "NotCovered";
    case Verdict::Contradiction: return "Contradiction";
  }
  return "?";
}

namespace {

std::string show(const std::optional<long>& v) { return v ? std::to_string(*v) : "unknown"; }

std::string entry(const char* label, const std::string& detail) { return std::string(label) + ": " + detail; }

class Trail {
 public:
  void note(const char* label, const std::string& detail) { out_.evidence.push_back(entry(label, detail)); }
  void warn(std::string w) { out_.warnings.push_back(std::move(w)); }

  Classification verdict(Verdict v) {
    if (!contradiction_.empty()) {
      out_.verdict = Verdict::Contradiction;
      out_.contradiction_reason = contradiction_;
    } else {
      out_.verdict = v;
    }
    return out_;
  }

  // Records a check; the first failed one turns the final verdict into
  // Contradiction.
  void check(const char* label, bool ok, const std::string& detail) {
    note(label, (ok ? "pass, " : "FAIL, ") + detail);
    if (!ok && contradiction_.empty()) contradiction_ = entry(label, detail);
  }

  void contradict(const char* label, const std::string& detail) {
    note(label, detail);
    if (contradiction_.empty()) contradiction_ = entry(label, detail);
  }

 private:
  Classification out_;
  std::string contradiction_;
};

}  // namespace

Classification classify(const SurfaceInvariants& inv) {
  if (inv.P2 && *inv.P2 < 0) throw std::invalid_argument("classify: negative P2");
  if (inv.q && *inv.q < 0) throw std::invalid_argument("classify: negative q");
  if (inv.tensor.kind == TensorStatus::Kind::SpecialDim && inv.tensor.dim < 0)
    throw std::invalid_argument("classify: negative special tensor dimension");

  Trail trail;
  const bool tensor = inv.tensor.present();

  if (tensor && inv.K2 > 0) {
    trail.note(rule::kTensorDichotomy, "tensor " + inv.tensor.to_string() + " and K2 = " + std::to_string(inv.K2) +
                                           " > 0: bidisk quotient or quadric");
    if (!inv.P2) {
      trail.note(rule::kDichotomyOpen, "P2 unknown, cannot separate bidisk from quadric");
      return trail.verdict(Verdict::Dichotomy);
    }
    const long p2 = *inv.P2;
    if (p2 == 0) {
      trail.note(rule::kQuadric, "P2 = 0");
      trail.check(rule::kQuadricProfile, inv.K2 == 8, "K2 = " + std::to_string(inv.K2) + " (expect 8)");
      if (inv.chi) trail.check(rule::kQuadricProfile, *inv.chi == 1, "chi = " + std::to_string(*inv.chi) + " (expect 1)");
      if (inv.q) trail.check(rule::kQuadricProfile, *inv.q == 0, "q = " + std::to_string(*inv.q) + " (expect 0)");
      return trail.verdict(Verdict::Quadric);
    }
    if (p2 == 1) {
      trail.contradict(rule::kBigenusGap,
                       "P2 = 1: the quadric has P2 = 0 and bidisk quotients have P2 = chi + K2 >= 2");
      return trail.verdict(Verdict::Contradiction);
    }
    trail.note(rule::kBidisk, "P2 = " + std::to_string(p2) + " >= 2");
    if (inv.chi) {
      trail.check(rule::kSplitProfile, inv.K2 == 8 * *inv.chi,
                  "K2 = " + std::to_string(inv.K2) + ", 8*chi = " + std::to_string(8 * *inv.chi));
    }
    if (inv.tensor.kind == TensorStatus::Kind::SpecialDim) {
      trail.check(rule::kUniqueness, inv.tensor.dim <= 1,
                  "special tensor space has dimension " + std::to_string(inv.tensor.dim) +
                      "; a bidisk quotient carries at most one up to scale");
    }
    return trail.verdict(Verdict::Bidisk);
  }

  if (inv.chi && inv.K2 > 0 && inv.K2 == 9 * *inv.chi && inv.P2 && *inv.P2 >= 1) {
    trail.note(rule::kMiyaokaYau, "K2 = " + std::to_string(inv.K2) + " = 9*chi and P2 = " + std::to_string(*inv.P2) +
                                      " > 0");
    return trail.verdict(Verdict::Ball);
  }

  std::string why = tensor ? "tensor present but K2 = " + std::to_string(inv.K2) + " <= 0"
                           : "no semi special tensor";
  why += "; chi = " + show(inv.chi) + ", P2 = " + show(inv.P2) + ", K2 = " + std::to_string(inv.K2) +
         " does not meet the ball criterion";
  trail.note(rule::kNotCovered, why);
  if (tensor && inv.K2 == 0 && inv.P2 && *inv.P2 >= 2) {
    trail.warn(
        "open question: K2 = 0 with a semi special tensor and P2 >= 2 is not decided here; properly elliptic "
        "surfaces with q > 0 show such surfaces need not be bidisk quotients, and the case q = 0 is unresolved");
  }
  return trail.verdict(Verdict::NotCovered);
}

long min_bigenus(long chi, long K2) {
  if (chi < 1 || K2 < 1) throw std::invalid_argument("min_bigenus: requires chi >= 1 and K2 >= 1");
  return chi + K2;
}

long double_cover_dims(long dim_special, long dim_twisted) {
  if (dim_special < 0 || dim_twisted < 0) throw std::invalid_argument("double_cover_dims: negative dimension");
  return dim_special + dim_twisted;
}

InvariantPredicate polydisk_necessary_profile(int n) {
  if (n != 2) throw std::invalid_argument("polydisk_necessary_profile: only n = 2 is supported");
  return [](const SurfaceInvariants& inv) { return inv.tensor.present() && inv.K2 > 0; };
}

}  // namespace bidisk
