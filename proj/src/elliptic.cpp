#include "bidisk/elliptic.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace bidisk {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty() || s.size() > 6) return false;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

std::vector<int> standard_multiplicities(FibreFamily family, int k, int multiplicity) {
  switch (family) {
    case FibreFamily::I:
      return std::vector<int>(static_cast<std::size_t>(std::max(k, 1)), multiplicity);
    case FibreFamily::IStar: {
      std::vector<int> m{1, 1, 1, 1};
      m.insert(m.end(), static_cast<std::size_t>(k + 1), 2);
      return m;
    }
    case FibreFamily::II: return {1};
    case FibreFamily::III: return {1, 1};
    case FibreFamily::IV: return {1, 1, 1};
    case FibreFamily::IVStar: return {1, 1, 1, 2, 2, 2, 3};
    case FibreFamily::IIIStar: return {1, 1, 2, 2, 2, 3, 3, 4};
    case FibreFamily::IIStar: return {1, 2, 2, 3, 3, 4, 4, 5, 6};
  }
  return {};
}

// Tag without multiplicities filled in.
KodairaFibre parse_tag(std::string_view tag) {
  auto fail = [&]() { return std::invalid_argument("unknown Kodaira fibre type '" + std::string(tag) + "'"); };
  KodairaFibre f;
  std::size_t digits = 0;
  while (digits < tag.size() && std::isdigit(static_cast<unsigned char>(tag[digits]))) ++digits;
  if (digits > 0) {
    int m = 0;
    int k = 0;
    if (!parse_int(tag.substr(0, digits), m) || m < 2) throw fail();
    std::string_view rest = tag.substr(digits);
    if (rest.size() < 2 || rest[0] != 'I' || !parse_int(rest.substr(1), k)) throw fail();
    f.family = FibreFamily::I;
    f.k = k;
    f.multiplicity = m;
    return f;
  }
  static const std::pair<std::string_view, FibreFamily> named[] = {
      {"II", FibreFamily::II},         {"III", FibreFamily::III},         {"IV", FibreFamily::IV},
      {"II*", FibreFamily::IIStar},    {"III*", FibreFamily::IIIStar},    {"IV*", FibreFamily::IVStar}};
  for (const auto& [name, family] : named) {
    if (tag == name) {
      f.family = family;
      return f;
    }
  }
  if (tag.size() >= 2 && tag[0] == 'I') {
    std::string_view rest = tag.substr(1);
    bool star = rest.back() == '*';
    if (star) rest.remove_suffix(1);
    int k = 0;
    if (!parse_int(rest, k)) throw fail();
    if (!star && k < 1) throw fail();  // I0 is a smooth fibre
    f.family = star ? FibreFamily::IStar : FibreFamily::I;
    f.k = k;
    return f;
  }
  throw fail();
}

}  // namespace

std::string KodairaFibre::tag() const {
  switch (family) {
    case FibreFamily::I:
      return (is_multiple() ? std::to_string(multiplicity) : std::string()) + "I" + std::to_string(k);
    case FibreFamily::IStar: return "I" + std::to_string(k) + "*";
    case FibreFamily::II: return "II";
    case FibreFamily::III: return "III";
    case FibreFamily::IV: return "IV";
    case FibreFamily::IIStar: return "II*";
    case FibreFamily::IIIStar: return "III*";
    case FibreFamily::IVStar: return "IV*";
  }
  return "?";
}

KodairaFibre standard_fibre(std::string_view tag) {
  KodairaFibre f = parse_tag(tag);
  f.component_multiplicities = standard_multiplicities(f.family, f.k, f.multiplicity);
  return f;
}

std::vector<KodairaFibre> standard_kodaira_table() {
  std::vector<KodairaFibre> table;
  for (int k = 1; k <= 10; ++k) table.push_back(standard_fibre("I" + std::to_string(k)));
  for (int k = 0; k <= 5; ++k) table.push_back(standard_fibre("I" + std::to_string(k) + "*"));
  for (const char* t : {"II", "III", "IV", "II*", "III*", "IV*"}) table.push_back(standard_fibre(t));
  for (int m = 2; m <= 5; ++m)
    for (int k = 0; k <= 4; ++k) table.push_back(standard_fibre(std::to_string(m) + "I" + std::to_string(k)));
  return table;
}

std::vector<KodairaFibre> load_kodaira_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open Kodaira table fixture '" + path.string() + "'");
  std::vector<KodairaFibre> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto where = [&]() { return path.string() + ":" + std::to_string(line_no) + ": "; };
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;
    KodairaFibre f;
    try {
      f = parse_tag(tag);
    } catch (const std::invalid_argument& e) {
      throw FixtureError(where() + e.what());
    }
    std::string token;
    while (fields >> token) {
      int m = 0;
      if (!parse_int(token, m) || m < 1) throw FixtureError(where() + "bad component multiplicity '" + token + "'");
      f.component_multiplicities.push_back(m);
    }
    if (f.component_multiplicities.empty()) throw FixtureError(where() + "no component multiplicities for " + tag);
    if (f.is_multiple() && std::any_of(f.component_multiplicities.begin(), f.component_multiplicities.end(),
                                       [&](int m) { return m != f.multiplicity; }))
      throw FixtureError(where() + "multiple fibre " + tag + " must have every m_i = " + std::to_string(f.multiplicity));
    table.push_back(std::move(f));
  }
  return table;
}

std::string format_kodaira_table(const std::vector<KodairaFibre>& table) {
  std::string out;
  for (const auto& f : table) {
    out += f.tag();
    for (int m : f.component_multiplicities) out += " " + std::to_string(m);
    out += '\n';
  }
  return out;
}

bool multiple_fibre_claim_check(const KodairaFibre& f) {
  if (f.is_multiple()) return f.multiplicity - 1 < f.multiplicity;
  const auto& ms = f.component_multiplicities;
  return !std::all_of(ms.begin(), ms.end(), [](int m) { return 2 * (m - 1) >= m; });
}

void EllipticDescriptor::validate() const {
  if (b < 0 || pg < 0 || q < 0) throw InvalidDescriptor("elliptic descriptor: b, pg and q must be nonnegative");
  if (chi < 1) throw InvalidDescriptor("elliptic descriptor: chi = " + std::to_string(chi) + " < 1");
  if (chi != 1 + pg - q)
    throw InvalidDescriptor("elliptic descriptor: chi = " + std::to_string(chi) + " but 1 + pg - q = " +
                            std::to_string(1 + pg - q));
  if (q != b)
    throw InvalidDescriptor("elliptic descriptor: q = " + std::to_string(q) + " differs from the base genus " +
                            std::to_string(b));
  for (long n : multiple_fibre_orders)
    if (n < 2) throw InvalidDescriptor("elliptic descriptor: multiple fibre order " + std::to_string(n) + " < 2");
}

long delta_degree(long chi, long b) { return chi - 2 + 2 * b; }

long special_tensor_degree(long b, long pg) {
  if (pg < b)
    throw InvalidDescriptor("pg = " + std::to_string(pg) + " < b = " + std::to_string(b) + " forces chi < 1");
  return 3 * b - 3 - pg;
}

NilpotentVerdict exists_nilpotent_special_tensor(long b, long pg) {
  const long degree = special_tensor_degree(b, pg);
  if (b < 3) return {NilpotentExistence::NotGuaranteed, "window b <= pg <= 2b-3 is empty for b < 3"};
  if (degree < b)
    return {NilpotentExistence::NotGuaranteed,
            "pg > 2b-3 = " + std::to_string(2 * b - 3) + ", so deg(2K_B - delta) = " + std::to_string(degree) +
                " < b = " + std::to_string(b)};
  return {NilpotentExistence::Guaranteed,
          "deg(2K_B - delta) = " + std::to_string(degree) + " >= b = " + std::to_string(b) + ", hence effective"};
}

Rat canonical_bundle_degree(const EllipticDescriptor& d) {
  Rat total(delta_degree(d.chi, d.b));
  for (long n : d.multiple_fibre_orders) total += Rat(n - 1, n);
  return total;
}

WeierstrassFamily weierstrass_example(long h) {
  if (h < 1) throw std::invalid_argument("weierstrass_example: h must be >= 1");
  WeierstrassFamily w;
  w.h = h;
  w.b = 6 * h + 1;
  w.M_degree = 2 * h;
  w.KB_degree = 2 * w.b - 2;
  w.six_M_degree = 6 * w.M_degree;
  w.residual_degree = w.KB_degree - w.six_M_degree;
  // Degree 0 and K_B linearly equivalent to 6M: the class is trivial.
  w.h0 = w.residual_degree == 0 ? 1 : 0;
  return w;
}

}  // namespace bidisk
