#include "bidisk/poly2.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

namespace bidisk {

Poly2::Poly2(const Rat& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{0, 0}, constant);
}

Poly2 Poly2::monomial(Monomial m, const Rat& coeff) {
  Poly2 p;
  if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
  return p;
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Poly2::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Poly2::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

int Poly2::degree_in_z1() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e1));
  return d;
}

int Poly2::degree_in_z2() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e2));
  return d;
}

Rat Poly2::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Monomial Poly2::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading_monomial of zero polynomial");
  return terms_.begin()->first;
}

Rat Poly2::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return terms_.begin()->second;
}

namespace {

Rat rat_pow(const Rat& base, std::uint32_t e) {
  Rat r(1);
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Rat Poly2::evaluate(const Rat& z1v, const Rat& z2v) const {
  Rat sum(0);
  for (const auto& [m, c] : terms_) sum += c * rat_pow(z1v, m.e1) * rat_pow(z2v, m.e2);
  return sum;
}

void Poly2::add_term(Monomial m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2 Poly2::operator-() const {
  Poly2 r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly2& Poly2::operator*=(const Poly2& o) { return *this = *this * o; }

Poly2& Poly2::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly2 Poly2::pow(unsigned exponent) const {
  Poly2 result(1);
  Poly2 base(*this);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Poly2 Poly2::shifted(Monomial m) const {
  Poly2 r;
  for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
  return r;
}

Poly2 Poly2::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inverse();
}

// ---------------------------------------------------------------------------
// Literal syntax

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly2 parse_sum() {
    Poly2 result;
    skip_ws();
    if (at_end()) throw PolyParseError("empty polynomial literal", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw PolyParseError("expected '+' or '-'", pos_);
      }
      result += parse_term() * Rat(sign);
      first = false;
    }
    return result;
  }

 private:
  Poly2 parse_term() {
    Poly2 term(1);
    term *= parse_factor();
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      term *= parse_factor();
    }
    return term;
  }

  Poly2 parse_factor() {
    skip_ws();
    if (at_end()) throw PolyParseError("unexpected end of polynomial literal", pos_);
    if (peek() == 'z') {
      ++pos_;
      if (at_end() || (peek() != '1' && peek() != '2'))
        throw PolyParseError("expected variable z1 or z2", pos_);
      Poly2 var = peek() == '1' ? Poly2::z1() : Poly2::z2();
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        return var.pow(parse_uint());
      }
      return var;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      auto value = Rat::parse(text_.substr(start, pos_ - start));
      if (!value) throw PolyParseError("malformed rational coefficient", start);
      return Poly2(*value);
    }
    throw PolyParseError(std::string("unexpected character '") + peek() + "'", pos_);
  }

  unsigned parse_uint() {
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 4096) throw PolyParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw PolyParseError("expected exponent", pos_);
    return static_cast<unsigned>(v);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string monomial_string(Monomial m) {
  std::string s;
  auto append = [&s](const char* var, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += var;
    if (e > 1) s += '^' + std::to_string(e);
  };
  append("z1", m.e1);
  append("z2", m.e2);
  return s;
}

}  // namespace

Poly2 Poly2::parse(std::string_view text) { return Parser(text).parse_sum(); }

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(m);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + '*' + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.to_string(); }

}  // namespace bidisk
