#include "bidisk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bidisk {

Rat::Rat(long num, long den) : q_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  q_ /= o.q_;
  return *this;
}

Rat Rat::inverse() const { return Rat(1) / *this; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<mpz_class> perfect_sqrt(const mpz_class& v) {
  if (sgn(v) < 0) return std::nullopt;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

}  // namespace

std::optional<Rat> Rat::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

std::optional<Rat> Rat::sqrt() const {
  auto n = perfect_sqrt(q_.get_num());
  if (!n) return std::nullopt;
  auto d = perfect_sqrt(q_.get_den());
  if (!d) return std::nullopt;
  return Rat(mpq_class(*n, *d));
}

std::optional<std::int64_t> Rat::to_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = q_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

std::string Rat::to_string() const { return q_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace bidisk
