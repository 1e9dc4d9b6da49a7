#include "copzero/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace copzero {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  return Rational(mpq_class(x));  // mpq_set_d is exact and canonical
}

Rational Rational::operator-() const {
  return Rational(mpq_class(-v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  mpz_class num, den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view a = text.substr(0, slash);
    const std::string_view b = text.substr(slash + 1);
    if (!all_digits(a) || !all_digits(b)) return std::nullopt;
    num = mpz_class(std::string(a), 10);
    den = mpz_class(std::string(b), 10);
    if (den == 0) return std::nullopt;
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = text.substr(0, dot);
    const std::string_view fp = text.substr(dot + 1);
    if (ip.empty() && fp.empty()) return std::nullopt;
    if (!ip.empty() && !all_digits(ip)) return std::nullopt;
    if (!fp.empty() && !all_digits(fp)) return std::nullopt;
    num = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
    for (char c : fp) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    if (!all_digits(text)) return std::nullopt;
    num = mpz_class(std::string(text), 10);
  }

  if (negative) num = -num;
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace copzero
