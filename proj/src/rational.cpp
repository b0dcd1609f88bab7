#include "qhs/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>
#include <vector>

namespace qhs {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp_text = s.substr(e + 1);
    if (!is_integer_literal(exp_text)) {
      throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
    }
    exponent = std::stol(std::string(exp_text));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("bad decimal '" + std::string(s) + "'");
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      throw std::invalid_argument("bad number '" + std::string(s) + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad number '" + std::string(s) + "'");
  Rational value(Integer(digits, 10));
  value *= pow(Rational(10), exponent - fraction_digits);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (is_integer_literal(text)) return Rational(parse_integer(text));
  return parse_decimal(text);
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 1) digits = 1;
  // ~3.33 bits per decimal digit plus guard bits
  const auto bits = static_cast<mpfr_prec_t>(digits * 3.33) + 16;
  mpfr_t v;
  mpfr_init2(v, bits);
  mpfr_set_q(v, r.get_mpq_t(), MPFR_RNDN);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v);
  mpfr_clear(v);
  return std::string(buf.data());
}

Rational pow(const Rational& r, long e) {
  if (e < 0) {
    if (is_zero(r)) throw std::domain_error("zero raised to a negative power");
    Rational inv = 1 / r;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace qhs
