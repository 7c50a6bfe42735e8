#include "tsent/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tsent {

std::optional<Rational> parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) return std::nullopt;
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) return std::nullopt;
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
      mpz_class num(digits);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac_len));
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    Rational r{mpz_class(s)};
    return r;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational decimal_snap(double value, int digits) {
  if (value == 0.0) return Rational(0);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.*e", digits - 1, value);
  // buf is like "-1.234...e-05"; rebuild as exact decimal rational
  std::string s(buf);
  auto epos = s.find('e');
  std::string mant = s.substr(0, epos);
  long expo = std::stol(s.substr(epos + 1));
  auto dot = mant.find('.');
  long frac_len = 0;
  if (dot != std::string::npos) {
    frac_len = static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  mpz_class num(mant);
  long net = expo - frac_len;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
  Rational r = net >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long k = static_cast<unsigned long>(inv ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), k);
  if (inv) {
    if (num == 0) throw std::domain_error("rational_pow: zero to negative power");
    std::swap(num, den);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace tsent
