#include "exnet/rational.hpp"

#include <cstdio>
#include <cctype>
#include <stdexcept>

#include "exnet/errors.hpp"

namespace exnet {

std::string to_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    const auto dot = s.find_first_of(".eE");
    if (dot == std::string::npos) {
      if (s[0] == '+') s.erase(0, 1);
      Rational r(s, 10);
      if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
      r.canonicalize();
      return r;
    }
    // Decimal literal: mantissa digits over a power of ten, exactly.
    std::string mantissa = s;
    long exponent = 0;
    const auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      exponent = std::stol(s.substr(e + 1));
      mantissa = s.substr(0, e);
    }
    bool negative = false;
    if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
      negative = mantissa[0] == '-';
      mantissa.erase(0, 1);
    }
    const auto point = mantissa.find('.');
    std::string digits = mantissa;
    if (point != std::string::npos) {
      digits = mantissa.substr(0, point) + mantissa.substr(point + 1);
      exponent -= static_cast<long>(mantissa.size() - point - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed number '" + std::string(text) + "'");
    if (exponent > 4000 || exponent < -4000) throw ParseError("exponent out of range in '" + std::string(text) + "'");
    mpz_class num(digits, 10);
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational r = exponent < 0 ? Rational(num, scale) : Rational(num * scale, 1);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range '" + std::string(text) + "'");
  }
}

}  // namespace exnet
