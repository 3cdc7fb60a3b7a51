#include "votemap/rational.hpp"

#include "votemap/error.hpp"

#include <cctype>

namespace votemap {

namespace {

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

Rational parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  BigInt mantissa = 0;
  long scale = 0;
  bool digits = false;
  bool dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (dot) ++scale;
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw DomainError("not a number: '" + s + "'");
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    if (i == s.size()) throw DomainError("not a number: '" + s + "'");
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) break;
      exponent = exponent * 10 + (s[i] - '0');
      if (exponent > 4000) throw DomainError("exponent out of range: '" + s + "'");
    }
    if (eneg) exponent = -exponent;
  }
  if (i != s.size()) throw DomainError("not a number: '" + s + "'");
  const long e = exponent - scale;
  Rational r = e >= 0 ? Rational(mantissa * pow10(e)) : Rational(mantissa, pow10(-e));
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator: '" + text + "'");
  return num / den;
}

std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace votemap
