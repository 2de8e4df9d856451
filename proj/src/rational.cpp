#include "realcover/rational.hpp"

#include <stdexcept>

namespace realcover {

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

Rational rational_from_string(const std::string& text) {
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw std::invalid_argument("bad rational '" + text + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("bad rational '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("bad rational '" + text + "'");
    return BigInt(part);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

BigInt floor(const Rational& q) {
  const BigInt& num = boost::multiprecision::numerator(q);
  const BigInt& den = boost::multiprecision::denominator(q);  // always positive
  BigInt quotient = num / den;
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

}  // namespace realcover
