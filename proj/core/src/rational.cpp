#include "commprob/rational.hpp"

#include <stdexcept>

namespace commprob {

std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  const auto parse_int = [](std::string_view part) -> BigInt {
    if (part.empty()) throw std::invalid_argument("empty integer in rational");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw std::invalid_argument("sign without digits in rational");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw std::invalid_argument("invalid character in rational: " + std::string(part));
    return BigInt(std::string(part));
  };
  const BigInt num = parse_int(text.substr(0, slash));
  if (slash == std::string_view::npos) return Rational(num);
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational: " + std::string(text));
  return Rational(num, den);
}

double rational_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_pow(const Rational& r, unsigned e) {
  Rational acc(1);
  Rational base = r;
  for (; e; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

}  // namespace commprob
