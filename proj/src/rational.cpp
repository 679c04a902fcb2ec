#include "otpart/rational.hpp"

#include <stdexcept>

namespace otpart {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long p = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing characters");
      return Rational(p);
    }
    long long p = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing characters");
    const std::string den = s.substr(slash + 1);
    long long q = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument("trailing characters");
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

}  // namespace otpart
