#include "lpa/rational.hpp"

#include <cctype>

namespace lpa {

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ValidationError(ErrorKind::invalid_polynomial,
                          "not a rational literal: " + std::string(text));
  };

  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::string& out) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out += text[i++];
    }
    return i > start;
  };
  std::string num, den = "1";
  if (!digits(num)) return fail();
  if (i < text.size() && text[i] == '/') {
    ++i;
    den.clear();
    if (!digits(den)) return fail();
  }
  if (i != text.size()) return fail();

  boost::multiprecision::cpp_int n(num), d(den);
  if (d == 0) {
    throw ValidationError(ErrorKind::invalid_polynomial,
                          "zero denominator in rational: " + std::string(text));
  }
  if (negative) n = -n;
  return Rational(n, d);
}

std::string to_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

}  // namespace lpa
