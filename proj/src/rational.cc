#include "optagg/rational.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace optagg {

std::string format_fixed(const Rational& value, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = value < 0;
  const Rational magnitude = negative ? -value : value;
  // round(|v| * scale) with halves rounded up
  const Rational scaled = magnitude * scale;
  std::int64_t units = boost::rational_cast<std::int64_t>(scaled);  // truncates
  if (scaled - units >= Rational(1, 2)) ++units;

  std::ostringstream out;
  if (negative && units != 0) out << '-';
  out << units / scale;
  if (digits > 0) {
    out << '.' << std::setw(digits) << std::setfill('0') << units % scale;
  }
  return out.str();
}

std::string format_decimal(const Rational& value) {
  std::int64_t den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    std::ostringstream out;
    out << std::setprecision(17)
        << static_cast<long double>(value.numerator()) / value.denominator();
    return out.str();
  }
  std::string text = format_fixed(value, std::max(twos, fives));
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return text;
}

}  // namespace optagg
