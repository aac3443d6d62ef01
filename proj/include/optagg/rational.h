#ifndef OPTAGG_RATIONAL_H_
#define OPTAGG_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace optagg {

// Boost 1.74 recurses forever on rational == integer under C++20 rewritten
// comparisons; compare against Rational(...) only.
using Rational = boost::rational<std::int64_t>;

// Decimal rendering rounded half away from zero to `digits` places.
std::string format_fixed(const Rational& value, int digits);

// Shortest exact decimal when the denominator is of the form 2^a 5^b,
// otherwise 17 significant digits.
std::string format_decimal(const Rational& value);

}  // namespace optagg

#endif  // OPTAGG_RATIONAL_H_
