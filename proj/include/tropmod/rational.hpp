#ifndef TROPMOD_RATIONAL_HPP
#define TROPMOD_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace tropmod {

// Exact rational scalar. boost::rational keeps the invariants we need:
// positive denominator, lowest terms, exact arithmetic and comparison.
// No floating point is used anywhere in this project.
using Rational = boost::rational<std::int64_t>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(num, den);
}

// Parses "p/q" or "p" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string rational_to_string(const Rational& r);

}  // namespace tropmod

#endif
