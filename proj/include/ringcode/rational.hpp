#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace ringcode {

// Compare only against Rational values: boost's mixed integer comparisons
// recurse forever under C++20 rewritten operators.
using Rational = boost::rational<std::int64_t>;
using BigInt = boost::multiprecision::cpp_int;

/// Always "num/den", e.g. "3/1", "1/2".
std::string to_string(const Rational& value);
/// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);
/// Largest integer <= value.
std::int64_t floor(const Rational& value);

}  // namespace ringcode
