#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74 under C++20: `r == 0` resolves to the reversed form of Boost's
// own (integer, rational) template, which calls `r == 0` again and recurses
// forever. Exact-match non-template overloads win overload resolution and
// stop the cycle; `!=` is rewritten in terms of them.
namespace boost {
#define GRAPHSTAB_RATIONAL_EQ(T)                                                    \
  constexpr bool operator==(const rational<std::int64_t>& a, T b) noexcept {        \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);   \
  }
GRAPHSTAB_RATIONAL_EQ(int)
GRAPHSTAB_RATIONAL_EQ(long)
GRAPHSTAB_RATIONAL_EQ(long long)
#undef GRAPHSTAB_RATIONAL_EQ
}  // namespace boost

namespace graphstab {

/// Exact rational scalar used for every weight, LP value and walk value.
/// Always normalized (lowest terms, positive denominator).
using Rational = boost::rational<std::int64_t>;

/// Parses "7", "-3", "3/4" or a finite decimal such as "0.125" exactly.
/// Throws Error{Errc::ParseError} on anything else.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational half() { return Rational(1, 2); }

}  // namespace graphstab
