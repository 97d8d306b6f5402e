#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

// Boost 1.74's mixed rational/integer equality recurses forever under C++20
// reversed-operator lookup; exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a == rational<std::int64_t>(b); }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace kgtab {

using Rational = boost::rational<std::int64_t>;

// Accepts "k", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace kgtab
