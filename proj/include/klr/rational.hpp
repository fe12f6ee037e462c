#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace klr {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& s) { return Rational(s); }

} // namespace klr
