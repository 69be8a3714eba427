#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orchard {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number. Stored in lowest terms with a positive
/// denominator; all arithmetic is exact (no rounding anywhere).
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

inline int sign_of(const Integer& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

/// Parses "a/b" or "a". Throws std::runtime_error on malformed input.
inline Rational rational_from_string(const std::string& s) {
    return Rational(s);
}

inline std::string rational_to_string(const Rational& q) {
    return q.str();
}

/// Display-only conversion; never used in predicates.
inline double rational_to_double(const Rational& q) {
    return static_cast<double>(q);
}

} // namespace orchard
