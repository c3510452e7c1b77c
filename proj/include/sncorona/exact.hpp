// exact.hpp - arbitrary-precision integer and rational scalars.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace sncorona {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Integer& z) { return z.convert_to<double>(); }

/// Parses "p" or "p/q" (optional sign on p). Throws std::runtime_error on
/// malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
}

}  // namespace sncorona
