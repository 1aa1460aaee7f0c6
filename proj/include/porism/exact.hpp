#pragma once

// Exact rational arithmetic for the integer/rational bend recursion.
// boost::multiprecision::cpp_rational is header-only and converts from
// double exactly (doubles are dyadic rationals).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace porism {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Accepts "12", "-3/4" and plain decimals like "2.5".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::domain_error("rational with zero denominator: " + s);
        return Rational(num, den);
    }
    auto point = s.find('.');
    if (point != std::string::npos) {
        std::string digits = s.substr(0, point) + s.substr(point + 1);
        BigInt num(digits);
        BigInt den = 1;
        for (std::size_t i = point + 1; i < s.size(); ++i) den *= 10;
        return Rational(num, den);
    }
    return Rational(BigInt(s));
}

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace porism
