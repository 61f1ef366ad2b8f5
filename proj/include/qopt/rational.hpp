#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace qopt {

// Exact arithmetic for all model coefficients. Conversion to floating point
// happens only at solver boundaries.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

// Accepts integers ("42"), decimals ("-3.25") and fractions ("7/2").
Rational parse_rational(const std::string& text);

// Exact textual form: integers as-is, terminating decimals as decimals,
// everything else as "p/q". parse_rational inverts it losslessly.
std::string format_rational(const Rational& r);

}  // namespace qopt
