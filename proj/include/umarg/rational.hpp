#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "umarg/errors.hpp"

namespace umarg {

// Exact rational arithmetic for spectra and order comparisons. Floating
// point is never used for lexicographic decisions.
using Rational = boost::rational<std::int64_t>;

// "p/q" for non-integers, plain "p" otherwise.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Accepts "p" and "p/q"; q must be positive.
Rational parse_rational(const std::string& text);

} // namespace umarg
