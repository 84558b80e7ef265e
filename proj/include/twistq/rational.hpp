#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace twistq {

// Arbitrary-precision rational scalar. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the invariant
// the rest of the library relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: \"" + s + "\"");
    q.canonicalize();
    return q;
}

// Serializes as "p" or "p/q", matching the file format.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline double to_double(const Rational& q) {
    return q.get_d();
}

// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    return Rational(x);
}

}  // namespace twistq
