#pragma once

#include <vector>

#include "twistq/exact_matrix.hpp"
#include "twistq/real_linalg.hpp"

namespace twistq {

// Best rational approximation to x with denominator <= max_denominator,
// computed from the continued fraction of (the exact dyadic value of) x.
// Satisfies |x - p/q| <= 1/(q * max_denominator).
Rational rationalize(double x, const Integer& max_denominator);

std::vector<Rational> rationalize(const std::vector<double>& xs, const Integer& max_denominator);
ExactMatrix rationalize(const RealMatrix& m, const Integer& max_denominator);

}  // namespace twistq
