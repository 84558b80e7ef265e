#pragma once

#include <string>
#include <vector>

#include "twistq/representation.hpp"

namespace twistq {

// Curve plus the partition of the generating set it induces: generators
// disjoint from the curve keep their image, the dual generator (algebraic
// intersection +1 with the curve) is multiplied by the twisting matrix.
struct TwistDatum {
    Word curve;
    std::vector<int> twisted;  // generator indices, i(curve, g) = +1
    std::vector<int> fixed;    // generator indices, i(curve, g) = 0
};

// Datum for the standard nonseparating curve a_i: twisted = {b_i}, fixed =
// everything else. `gen_index` must denote an a-generator.
TwistDatum standard_twist_datum(const Presentation& pres, int gen_index);

// Checks the datum against the presentation: partition is exact and the
// homological intersection numbers match.
void validate_twist_datum(const TwistDatum& d, const Presentation& pres);

struct TwistOutcome {
    Representation rep;
    double relator_residual = 0.0;
    std::vector<std::string> warnings;
};

// One-parameter twist flow at time t: each twisted generator image is
// multiplied on the right by expm(t * variation(rho(curve), group)); the
// right side is the one that preserves the relator [a_i, b_i]-convention.
// Output is real-kind; the relator residual is checked against the scaled
// tolerance and reported.
TwistOutcome twist_real(const Representation& rep, const TwistDatum& d, double t);

// Exact twist: B must centralize the curve image exactly and belong to the
// group exactly; the output relator is the exact identity.
Representation twist_rational(const Representation& rep, const TwistDatum& d,
                              const ExactMatrix& B);

// Precomposition with a substitution endomorphism (generator -> word); the
// substituted relator must evaluate to the identity under the representation
// (exactly for exact kind). Realizes twists about non-standard curves as
// conjugated standard twists.
Representation pushforward(const Representation& rep, const std::vector<Word>& substitution);

}  // namespace twistq
