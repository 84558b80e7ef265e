#pragma once

#include <optional>
#include <vector>

#include "twistq/exact_matrix.hpp"
#include "twistq/group_spec.hpp"
#include "twistq/real_linalg.hpp"
#include "twistq/word.hpp"

namespace twistq {

enum class ScalarKind { Exact, Real };

// Assignment of a matrix to each generator of a presentation, either over
// exact rationals or over doubles, tagged with a target group.
struct Representation {
    Presentation presentation;
    GroupSpec group = GroupSpec::sl(2);
    ScalarKind kind = ScalarKind::Exact;
    std::vector<ExactMatrix> exact_images;  // per generator (exact kind)
    std::vector<RealMatrix> real_images;    // per generator (real kind)
    double tolerance = 1e-9;                // residual allowance (real kind)

    // The Long-Reid orbifold assignment is projective: its relator lands in
    // the center {+-I} rather than on I. Surface seeds always have this off.
    bool central_relator = false;

    int dim() const { return group.dim(); }
    bool is_exact() const { return kind == ScalarKind::Exact; }

    ExactMatrix evaluate(const Word& w) const;      // exact kind only
    RealMatrix evaluate_real(const Word& w) const;  // either kind

    Representation to_real_kind() const;
};

struct ValidationReport {
    bool relator_ok = false;
    double relator_residual = 0.0;
    bool membership_ok = false;
    double membership_residual = 0.0;
    bool ok() const { return relator_ok && membership_ok; }
};

// Relator and membership checks: exact for exact kind (up to center when
// central_relator is set), within rep.tolerance scaled by generator norms
// for real kind.
ValidationReport validate(const Representation& rep);

// Relator residual scale: product of max(1, ||image||_inf) over generators.
double relator_scale(const Representation& rep);

}  // namespace twistq
