#pragma once

#include <string>
#include <vector>

#include "twistq/group_spec.hpp"

namespace twistq {

// Request for an exact rational centralizer element within epsilon of
// expm(t * variation(A)). A must be exactly in the group and have an exact
// distinct-eigenvalue certificate.
struct ApproximationRequest {
    ExactMatrix A;
    GroupSpec group = GroupSpec::sl(2);
    double t = 0.0;
    double epsilon = 1e-6;
    Integer max_denominator_start = 1000;
    int schedule_growth = 10;
    int max_rounds = 20;
    // Diagnostic mode: ignore the epsilon stop, run the whole denominator
    // schedule, and return the best round with the full history attached.
    bool full_schedule = false;
};

struct ApproximationRound {
    Integer denominator;
    double delta;  // ||p(A) - root target||_max
    double error;  // ||B - expm(t variation(A))||_max
};

struct ApproximationResult {
    ExactMatrix B;
    double achieved_error = 0.0;
    Integer denominator_used;
    int rounds = 0;
    std::vector<ApproximationRound> history;
};

// SL route: round the Krylov coordinates of the n-th root target
// u* = expm((t/n) F(A)), then B = p(A)^n / det p(A). Determinant one,
// commutation with A and group membership hold exactly at every round by
// construction; the denominator bound escalates until the error test passes.
ApproximationResult approx_sl(const ApproximationRequest& req);

// SP route: square-root target, B = p(A) tau(p(A))^{-1} with
// tau(x) = J^{-1} x^T J; then B^T J B = J and det B = 1 exactly.
ApproximationResult approx_sp(const ApproximationRequest& req);

// Dispatch on req.group.kind() (G2 approximation is not provided).
ApproximationResult approx(const ApproximationRequest& req);

struct CertifyReport {
    struct Item {
        std::string name;
        bool pass;
        double residual;
    };
    std::vector<Item> items;
    bool all_pass = false;
};

// Re-verifies every exact invariant of a result from scratch.
CertifyReport certify(const ApproximationResult& result, const ApproximationRequest& req);

}  // namespace twistq
