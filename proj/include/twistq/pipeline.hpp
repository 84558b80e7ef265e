#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistq/centralizer_approx.hpp"
#include "twistq/twist.hpp"

namespace twistq {

// One deformation stage: a standard curve a_i by name, or a curve reached
// through a user-supplied substitution (with its inverse for pulling back).
struct ScheduleStage {
    std::string curve;                                   // e.g. "a1"
    std::optional<std::vector<Word>> substitution;       // pushforward before twisting
    std::optional<std::vector<Word>> substitution_inverse;
    double t = 0.0;
};

struct DeformationSchedule {
    std::vector<ScheduleStage> stages;
    double epsilon = 1e-6;
    std::vector<double> budgets;  // optional; default: Lipschitz-corrected split
    Integer max_denominator_start = 1000;
    int schedule_growth = 10;
    int max_rounds = 20;
};

struct StageTrace {
    std::string curve;
    double t = 0.0;
    double budget = 0.0;
    double approx_error = 0.0;   // dist(B, expm(t variation))
    double stage_error = 0.0;    // dist to the stage's real reference
    Integer denominator_used;
    int rounds = 0;
};

struct PipelineTrace {
    std::vector<StageTrace> stages;
    double epsilon = 0.0;
    double final_distance = 0.0;  // to the all-real reference composition
    bool certified = false;       // every exact invariant re-verified
};

// Iterated twist-then-rationalize: per stage, form the real reference by
// twist_real on the previous exact output, call the centralizer approximator
// with the stage budget, emit twist_rational with the returned B. The final
// output is exact with image in G(Q) and within epsilon of the all-real
// reference composition.
std::pair<Representation, PipelineTrace> run(const Representation& seed,
                                             const DeformationSchedule& sched);

struct CurveDiagnostics {
    Word curve;
    EigenvalueReport eig;
    bool real_distinct_positive = false;
};

struct DiagnosticsReport {
    std::vector<CurveDiagnostics> curves;
    int passing = 0;
    bool all_pass = false;
};

// Numeric eigenvalue flags for each curve image; a proxy for Hitchin
// membership, purely diagnostic.
DiagnosticsReport hitchin_diagnostics(const Representation& rep, const std::vector<Word>& curves,
                                      double tol);

// Default diagnostic curves: all standard generators plus the products a_i b_i.
std::vector<Word> default_diagnostic_curves(const Presentation& pres);

// Traces of curve images: exact rationals for exact representations.
std::vector<std::pair<Word, Rational>> trace_coordinates(const Representation& rep,
                                                         const std::vector<Word>& curves);
std::vector<std::pair<Word, double>> trace_coordinates_real(const Representation& rep,
                                                            const std::vector<Word>& curves);

}  // namespace twistq
