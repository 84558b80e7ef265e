#include "twistq/centralizer_approx.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "twistq/rationalize.hpp"

namespace twistq {

namespace {

void validate_request(const ApproximationRequest& req) {
    if (req.epsilon <= 0 && !req.full_schedule)
        throw std::invalid_argument("epsilon must be positive");
    if (req.max_denominator_start < 1)
        throw std::invalid_argument("denominator schedule must start at >= 1");
    if (req.schedule_growth <= 1) throw std::invalid_argument("schedule growth must exceed 1");
    if (req.max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
    auto membership = member(req.A, req.group);
    if (!membership.member)
        throw std::invalid_argument("request matrix is not exactly in the group (" +
                                    membership.detail + ")");
    if (!has_distinct_eigenvalues(req.A))
        throw std::invalid_argument(
            "request matrix fails the exact distinct-eigenvalue certificate");
}

PolyExact to_poly(const std::vector<Rational>& coeffs) { return PolyExact(coeffs); }

// Shared escalation loop. `make_unit` builds the exact group element from
// the rounded polynomial (or reports a degenerate round by returning false).
template <typename MakeUnit>
ApproximationResult run_schedule(const ApproximationRequest& req, const RealMatrix& root_target,
                                 const RealMatrix& target, MakeUnit&& make_unit) {
    const RealMatrix A_real = to_real(req.A);
    KrylovCoordinates coords = krylov_coordinates(A_real, root_target);

    ApproximationResult best;
    bool have_best = false;
    ApproximationResult out;
    Integer denominator = req.max_denominator_start;
    for (int round = 1; round <= req.max_rounds; ++round, denominator *= req.schedule_growth) {
        std::vector<double> cs(coords.coeffs.data(), coords.coeffs.data() + coords.coeffs.size());
        PolyExact p = to_poly(rationalize(cs, denominator));
        ExactMatrix X = poly_eval(p, req.A);
        ExactMatrix B;
        if (!make_unit(X, B)) {
            out.history.push_back(
                {denominator, dist(X, root_target), std::numeric_limits<double>::infinity()});
            continue;  // degenerate round; a larger denominator re-rounds p
        }
        double delta = dist(X, root_target);
        double error = dist(B, target);
        out.history.push_back({denominator, delta, error});

        // exactness triple holds at every round, not only at success
        if (B.det() != 1) throw std::logic_error("norm-one construction lost det = 1");
        if (!B.commutes_with(req.A)) throw std::logic_error("centralizer element drifted");
        if (!member(B, req.group).member)
            throw std::logic_error("centralizer element left the group");

        if (!have_best || error < best.achieved_error) {
            best.B = B;
            best.achieved_error = error;
            best.denominator_used = denominator;
            best.rounds = round;
            have_best = true;
        }
        if (!req.full_schedule && error <= req.epsilon) {
            out.B = std::move(B);
            out.achieved_error = error;
            out.denominator_used = denominator;
            out.rounds = round;
            return out;
        }
    }
    if (req.full_schedule && have_best) {
        best.history = std::move(out.history);
        return best;
    }
    throw std::runtime_error("max_rounds exceeded without reaching epsilon (best " +
                             (have_best ? std::to_string(best.achieved_error) : "none") + ")");
}

}  // namespace

ApproximationResult approx_sl(const ApproximationRequest& req) {
    if (req.group.kind() != GroupKind::SL)
        throw std::invalid_argument("approx_sl needs an SL group spec");
    validate_request(req);
    const int n = req.A.dim();
    ExactMatrix F = variation(req.A, req.group);
    RealMatrix F_real = to_real(F);
    RealMatrix target = expm(req.t * F_real);
    RealMatrix root_target = expm((req.t / n) * F_real);

    return run_schedule(req, root_target, target, [&](const ExactMatrix& X, ExactMatrix& B) {
        Rational d = X.det();
        if (d == 0) return false;
        B = X.pow(n) * (Rational(1) / d);
        return true;
    });
}

ApproximationResult approx_sp(const ApproximationRequest& req) {
    if (req.group.kind() != GroupKind::SP)
        throw std::invalid_argument("approx_sp needs an SP group spec");
    validate_request(req);
    ExactMatrix V = variation(req.A, req.group);
    RealMatrix V_real = to_real(V);
    RealMatrix target = expm(req.t * V_real);
    RealMatrix root_target = expm((req.t / 2) * V_real);
    const ExactMatrix J = req.group.form();
    const ExactMatrix J_inv = J.inverse();

    return run_schedule(req, root_target, target, [&](const ExactMatrix& X, ExactMatrix& B) {
        ExactMatrix tau = J_inv * X.transpose() * J;
        if (tau.det() == 0) return false;
        B = X * tau.inverse();
        return true;
    });
}

ApproximationResult approx(const ApproximationRequest& req) {
    switch (req.group.kind()) {
        case GroupKind::SL: return approx_sl(req);
        case GroupKind::SP: return approx_sp(req);
        case GroupKind::G2:
            throw std::invalid_argument(
                "rational approximation inside G2 centralizers is not provided");
    }
    throw std::logic_error("unreachable");
}

CertifyReport certify(const ApproximationResult& result, const ApproximationRequest& req) {
    CertifyReport rep;
    auto add = [&rep](std::string name, bool pass, double residual) {
        rep.items.push_back({std::move(name), pass, residual});
    };

    auto req_member = member(req.A, req.group);
    add("request: A in group", req_member.member, req_member.residual);
    add("request: A has distinct eigenvalues", has_distinct_eigenvalues(req.A), 0.0);

    Rational detB = result.B.det();
    add("det(B) = 1 exactly", detB == 1, std::abs(to_double(detB - 1)));

    bool comm = result.B.commutes_with(req.A);
    ExactMatrix lhs = req.A * result.B, rhs = result.B * req.A;
    add("A B = B A exactly", comm, comm ? 0.0 : dist(lhs, to_real(rhs)));

    auto membership = member(result.B, req.group);
    add("B in group exactly", membership.member, membership.residual);

    double error = dist(result.B, expm(req.t * to_real(variation(req.A, req.group))));
    add("dist(B, expm(t F(A))) <= epsilon", error <= req.epsilon, error);

    rep.all_pass = true;
    for (const auto& item : rep.items) rep.all_pass = rep.all_pass && item.pass;
    return rep;
}

}  // namespace twistq
