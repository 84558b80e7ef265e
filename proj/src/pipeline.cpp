#include "twistq/pipeline.hpp"

#include <cmath>
#include <stdexcept>

namespace twistq {

namespace {

int resolve_curve(const Presentation& pres, const std::string& name) {
    int g = pres.generator_index(name);
    if (g < 0) throw std::invalid_argument("unknown curve generator \"" + name + "\"");
    return g;
}

Representation apply_substitution(const Representation& rep, const ScheduleStage& stage,
                                  bool forward) {
    if (!stage.substitution) return rep;
    if (!stage.substitution_inverse)
        throw std::invalid_argument("substitution stages need the inverse substitution");
    return pushforward(rep, forward ? *stage.substitution : *stage.substitution_inverse);
}

Representation apply_stage_real(const Representation& rep, const ScheduleStage& stage) {
    Representation cur = apply_substitution(rep, stage, true);
    TwistDatum d = standard_twist_datum(cur.presentation, resolve_curve(cur.presentation, stage.curve));
    Representation twisted = twist_real(cur, d, stage.t).rep;
    return apply_substitution(twisted, stage, false);
}

double rep_distance(const Representation& a, const Representation& b) {
    double m = 0.0;
    for (int g = 0; g < a.presentation.num_generators(); ++g)
        m = std::max(m, dist(a.evaluate_real(Word::generator(g)),
                             b.evaluate_real(Word::generator(g))));
    return m;
}

double image_norm(const Representation& rep, int g) {
    return rep.is_exact() ? max_abs(rep.exact_images[g])
                          : rep.real_images[g].cwiseAbs().maxCoeff();
}

}  // namespace

std::pair<Representation, PipelineTrace> run(const Representation& seed,
                                             const DeformationSchedule& sched) {
    if (!seed.is_exact()) throw std::invalid_argument("pipeline seed must be exact");
    if (seed.central_relator)
        throw std::invalid_argument("pipeline seed must satisfy its relator on the nose");
    if (sched.stages.empty()) throw std::invalid_argument("schedule needs at least one stage");
    if (sched.epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    if (!validate(seed).ok()) throw std::invalid_argument("seed fails exact certification");

    const int n = seed.dim();
    const size_t k = sched.stages.size();

    // Forward real pass: estimate the twist matrices so early-stage budgets
    // can absorb amplification by everything downstream.
    std::vector<double> twist_norm(k, 1.0);
    {
        Representation ref = seed.to_real_kind();
        for (size_t s = 0; s < k; ++s) {
            const auto& stage = sched.stages[s];
            Representation cur = apply_substitution(ref, stage, true);
            int ci = resolve_curve(cur.presentation, stage.curve);
            RealMatrix T = expm(stage.t *
                                variation(cur.evaluate_real(Word::generator(ci)), cur.group));
            twist_norm[s] = T.cwiseAbs().maxCoeff();
            ref = apply_stage_real(ref, stage);
        }
    }

    std::vector<double> budgets = sched.budgets;
    if (budgets.empty()) {
        budgets.resize(k);
        for (size_t s = 0; s < k; ++s) {
            double amplification = 1.0;
            for (size_t l = s + 1; l < k; ++l)
                amplification *= std::max(1.0, n * twist_norm[l]);
            budgets[s] = sched.epsilon / (static_cast<double>(k) * 4.0 * amplification);
        }
    }
    if (budgets.size() != k) throw std::invalid_argument("budget list does not match stage count");
    double total = 0.0;
    for (double b : budgets) {
        if (b <= 0) throw std::invalid_argument("stage budgets must be positive");
        total += b;
    }
    if (total > sched.epsilon)
        throw std::invalid_argument("stage budgets exceed the global epsilon");

    Representation current = seed;
    PipelineTrace trace;
    trace.epsilon = sched.epsilon;

    for (size_t s = 0; s < k; ++s) {
        const auto& stage = sched.stages[s];
        try {
            Representation work = apply_substitution(current, stage, true);
            int ci = resolve_curve(work.presentation, stage.curve);
            TwistDatum d = standard_twist_datum(work.presentation, ci);

            // the emitted generator error is the approximation error amplified
            // by one matrix product
            double gen_norm = 1.0;
            for (int g : d.twisted) gen_norm = std::max(gen_norm, image_norm(work, g));
            ApproximationRequest req;
            req.A = work.evaluate(d.curve);
            req.group = work.group;
            req.t = stage.t;
            req.epsilon = budgets[s] / (n * gen_norm);
            req.max_denominator_start = sched.max_denominator_start;
            req.schedule_growth = sched.schedule_growth;
            req.max_rounds = sched.max_rounds;
            ApproximationResult result = approx(req);

            Representation reference = apply_stage_real(current, stage);
            Representation emitted = twist_rational(work, d, result.B);
            emitted = apply_substitution(emitted, stage, false);

            StageTrace st;
            st.curve = stage.curve;
            st.t = stage.t;
            st.budget = budgets[s];
            st.approx_error = result.achieved_error;
            st.stage_error = rep_distance(emitted, reference);
            st.denominator_used = result.denominator_used;
            st.rounds = result.rounds;
            if (st.stage_error > budgets[s])
                throw std::runtime_error("stage error " + std::to_string(st.stage_error) +
                                         " exceeds its budget");
            trace.stages.push_back(std::move(st));
            current = std::move(emitted);
        } catch (const std::exception& e) {
            throw std::runtime_error("pipeline stage " + std::to_string(s + 1) + " (" +
                                     stage.curve + "): " + e.what());
        }
    }

    // distance to the all-real reference composition
    Representation all_real = seed.to_real_kind();
    for (const auto& stage : sched.stages) all_real = apply_stage_real(all_real, stage);
    trace.final_distance = rep_distance(current, all_real);
    trace.certified = validate(current).ok();
    if (!trace.certified)
        throw std::logic_error("pipeline output failed exact certification");
    if (trace.final_distance > sched.epsilon)
        throw std::runtime_error("pipeline drifted beyond epsilon (distance " +
                                 std::to_string(trace.final_distance) + ")");
    return {std::move(current), std::move(trace)};
}

DiagnosticsReport hitchin_diagnostics(const Representation& rep, const std::vector<Word>& curves,
                                      double tol) {
    DiagnosticsReport out;
    for (const auto& w : curves) {
        CurveDiagnostics cd;
        cd.curve = w;
        cd.eig = eigenvalues(rep.evaluate_real(w), tol);
        if (rep.is_exact()) {
            // symmetric powers spread eigenvalues across too many orders of
            // magnitude for double-precision QR; the flags are decidable
            // exactly from the characteristic polynomial instead
            ExactMatrix image = rep.evaluate(w);
            PolyExact cp = image.charpoly();
            int n = image.dim();
            cd.eig.all_distinct = has_distinct_eigenvalues(image);
            cd.eig.all_real = count_real_roots(cp) == n && cd.eig.all_distinct;
            cd.eig.all_positive = count_positive_real_roots(cp) == n && cd.eig.all_distinct;
        }
        cd.real_distinct_positive = cd.eig.all_real && cd.eig.all_distinct && cd.eig.all_positive;
        if (cd.real_distinct_positive) ++out.passing;
        out.curves.push_back(std::move(cd));
    }
    out.all_pass = out.passing == static_cast<int>(out.curves.size());
    return out;
}

std::vector<Word> default_diagnostic_curves(const Presentation& pres) {
    std::vector<Word> out;
    for (int g = 0; g < pres.num_generators(); ++g) out.push_back(Word::generator(g));
    if (pres.genus)
        for (int i = 0; i < *pres.genus; ++i)
            out.push_back(Word::generator(2 * i) * Word::generator(2 * i + 1));
    return out;
}

std::vector<std::pair<Word, Rational>> trace_coordinates(const Representation& rep,
                                                         const std::vector<Word>& curves) {
    if (!rep.is_exact())
        throw std::invalid_argument("exact trace coordinates need an exact representation");
    std::vector<std::pair<Word, Rational>> out;
    for (const auto& w : curves) out.emplace_back(w, rep.evaluate(w).trace());
    return out;
}

std::vector<std::pair<Word, double>> trace_coordinates_real(const Representation& rep,
                                                            const std::vector<Word>& curves) {
    std::vector<std::pair<Word, double>> out;
    for (const auto& w : curves) out.emplace_back(w, rep.evaluate_real(w).trace());
    return out;
}

}  // namespace twistq
