// twistq: construct exact rational surface-group representations, deform
// them along generalized twist flows, and rationalize the deformations back
// into SL(n,Q) / Sp(2k,Q) with exact certificates.

#include <CLI11.hpp>

#include <iostream>

#include "twistq/io.hpp"
#include "twistq/seeds.hpp"

using namespace twistq;

namespace {

struct GlobalOpts {
    std::string config_path;
    bool quiet = false;
    Config config;
};

void load_config(GlobalOpts& g) {
    if (!g.config_path.empty()) g.config = config_from_json(read_json_file(g.config_path));
}

void say(const GlobalOpts& g, const std::string& line) {
    if (!g.quiet) std::cout << line << '\n';
}

void print_validation(const GlobalOpts& g, const ValidationReport& v) {
    say(g, std::string("  relator: ") + (v.relator_ok ? "exact" : "FAIL") +
               " (residual " + std::to_string(v.relator_residual) + ")");
    say(g, std::string("  membership: ") + (v.membership_ok ? "exact" : "FAIL") +
               " (residual " + std::to_string(v.membership_residual) + ")");
}

int cmd_seed(GlobalOpts& g, int genus, int n, const std::string& group, const std::string& out) {
    GroupSpec spec = seed_group_spec(group_kind_from_string(group), n);
    Representation rep = hitchin_seed(genus, n, spec);
    auto v = validate(rep);
    say(g, "seed genus " + std::to_string(genus) + ", " + group + "(" + std::to_string(n) + ")");
    print_validation(g, v);
    auto diag = hitchin_diagnostics(rep, default_diagnostic_curves(rep.presentation),
                                    g.config.diagnostics_tol);
    say(g, "  diagnostics: " + std::to_string(diag.passing) + "/" +
               std::to_string(diag.curves.size()) + " curves real-distinct-positive");
    write_json_file(out, representation_to_json(rep));
    return v.ok() ? 0 : 1;
}

int cmd_twist(GlobalOpts& g, const std::string& rep_path, const std::string& sched_path,
              bool real_mode, double epsilon, const std::string& out,
              const std::string& trace_out) {
    Representation rep = representation_from_json(read_json_file(rep_path));
    DeformationSchedule sched = schedule_from_json(read_json_file(sched_path), rep.presentation);
    if (epsilon > 0) sched.epsilon = epsilon;
    sched.max_denominator_start = g.config.denominator_start;
    sched.schedule_growth = g.config.schedule_growth;
    sched.max_rounds = g.config.max_rounds;

    if (real_mode) {
        Representation cur = rep.to_real_kind();
        for (size_t s = 0; s < sched.stages.size(); ++s) {
            const auto& stage = sched.stages[s];
            if (stage.substitution) cur = pushforward(cur, *stage.substitution);
            int ci = cur.presentation.generator_index(stage.curve);
            if (ci < 0)
                throw std::invalid_argument("stage " + std::to_string(s + 1) +
                                            ": unknown curve \"" + stage.curve + "\"");
            auto outcome = twist_real(cur, standard_twist_datum(cur.presentation, ci), stage.t);
            for (const auto& w : outcome.warnings)
                say(g, "  stage " + std::to_string(s + 1) + ": " + w);
            cur = std::move(outcome.rep);
            if (stage.substitution) cur = pushforward(cur, *stage.substitution_inverse);
        }
        write_json_file(out, representation_to_json(cur));
        say(g, "real twist composition written to " + out);
        return 0;
    }

    if (!rep.is_exact())
        throw std::invalid_argument("--epsilon mode needs an exact input representation");
    auto [result, trace] = run(rep, sched);
    say(g, "pipeline: final distance " + std::to_string(trace.final_distance) + " (epsilon " +
               std::to_string(trace.epsilon) + "), certified " +
               (trace.certified ? "yes" : "no"));
    write_json_file(out, representation_to_json(result));
    if (!trace_out.empty()) write_json_file(trace_out, pipeline_trace_to_json(trace));
    return trace.certified ? 0 : 1;
}

int cmd_rationalize(GlobalOpts& g, const std::string& request_path, const std::string& out) {
    ApproximationRequest req = request_from_json(read_json_file(request_path));
    ApproximationResult result = approx(req);
    CertifyReport report = certify(result, req);
    for (const auto& item : report.items)
        say(g, std::string("  [") + (item.pass ? "pass" : "FAIL") + "] " + item.name +
                   " (residual " + std::to_string(item.residual) + ")");
    write_json_file(out, result_to_json(result, report));
    return report.all_pass ? 0 : 1;
}

int cmd_verify(GlobalOpts& g, const std::string& rep_path, double tol) {
    Representation rep = representation_from_json(read_json_file(rep_path));
    if (tol > 0) rep.tolerance = tol;
    auto v = validate(rep);
    say(g, "verify " + rep_path);
    print_validation(g, v);
    auto diag = hitchin_diagnostics(rep, default_diagnostic_curves(rep.presentation),
                                    g.config.diagnostics_tol);
    say(g, "  diagnostics: " + std::to_string(diag.passing) + "/" +
               std::to_string(diag.curves.size()) + " curves real-distinct-positive");
    return v.ok() ? 0 : 1;  // diagnostics never affect the exit code
}

int cmd_traces(GlobalOpts& g, const std::string& rep_path, const std::string& curves_path,
               const std::string& out) {
    Representation rep = representation_from_json(read_json_file(rep_path));
    std::vector<Word> curves;
    if (curves_path.empty()) {
        curves = default_diagnostic_curves(rep.presentation);
    } else {
        for (const auto& entry : read_json_file(curves_path))
            curves.push_back(parse_word(entry.get<std::string>(), rep.presentation));
    }
    Json rows = Json::array();
    if (rep.is_exact()) {
        for (const auto& [w, tr] : trace_coordinates(rep, curves))
            rows.push_back(Json{{"word", format_word(w, rep.presentation)},
                                {"trace", to_string(tr)}});
    } else {
        for (const auto& [w, tr] : trace_coordinates_real(rep, curves))
            rows.push_back(Json{{"word", format_word(w, rep.presentation)}, {"trace", tr}});
    }
    write_json_file(out, rows);
    say(g, "wrote " + std::to_string(rows.size()) + " traces to " + out);
    return 0;
}

int cmd_pipeline(GlobalOpts& g, const std::string& seed_path, const std::string& sched_path,
                 const std::string& out, const std::string& trace_out) {
    Representation seed = representation_from_json(read_json_file(seed_path));
    DeformationSchedule sched = schedule_from_json(read_json_file(sched_path), seed.presentation);
    auto [result, trace] = run(seed, sched);
    say(g, "pipeline: " + std::to_string(trace.stages.size()) + " stages, final distance " +
               std::to_string(trace.final_distance) + " <= epsilon " +
               std::to_string(trace.epsilon));
    write_json_file(out, representation_to_json(result));
    if (!trace_out.empty()) write_json_file(trace_out, pipeline_trace_to_json(trace));
    return trace.certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational surface-group representations and twist flows"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--config", g.config_path, "config JSON path");
    app.add_flag("--quiet", g.quiet, "suppress progress output");

    int genus = 3, n = 3;
    std::string group = "sl", out_path = "out.json", rep_path, sched_path, trace_path;
    std::string request_path, curves_path;
    double epsilon = 0, tol = 0;
    bool real_mode = false;

    auto* seed = app.add_subcommand("seed", "construct an exact Hitchin seed");
    seed->add_option("--genus", genus, "surface genus (>= 2)")->required();
    seed->add_option("--n", n, "matrix dimension")->required();
    seed->add_option("--group", group, "sl | sp | g2")->required();
    seed->add_option("-o,--out", out_path, "output representation file")->required();

    auto* twist = app.add_subcommand("twist", "twist a representation along a schedule");
    twist->add_option("--rep", rep_path, "input representation file")->required();
    twist->add_option("--schedule", sched_path, "schedule file")->required();
    twist->add_flag("--real", real_mode, "emit the float reference instead of rationalizing");
    twist->add_option("--epsilon", epsilon, "global rationalization tolerance");
    twist->add_option("-o,--out", out_path, "output representation file")->required();
    twist->add_option("--trace", trace_path, "optional pipeline trace file");

    auto* rat = app.add_subcommand("rationalize", "single-matrix centralizer approximation");
    rat->add_option("--request", request_path, "request JSON file")->required();
    rat->add_option("-o,--out", out_path, "output result file")->required();

    auto* verify = app.add_subcommand("verify", "re-verify relator/membership/diagnostics");
    verify->add_option("--rep", rep_path, "representation file")->required();
    verify->add_option("--tol", tol, "tolerance override for real representations");

    auto* traces = app.add_subcommand("traces", "trace coordinates along curves");
    traces->add_option("--rep", rep_path, "representation file")->required();
    traces->add_option("--curves", curves_path, "JSON list of curve words");
    traces->add_option("-o,--out", out_path, "output trace file")->required();

    auto* pipe = app.add_subcommand("pipeline", "twist-then-rationalize end to end");
    pipe->add_option("--seed", rep_path, "exact seed representation file")->required();
    pipe->add_option("--schedule", sched_path, "schedule file")->required();
    pipe->add_option("-o,--out", out_path, "output representation file")->required();
    pipe->add_option("--trace", trace_path, "output trace file");

    CLI11_PARSE(app, argc, argv);

    try {
        load_config(g);
        if (seed->parsed()) return cmd_seed(g, genus, n, group, out_path);
        if (twist->parsed())
            return cmd_twist(g, rep_path, sched_path, real_mode, epsilon, out_path, trace_path);
        if (rat->parsed()) return cmd_rationalize(g, request_path, out_path);
        if (verify->parsed()) return cmd_verify(g, rep_path, tol);
        if (traces->parsed()) return cmd_traces(g, rep_path, curves_path, out_path);
        if (pipe->parsed()) return cmd_pipeline(g, rep_path, sched_path, out_path, trace_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
