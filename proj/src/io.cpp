#include "twistq/io.hpp"

#include <fstream>
#include <stdexcept>

namespace twistq {

Config config_from_json(const Json& j) {
    Config c;
    c.epsilon_default = j.value("epsilon_default", c.epsilon_default);
    c.real_relator_tol = j.value("real_relator_tol", c.real_relator_tol);
    c.diagnostics_tol = j.value("diagnostics_tol", c.diagnostics_tol);
    if (j.contains("denominator_start"))
        c.denominator_start = Integer(j.at("denominator_start").get<std::string>());
    c.schedule_growth = j.value("schedule_growth", c.schedule_growth);
    c.max_rounds = j.value("max_rounds", c.max_rounds);
    c.rng_seed = j.value("rng_seed", c.rng_seed);
    if (c.epsilon_default <= 0 || c.real_relator_tol <= 0 || c.diagnostics_tol <= 0)
        throw std::invalid_argument("config tolerances must be positive");
    if (c.schedule_growth <= 1) throw std::invalid_argument("config schedule growth must exceed 1");
    return c;
}

Json config_to_json(const Config& c) {
    return Json{{"epsilon_default", c.epsilon_default},
                {"real_relator_tol", c.real_relator_tol},
                {"diagnostics_tol", c.diagnostics_tol},
                {"denominator_start", c.denominator_start.get_str()},
                {"schedule_growth", c.schedule_growth},
                {"max_rounds", c.max_rounds},
                {"rng_seed", c.rng_seed}};
}

Json exact_matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix exact_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nested array");
    int n = static_cast<int>(j.size());
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(j[i].size()) != n)
            throw std::invalid_argument("matrix rows must have equal length");
        for (int k = 0; k < n; ++k) m(i, k) = rational_from_string(j[i][k].get<std::string>());
    }
    return m;
}

Json real_matrix_to_json(const RealMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

RealMatrix real_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nested array");
    int n = static_cast<int>(j.size());
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(j[i].size()) != n)
            throw std::invalid_argument("matrix rows must have equal length");
        for (int k = 0; k < n; ++k) m(i, k) = j[i][k].get<double>();
    }
    return m;
}

Json group_spec_to_json(const GroupSpec& spec) {
    Json j{{"kind", to_string(spec.kind())}, {"n", spec.dim()}};
    if (spec.kind() == GroupKind::SP) j["J"] = exact_matrix_to_json(spec.form());
    if (spec.kind() == GroupKind::G2) {
        Json table = Json::array();
        for (const auto& e : spec.three_form_table())
            table.push_back(Json::array({e.i, e.j, e.k, to_string(e.value)}));
        j["phi3"] = table;
    }
    return j;
}

GroupSpec group_spec_from_json(const Json& j) {
    GroupKind kind = group_kind_from_string(j.at("kind").get<std::string>());
    int n = j.at("n").get<int>();
    switch (kind) {
        case GroupKind::SL: return GroupSpec::sl(n);
        case GroupKind::SP: return GroupSpec::sp(n, exact_matrix_from_json(j.at("J")));
        case GroupKind::G2: {
            if (!j.contains("phi3")) return GroupSpec::g2();
            std::vector<ThreeFormEntry> table;
            for (const auto& e : j.at("phi3"))
                table.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(),
                                 rational_from_string(e[3].get<std::string>())});
            return GroupSpec::g2(std::move(table));
        }
    }
    throw std::logic_error("unreachable");
}

Json presentation_to_json(const Presentation& p) {
    if (p.genus) return Json{{"genus", *p.genus}};
    Json j{{"generators", p.names}};
    Json rels = Json::array();
    for (const auto& r : p.relators) rels.push_back(format_word(r, p));
    j["relators"] = rels;
    return j;
}

Presentation presentation_from_json(const Json& j) {
    if (j.contains("genus")) return surface_presentation(j.at("genus").get<int>());
    Presentation p;
    p.names = j.at("generators").get<std::vector<std::string>>();
    for (const auto& r : j.at("relators")) p.relators.push_back(parse_word(r.get<std::string>(), p));
    return p;
}

Json representation_to_json(const Representation& rep) {
    Json j;
    j["presentation"] = presentation_to_json(rep.presentation);
    j["scalar"] = rep.is_exact() ? "exact" : "real";
    j["group"] = group_spec_to_json(rep.group);
    Json images = Json::object();
    for (int g = 0; g < rep.presentation.num_generators(); ++g) {
        const std::string& name = rep.presentation.names[g];
        images[name] = rep.is_exact() ? exact_matrix_to_json(rep.exact_images[g])
                                      : real_matrix_to_json(rep.real_images[g]);
    }
    j["images"] = images;
    if (!rep.is_exact()) j["tolerance"] = rep.tolerance;
    if (rep.central_relator) j["central_relator"] = true;
    return j;
}

Representation representation_from_json(const Json& j) {
    Representation rep;
    rep.presentation = presentation_from_json(j.at("presentation"));
    rep.group = group_spec_from_json(j.at("group"));
    rep.kind = j.at("scalar").get<std::string>() == "exact" ? ScalarKind::Exact : ScalarKind::Real;
    rep.tolerance = j.value("tolerance", 1e-9);
    rep.central_relator = j.value("central_relator", false);
    const Json& images = j.at("images");
    for (int g = 0; g < rep.presentation.num_generators(); ++g) {
        const std::string& name = rep.presentation.names[g];
        if (!images.contains(name))
            throw std::invalid_argument("missing image for generator \"" + name + "\"");
        if (rep.is_exact())
            rep.exact_images.push_back(exact_matrix_from_json(images.at(name)));
        else
            rep.real_images.push_back(real_matrix_from_json(images.at(name)));
    }
    return rep;
}

Json schedule_to_json(const DeformationSchedule& s, const Presentation& pres) {
    Json stages = Json::array();
    for (const auto& st : s.stages) {
        Json stage{{"curve", st.curve}, {"t", st.t}};
        if (st.substitution) {
            Json sub = Json::object(), inv = Json::object();
            for (int g = 0; g < pres.num_generators(); ++g) {
                sub[pres.names[g]] = format_word((*st.substitution)[g], pres);
                inv[pres.names[g]] = format_word((*st.substitution_inverse)[g], pres);
            }
            stage["substitution"] = sub;
            stage["substitution_inverse"] = inv;
        }
        stages.push_back(std::move(stage));
    }
    Json j{{"stages", stages}, {"epsilon", s.epsilon}};
    if (!s.budgets.empty()) j["budgets"] = s.budgets;
    return j;
}

namespace {

std::vector<Word> substitution_from_json(const Json& j, const Presentation& pres) {
    std::vector<Word> words;
    for (int g = 0; g < pres.num_generators(); ++g) {
        const std::string& name = pres.names[g];
        if (!j.contains(name))
            throw std::invalid_argument("substitution missing generator \"" + name + "\"");
        words.push_back(parse_word(j.at(name).get<std::string>(), pres));
    }
    return words;
}

}  // namespace

DeformationSchedule schedule_from_json(const Json& j, const Presentation& pres) {
    DeformationSchedule s;
    s.epsilon = j.value("epsilon", 1e-6);
    if (j.contains("budgets")) s.budgets = j.at("budgets").get<std::vector<double>>();
    if (j.contains("max_denominator_start"))
        s.max_denominator_start = Integer(j.at("max_denominator_start").get<std::string>());
    s.schedule_growth = j.value("schedule_growth", s.schedule_growth);
    s.max_rounds = j.value("max_rounds", s.max_rounds);
    for (const auto& stage_json : j.at("stages")) {
        ScheduleStage st;
        st.curve = stage_json.at("curve").get<std::string>();
        st.t = stage_json.at("t").get<double>();
        if (stage_json.contains("substitution")) {
            st.substitution = substitution_from_json(stage_json.at("substitution"), pres);
            st.substitution_inverse =
                substitution_from_json(stage_json.at("substitution_inverse"), pres);
        }
        s.stages.push_back(std::move(st));
    }
    return s;
}

Json request_to_json(const ApproximationRequest& req) {
    return Json{{"A", exact_matrix_to_json(req.A)},
                {"group", group_spec_to_json(req.group)},
                {"t", req.t},
                {"epsilon", req.epsilon},
                {"max_denominator_start", req.max_denominator_start.get_str()},
                {"schedule_growth", req.schedule_growth},
                {"max_rounds", req.max_rounds}};
}

ApproximationRequest request_from_json(const Json& j) {
    ApproximationRequest req;
    req.A = exact_matrix_from_json(j.at("A"));
    req.group = group_spec_from_json(j.at("group"));
    req.t = j.at("t").get<double>();
    req.epsilon = j.at("epsilon").get<double>();
    if (j.contains("max_denominator_start"))
        req.max_denominator_start = Integer(j.at("max_denominator_start").get<std::string>());
    req.schedule_growth = j.value("schedule_growth", req.schedule_growth);
    req.max_rounds = j.value("max_rounds", req.max_rounds);
    return req;
}

Json result_to_json(const ApproximationResult& result, const CertifyReport& report) {
    Json history = Json::array();
    for (const auto& h : result.history)
        history.push_back(Json{{"denominator", h.denominator.get_str()},
                               {"delta", h.delta},
                               {"error", h.error}});
    Json items = Json::array();
    for (const auto& item : report.items)
        items.push_back(Json{{"name", item.name}, {"pass", item.pass}, {"residual", item.residual}});
    return Json{{"B", exact_matrix_to_json(result.B)},
                {"achieved_error", result.achieved_error},
                {"denominator_used", result.denominator_used.get_str()},
                {"rounds", result.rounds},
                {"history", history},
                {"certify", Json{{"items", items}, {"all_pass", report.all_pass}}}};
}

Json pipeline_trace_to_json(const PipelineTrace& trace) {
    Json stages = Json::array();
    for (const auto& st : trace.stages)
        stages.push_back(Json{{"curve", st.curve},
                              {"t", st.t},
                              {"budget", st.budget},
                              {"approx_error", st.approx_error},
                              {"stage_error", st.stage_error},
                              {"denominator_used", st.denominator_used.get_str()},
                              {"rounds", st.rounds}});
    return Json{{"epsilon", trace.epsilon},
                {"stages", stages},
                {"final_distance", trace.final_distance},
                {"certified", trace.certified}};
}

Json diagnostics_to_json(const DiagnosticsReport& report, const Presentation& pres) {
    Json curves = Json::array();
    for (const auto& cd : report.curves) {
        Json vals = Json::array();
        for (const auto& v : cd.eig.values)
            vals.push_back(Json{{"re", v.real()}, {"im", v.imag()}});
        curves.push_back(Json{{"curve", format_word(cd.curve, pres)},
                              {"eigenvalues", vals},
                              {"all_real", cd.eig.all_real},
                              {"all_distinct", cd.eig.all_distinct},
                              {"all_positive", cd.eig.all_positive},
                              {"pass", cd.real_distinct_positive}});
    }
    return Json{{"curves", curves}, {"passing", report.passing}, {"all_pass", report.all_pass}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace twistq
