#pragma once

#include <string>

// vendored single-header nlohmann/json lives at vendor/json.hpp
#include <json.hpp>

#include "twistq/centralizer_approx.hpp"
#include "twistq/pipeline.hpp"
#include "twistq/representation.hpp"

namespace twistq {

using Json = nlohmann::json;

struct Config {
    double epsilon_default = 1e-6;
    double real_relator_tol = 1e-9;
    double diagnostics_tol = 1e-9;
    Integer denominator_start = 1000;
    int schedule_growth = 10;
    int max_rounds = 20;
    unsigned rng_seed = 20240901;
};

Config config_from_json(const Json& j);
Json config_to_json(const Config& c);

// Exact entries serialize as "p/q" strings so round trips are bit-exact;
// real entries serialize as JSON numbers.
Json exact_matrix_to_json(const ExactMatrix& m);
ExactMatrix exact_matrix_from_json(const Json& j);
Json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

Json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json representation_to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json schedule_to_json(const DeformationSchedule& s, const Presentation& pres);
DeformationSchedule schedule_from_json(const Json& j, const Presentation& pres);

Json request_to_json(const ApproximationRequest& req);
ApproximationRequest request_from_json(const Json& j);

Json result_to_json(const ApproximationResult& result, const CertifyReport& report);

Json pipeline_trace_to_json(const PipelineTrace& trace);
Json diagnostics_to_json(const DiagnosticsReport& report, const Presentation& pres);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace twistq
