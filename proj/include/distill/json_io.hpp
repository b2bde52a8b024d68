#pragma once

#include "distill/app_estimator.hpp"
#include "distill/error_budget.hpp"
#include "distill/frontier.hpp"
#include "distill/pipeline_sim.hpp"
#include "distill/protocol_catalog.hpp"

#include <json.hpp>

namespace distill
{

using Json = nlohmann::ordered_json;

// Floating-point fields are rounded to six significant digits.
Json to_json(const RoundSchedule& s);
Json to_json(const FactoryLayout& l);
Json to_json(const DistanceParams& p);
Json to_json(const FactoryConfig& c);
Json to_json(const FactoryPerformance& p);
Json to_json(const FactoryAssessment& a);
Json to_json(const ParetoPoint& p);
Json to_json(const Reduction& r);
Json to_json(const SimReport& r);
Json to_json(const Scenario& s);
Json to_json(const AppEstimate& e);

RoundSchedule schedule_from_json(const Json& j);
FactoryLayout layout_from_json(const Json& j);

// protocol,d_X,d_Z,h,p_out,qubits,cycles,p_accept,spacetime,provenance
std::string csv_header();
std::string csv_row(const ParetoPoint& p);

}  // namespace distill
