#include "distill/json_io.hpp"

#include "distill/format.hpp"

#include <stdexcept>

namespace distill
{

namespace
{

Mechanism
parse_mechanism(const std::string& s)
{
    for (auto m : {Mechanism::faulty_t_measurement, Mechanism::injection_autocorrect, Mechanism::teleport_target})
        if (to_string(m) == s)
            return m;
    throw std::invalid_argument("unknown mechanism '" + s + "'");
}

AncillaRegion
parse_region(const std::string& s)
{
    for (auto r : {AncillaRegion::top, AncillaRegion::bottom, AncillaRegion::none})
        if (to_string(r) == s)
            return r;
    throw std::invalid_argument("unknown ancilla region '" + s + "'");
}

RegionRole
parse_role(const std::string& s)
{
    for (auto r : {RegionRole::data_qubit, RegionRole::ancilla_region, RegionRole::autocorrect_block,
                   RegionRole::zero_level_block, RegionRole::faulty_t_strip, RegionRole::transfer_bus})
        if (to_string(r) == s)
            return r;
    throw std::invalid_argument("unknown region role '" + s + "'");
}

double
r6(double v)
{
    return round_sig6(v);
}

std::string
point_protocol(const ParetoPoint& p)
{
    if (p.config)
        return to_string(p.config->protocol);
    return reference_row(p.reference_id).protocol;
}

}  // namespace

Json
to_json(const RoundSchedule& s)
{
    Json j;
    j["protocol"] = to_string(s.protocol);
    j["rounds"] = Json::array();
    for (const auto& round : s.rounds) {
        Json r = Json::array();
        for (const auto& op : round)
            r.push_back(Json{{"axis", op.axis.label()},
                             {"mask", op.axis.mask},
                             {"mechanism", to_string(op.mechanism)},
                             {"region", to_string(op.region)}});
        j["rounds"].push_back(r);
    }
    return j;
}

RoundSchedule
schedule_from_json(const Json& j)
{
    RoundSchedule s{parse_protocol(j.at("protocol").get<std::string>()), {}};
    for (const auto& r : j.at("rounds")) {
        std::vector<RotationOp> round;
        for (const auto& op : r)
            round.push_back({PauliAxis{op.at("mask").get<std::uint8_t>()},
                             parse_mechanism(op.at("mechanism").get<std::string>()),
                             parse_region(op.at("region").get<std::string>())});
        s.rounds.push_back(round);
    }
    return s;
}

Json
to_json(const FactoryLayout& l)
{
    Json j;
    j["cells"] = l.cells();
    j["qubits"] = l.qubits();
    j["regions"] = Json::array();
    for (const auto& r : l.regions)
        j["regions"].push_back(Json{{"role", to_string(r.role)},
                                    {"label", r.label},
                                    {"x", r.x},
                                    {"y", r.y},
                                    {"w", r.w},
                                    {"h", r.h}});
    return j;
}

FactoryLayout
layout_from_json(const Json& j)
{
    FactoryLayout l;
    for (const auto& r : j.at("regions"))
        l.regions.push_back({parse_role(r.at("role").get<std::string>()), r.at("label").get<std::string>(),
                             r.at("x").get<std::int64_t>(), r.at("y").get<std::int64_t>(),
                             r.at("w").get<std::int64_t>(), r.at("h").get<std::int64_t>()});
    return l;
}

Json
to_json(const DistanceParams& p)
{
    return Json{{"d_x", p.d_x}, {"d_z", p.d_z}, {"d_m", p.d_m}, {"h", p.h}};
}

Json
to_json(const FactoryConfig& c)
{
    Json j;
    j["protocol"] = to_string(c.protocol);
    j["params"] = to_json(c.params);
    j["first_level"] = c.first_level ? to_json(*c.first_level) : Json(nullptr);
    return j;
}

Json
to_json(const FactoryPerformance& p)
{
    Json j;
    j["physical_qubits"] = p.physical_qubits;
    j["cycles_per_output"] = p.cycles_per_output;
    j["outputs_per_run"] = p.outputs_per_run;
    j["p_out"] = r6(p.p_out);
    j["p_accept"] = r6(p.p_accept);
    j["spacetime"] = p.p_accept > 0.0 ? Json(r6(spacetime_cost(p))) : Json(nullptr);
    return j;
}

Json
to_json(const FactoryAssessment& a)
{
    Json j;
    j["config"] = to_json(a.config);
    j["performance"] = to_json(a.performance);
    j["rotation_error"] = r6(a.rotation_error);
    j["leading_term"] = r6(a.leading_term);
    j["first_level"] = a.first_level ? to_json(*a.first_level) : Json(nullptr);
    j["first_level_factories"] = a.first_level_factories;
    j["ledger"] = Json::array();
    for (const auto& c : a.ledger)
        j["ledger"].push_back(Json{{"source", to_string(c.source)},
                                   {"detectability", to_string(c.detectability)},
                                   {"multiplicity", c.multiplicity},
                                   {"probability", r6(c.probability)},
                                   {"where", c.where}});
    return j;
}

Json
to_json(const ParetoPoint& p)
{
    Json j;
    j["protocol"] = point_protocol(p);
    if (p.config) {
        j["d_X"] = p.config->params.d_x;
        j["d_Z"] = p.config->params.d_z;
        j["h"] = p.config->params.h;
        if (p.config->first_level) {
            j["first_d_X"] = p.config->first_level->d_x;
            j["first_d_Z"] = p.config->first_level->d_z;
        }
    } else {
        j["reference"] = p.reference_id;
    }
    j["p_out"] = r6(p.p_out);
    j["qubits"] = p.performance.physical_qubits;
    j["cycles"] = p.performance.cycles_per_output;
    j["outputs_per_run"] = p.performance.outputs_per_run;
    j["p_accept"] = r6(p.performance.p_accept);
    j["spacetime"] = r6(p.spacetime);
    j["provenance"] = p.provenance;
    return j;
}

Json
to_json(const Reduction& r)
{
    return Json{{"reduction", r6(r.value)},
                {"level", r6(r.level)},
                {"cost_a", r6(r.cost_a)},
                {"cost_b", r6(r.cost_b)},
                {"levels_compared", r.levels_compared}};
}

Json
to_json(const SimReport& r)
{
    Json j;
    j["generator"] = r.generator;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["p_fail"] = r6(r.p_fail);
    j["retries"] = r.retries;
    j["retry_rate"] = r6(r.retry_rate);
    j["retry_rate_se"] = r6(r.retry_rate_se);
    j["retry_rate_analytic"] = r6(retry_probability(r.p_fail));
    j["mean_extra_cycles"] = r6(r.mean_extra_cycles);
    j["mean_extra_cycles_se"] = r6(r.mean_extra_cycles_se);
    return j;
}

Json
to_json(const Scenario& s)
{
    Json j;
    j["M"] = r6(s.M);
    j["delta"] = r6(s.delta);
    j["p_phys"] = r6(s.p_phys);
    j["sites"] = Json::array({s.sites_x, s.sites_y});
    j["arena"] = Json::array({s.arena_width, s.arena_height});
    j["pauli_terms"] = s.pauli_terms;
    j["parallel_rotations"] = s.parallel_rotations;
    j["budget_clifford"] = r6(s.budget_clifford);
    j["budget_magic"] = r6(s.budget_magic);
    j["feed_sides"] = s.feed_sides;
    return j;
}

Json
to_json(const AppEstimate& e)
{
    Json j;
    j["d"] = e.d;
    j["t_count"] = r6(e.t_count);
    j["magic_budget"] = r6(e.magic_budget);
    j["total_cycles"] = r6(e.total_cycles);
    j["factory"] = e.factory.label;
    j["factory_performance"] = to_json(e.factory.performance);
    j["meets_magic_budget"] = e.meets_magic_budget;
    j["n_factories"] = e.n_factories;
    j["storage_patches_per_factory"] = e.factory.storage_patches;
    j["arena_qubits"] = e.arena_qubits;
    j["factory_qubits"] = e.factory_qubits;
    j["total_qubits"] = e.total_qubits;
    return j;
}

std::string
csv_header()
{
    return "protocol,d_X,d_Z,h,p_out,qubits,cycles,p_accept,spacetime,provenance";
}

std::string
csv_row(const ParetoPoint& p)
{
    std::string s = point_protocol(p) + ",";
    if (p.config)
        s += std::to_string(p.config->params.d_x) + "," + std::to_string(p.config->params.d_z) + "," +
             std::to_string(p.config->params.h) + ",";
    else
        s += ",,,";
    s += format_sci(p.p_out) + "," + std::to_string(p.performance.physical_qubits) + "," +
         std::to_string(p.performance.cycles_per_output) + "," + format_sci(p.performance.p_accept) + "," +
         format_sci(p.spacetime) + "," + p.provenance;
    return s;
}

}  // namespace distill
