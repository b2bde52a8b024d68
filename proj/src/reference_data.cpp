#include "distill/reference_data.hpp"

#include <json.hpp>

#include <stdexcept>

namespace distill
{

namespace detail
{
std::string_view reference_dataset_json();
}

namespace
{

ReferenceRow
row_from_json(const nlohmann::json& j)
{
    ReferenceRow r;
    r.id = j.at("id").get<std::string>();
    r.protocol = j.at("protocol").get<std::string>();
    r.p_phys = j.at("p_phys").get<double>();
    r.cycles = j.at("cycles").get<long>();
    r.qubits = j.at("qubits").get<std::int64_t>();
    r.p_out = j.at("p_out").get<double>();
    r.outputs_per_run = j.at("outputs_per_run").get<int>();
    r.published_factories = j.at("published_factories").get<int>();
    if (r.cycles <= 0 || r.qubits <= 0 || r.outputs_per_run <= 0)
        throw std::invalid_argument("reference row " + r.id + ": counts must be positive");
    if (!(r.p_out >= 0.0 && r.p_out <= 1.0))
        throw std::invalid_argument("reference row " + r.id + ": p_out outside [0, 1]");
    return r;
}

}  // namespace

ReferenceDataset
parse_reference_dataset(std::string_view json_text)
{
    const auto j = nlohmann::json::parse(json_text);
    ReferenceDataset ds;
    ds.name = j.at("dataset").get<std::string>();
    ds.version = j.at("version").get<int>();
    ds.description = j.value("description", "");
    for (const auto& r : j.at("rows"))
        ds.rows.push_back(row_from_json(r));
    return ds;
}

std::string
serialize_reference_dataset(const ReferenceDataset& ds)
{
    nlohmann::ordered_json j;
    j["dataset"] = ds.name;
    j["version"] = ds.version;
    j["description"] = ds.description;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : ds.rows) {
        nlohmann::ordered_json o;
        o["id"] = r.id;
        o["protocol"] = r.protocol;
        o["p_phys"] = r.p_phys;
        o["cycles"] = r.cycles;
        o["qubits"] = r.qubits;
        o["p_out"] = r.p_out;
        o["outputs_per_run"] = r.outputs_per_run;
        o["published_factories"] = r.published_factories;
        j["rows"].push_back(o);
    }
    return j.dump(2);
}

const ReferenceDataset&
bundled_reference_dataset()
{
    static const ReferenceDataset ds = parse_reference_dataset(detail::reference_dataset_json());
    return ds;
}

const ReferenceRow&
reference_row(std::string_view id)
{
    for (const auto& r : bundled_reference_dataset().rows)
        if (r.id == id)
            return r;
    throw std::invalid_argument("unknown reference row '" + std::string(id) + "'");
}

FactoryPerformance
reference_factory(const ReferenceRow& row)
{
    FactoryPerformance f;
    f.physical_qubits = row.qubits;
    f.cycles_per_output = row.cycles;
    f.outputs_per_run = row.protocol == "15to1x20to4" ? 4 : 1;
    f.p_out = row.p_out;
    f.p_accept = 1.0;
    return f;
}

}  // namespace distill
