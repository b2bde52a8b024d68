#pragma once

#include "distill/error_budget.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace distill
{

struct ReferenceRow
{
    std::string id;
    std::string protocol;
    double p_phys = 0.0;
    long cycles = 0;
    std::int64_t qubits = 0;
    double p_out = 0.0;
    int outputs_per_run = 1;
    int published_factories = 0;

    bool operator==(const ReferenceRow&) const = default;
};

struct ReferenceDataset
{
    std::string name;
    int version = 0;
    std::string description;
    std::vector<ReferenceRow> rows;
};

ReferenceDataset parse_reference_dataset(std::string_view json_text);
std::string serialize_reference_dataset(const ReferenceDataset& ds);

// The dataset compiled into the library.
const ReferenceDataset& bundled_reference_dataset();
const ReferenceRow& reference_row(std::string_view id);

FactoryPerformance reference_factory(const ReferenceRow& row);

}  // namespace distill
