#pragma once

#include "distill/code_model.hpp"
#include "distill/protocol_catalog.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace distill
{

enum class FaultSource
{
    rotation_error,
    measurement_error,
    injection_error,
    idle_x_data,
    idle_z_qubit1,
    idle_z_qubits2to5,
    ancilla_chain_undetectable,
    ancilla_chain_combinable,
    ancilla_chain_detectable,
};

enum class Detectability
{
    undetected,
    detected_single,
    pair_combinable,
};

std::string to_string(FaultSource s);
std::string to_string(Detectability d);

struct FaultClass
{
    FaultSource source;
    Detectability detectability;
    int multiplicity = 1;
    double probability = 0.0;  // per instance
    std::string where;
};

struct FactoryPerformance
{
    std::int64_t physical_qubits = 0;
    long cycles_per_output = 0;
    int outputs_per_run = 1;
    double p_out = 0.0;
    double p_accept = 1.0;
};

struct ErrorModelOptions
{
    bool clifford_faults = true;
};

struct FactoryAssessment
{
    FactoryConfig config;
    FactoryPerformance performance;
    double rotation_error = 0.0;
    double leading_term = 0.0;  // patterns(3) * p_r^3
    std::vector<FaultClass> ledger;
    std::optional<FactoryPerformance> first_level;
    int first_level_factories = 0;
};

// weight -> number of rotation-error patterns that pass every check and flip the output.
std::map<int, std::int64_t> enumerate_undetected_patterns(int max_weight);

FactoryAssessment assess_factory(const FactoryConfig& cfg, PhysicalErrorRate p, ErrorModelOptions opts = {});
FactoryPerformance factory_performance(const FactoryConfig& cfg, PhysicalErrorRate p, ErrorModelOptions opts = {});

}  // namespace distill
