#pragma once

#include "distill/error_budget.hpp"
#include "distill/reference_data.hpp"

#include <optional>
#include <string>
#include <vector>

namespace distill
{

struct IntRange
{
    int lo = 1;
    int hi = 1;
};

struct ProtocolSweep
{
    Protocol protocol = Protocol::zero_plus_one;
    IntRange d_x;
    IntRange d_z;
    IntRange h;          // 0plus1 only; pinned to d_X otherwise
    IntRange first_d_x;  // 15to1x15to1 only
    IntRange first_d_z;
};

struct SweepConfig
{
    double p_phys = 1e-4;
    std::vector<ProtocolSweep> protocols;
    ErrorModelOptions options;
};

struct ParetoPoint
{
    double p_out = 0.0;
    double spacetime = 0.0;
    std::string provenance;
    std::optional<FactoryConfig> config;  // empty for reference rows
    std::string reference_id;
    FactoryPerformance performance;
};

struct InvalidCombo
{
    FactoryConfig config;
    std::string reason;
};

struct SweepResult
{
    std::vector<ParetoPoint> points;
    std::vector<InvalidCombo> invalid;
};

struct Reduction
{
    double value = 0.0;   // minimum of 1 - cost_a / cost_b
    double level = 0.0;   // error level where the minimum occurs
    double cost_a = 0.0;
    double cost_b = 0.0;
    int levels_compared = 0;
};

double spacetime_cost(const FactoryPerformance& perf);

std::string provenance(const FactoryConfig& cfg);
ParetoPoint make_point(const FactoryConfig& cfg, const FactoryPerformance& perf);
ParetoPoint make_point(const ReferenceRow& row);

// Grid in deterministic order: protocol, d_Z, d_X, h, first-level d_Z, first-level d_X.
std::vector<FactoryConfig> sweep_grid(const ProtocolSweep& ps);

SweepResult sweep(const SweepConfig& cfg, unsigned workers = 0);

std::vector<ParetoPoint> pareto_front(std::vector<ParetoPoint> points);

// Throws InfeasibleError when no error level in the window is covered by both.
Reduction reduction_between(const std::vector<ParetoPoint>& a, const std::vector<ParetoPoint>& b, double lo,
                            double hi);

}  // namespace distill
