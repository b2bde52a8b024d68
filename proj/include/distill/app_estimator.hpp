#pragma once

#include "distill/error_budget.hpp"
#include "distill/frontier.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace distill
{

struct Scenario
{
    double M = 1e6;
    double delta = 1e-11;
    double p_phys = 1e-4;
    int sites_x = 12;
    int sites_y = 12;
    int arena_width = 24;
    int arena_height = 19;
    int pauli_terms = 264;
    int parallel_rotations = 12;
    double budget_clifford = 0.005;
    double budget_magic = 0.005;
    int feed_sides = 2;  // magic states enter the arena from the left and the right

    int arena_patches() const { return arena_width * arena_height; }
};

Scenario scenario_low_noise();   // M=1e6, delta=1e-11, p=1e-4
Scenario scenario_high_noise();  // M=1e4, delta=1e-9,  p=1e-3

// Throws std::invalid_argument on the first broken invariant.
void validate_scenario(const Scenario& s);

enum class DemandMode
{
    expected,       // doubled T-count spread over the run
    deterministic,  // every attempt slot draws a whole synthesis sequence
};

std::string to_string(DemandMode m);
DemandMode parse_demand_mode(const std::string& name);

struct FactoryChoice
{
    std::string label;
    FactoryPerformance performance;
    int storage_patches = 1;
};

struct AppEstimate
{
    int d = 0;
    double t_count = 0.0;
    double magic_budget = 0.0;
    double total_cycles = 0.0;
    FactoryChoice factory;
    bool meets_magic_budget = false;
    int n_factories = 0;
    std::int64_t arena_qubits = 0;
    std::int64_t factory_qubits = 0;  // all factories including storage
    std::int64_t total_qubits = 0;
};

double synthesis_count(double delta);
double t_count(double M, double delta);
double standard_cycles(const Scenario& s, int d);
int select_distance(const Scenario& s);
double magic_budget(const Scenario& s);

// feed_sides splits the parallel consumers into equal groups each fed by
// its own bank of factories.
int factory_count(const FactoryPerformance& perf, int d, int parallel, int feed_sides = 1);
int factory_count_for_rate(const FactoryPerformance& perf, double states_per_cycle, int feed_sides = 1);

std::int64_t total_spatial_cost(const Scenario& s, int d, const FactoryPerformance& perf, int n_factories,
                                int storage_patches);

double injection_variant_cycles(const Scenario& s, int d);
double injection_variant_demand_rate(const Scenario& s, int d, DemandMode mode);

AppEstimate estimate(const Scenario& s, const FactoryChoice& f);
AppEstimate estimate_injection_variant(const Scenario& s, const FactoryChoice& f, DemandMode mode);

// Lowest total qubit count among candidates meeting the magic-state budget.
// Throws InfeasibleError when none qualifies.
AppEstimate best_modeled_estimate(const Scenario& s, const std::vector<ParetoPoint>& candidates,
                                  int storage_patches = 1);

}  // namespace distill
