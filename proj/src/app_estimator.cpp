#include "distill/app_estimator.hpp"

#include "distill/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace distill
{

Scenario
scenario_low_noise()
{
    return Scenario{};
}

Scenario
scenario_high_noise()
{
    Scenario s;
    s.M = 1e4;
    s.delta = 1e-9;
    s.p_phys = 1e-3;
    return s;
}

void
validate_scenario(const Scenario& s)
{
    auto fail = [](const std::string& m) { throw std::invalid_argument("scenario: " + m); };
    if (!(s.M >= 1.0))
        fail("M must be >= 1");
    if (!(s.delta > 0.0 && s.delta < 1.0))
        fail("delta must lie in (0, 1)");
    PhysicalErrorRate{s.p_phys};
    if (s.sites_x < 1 || s.sites_y < 1 || s.arena_width < 1 || s.arena_height < 1)
        fail("grid and arena dimensions must be positive");
    if (s.arena_patches() < s.sites_x * s.sites_y)
        fail("arena has fewer patches than sites");
    if (s.pauli_terms != s.sites_x * (s.sites_y - 1) + (s.sites_x - 1) * s.sites_y)
        fail("pauli_terms must equal the number of neighbouring site pairs");
    if (s.parallel_rotations < 1)
        fail("parallel_rotations must be >= 1");
    if (s.feed_sides < 1 || s.parallel_rotations % s.feed_sides != 0)
        fail("feed_sides must divide parallel_rotations");
    if (!(s.budget_clifford > 0.0 && s.budget_clifford < 1.0))
        fail("budget_clifford must lie in (0, 1)");
    if (!(s.budget_magic >= 0.0 && s.budget_magic < 1.0))
        fail("budget_magic must lie in [0, 1)");
}

std::string
to_string(DemandMode m)
{
    return m == DemandMode::expected ? "expected" : "deterministic";
}

DemandMode
parse_demand_mode(const std::string& name)
{
    if (name == "expected")
        return DemandMode::expected;
    if (name == "deterministic")
        return DemandMode::deterministic;
    throw std::invalid_argument("unknown demand mode '" + name + "'");
}

////////////////////////////////////////////////////////////

double
synthesis_count(double delta)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1)");
    return -0.53 * std::log2(delta) + 5.0;
}

double
t_count(double M, double delta)
{
    if (!(M >= 1.0))
        throw std::invalid_argument("M must be >= 1");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("delta must lie in (0, 1)");
    return (-140.0 * std::log2(delta) + 1320.0) * M;
}

double
standard_cycles(const Scenario& s, int d)
{
    return t_count(s.M, s.delta) / s.parallel_rotations * d;
}

int
select_distance(const Scenario& s)
{
    validate_scenario(s);
    const PhysicalErrorRate p(s.p_phys);
    for (int d = 1; d <= 99; d += 2) {
        const double err = s.arena_patches() * standard_cycles(s, d) * logical_error_rate(Distance(d), p);
        if (err < s.budget_clifford)
            return d;
    }
    throw InfeasibleError("no odd distance up to 99 keeps the Clifford error below the budget");
}

double
magic_budget(const Scenario& s)
{
    return s.budget_magic / t_count(s.M, s.delta);
}

int
factory_count_for_rate(const FactoryPerformance& perf, double states_per_cycle, int feed_sides)
{
    if (!(perf.p_accept > 0.0))
        throw std::invalid_argument("p_accept = 0: no factory count can supply the demand");
    if (feed_sides < 1)
        throw std::invalid_argument("feed_sides must be >= 1");
    const double per_side = states_per_cycle / feed_sides * static_cast<double>(perf.cycles_per_output) /
                            (perf.outputs_per_run * perf.p_accept);
    // guard against 48.000000000001 from inexact division
    return feed_sides * static_cast<int>(std::ceil(per_side * (1.0 - 1e-12)));
}

int
factory_count(const FactoryPerformance& perf, int d, int parallel, int feed_sides)
{
    if (d < 1 || parallel < 1)
        throw std::invalid_argument("d and parallel must be >= 1");
    return factory_count_for_rate(perf, static_cast<double>(parallel) / d, feed_sides);
}

std::int64_t
total_spatial_cost(const Scenario& s, int d, const FactoryPerformance& perf, int n_factories, int storage_patches)
{
    const std::int64_t patch = patch_qubits(Distance(d), Distance(d));
    return s.arena_patches() * patch + n_factories * (perf.physical_qubits + storage_patches * patch);
}

double
injection_variant_cycles(const Scenario& s, int d)
{
    return static_cast<double>(s.pauli_terms) * 2.0 / s.parallel_rotations * s.M * d;
}

double
injection_variant_demand_rate(const Scenario& s, int d, DemandMode mode)
{
    if (mode == DemandMode::expected)
        return 2.0 * t_count(s.M, s.delta) / injection_variant_cycles(s, d);
    // one attempt per slot every d cycles, each drawing a whole sequence
    return s.parallel_rotations * std::ceil(synthesis_count(s.delta)) / d;
}

namespace
{

AppEstimate
assemble(const Scenario& s, const FactoryChoice& f, int d, int n, double cycles)
{
    AppEstimate e;
    e.d = d;
    e.t_count = t_count(s.M, s.delta);
    e.magic_budget = magic_budget(s);
    e.total_cycles = cycles;
    e.factory = f;
    e.meets_magic_budget = f.performance.p_out <= e.magic_budget;
    e.n_factories = n;
    e.total_qubits = total_spatial_cost(s, d, f.performance, n, f.storage_patches);
    e.arena_qubits = total_spatial_cost(s, d, f.performance, 0, 0);
    e.factory_qubits = e.total_qubits - e.arena_qubits;
    return e;
}

}  // namespace

AppEstimate
estimate(const Scenario& s, const FactoryChoice& f)
{
    const int d = select_distance(s);
    const int n = factory_count(f.performance, d, s.parallel_rotations, s.feed_sides);
    return assemble(s, f, d, n, standard_cycles(s, d));
}

AppEstimate
estimate_injection_variant(const Scenario& s, const FactoryChoice& f, DemandMode mode)
{
    const int d = select_distance(s);
    const int n = factory_count_for_rate(f.performance, injection_variant_demand_rate(s, d, mode), s.feed_sides);
    return assemble(s, f, d, n, injection_variant_cycles(s, d));
}

AppEstimate
best_modeled_estimate(const Scenario& s, const std::vector<ParetoPoint>& candidates, int storage_patches)
{
    const double budget = magic_budget(s);
    std::optional<AppEstimate> best;
    double best_st = 0.0;
    for (const auto& c : candidates) {
        if (c.p_out > budget)
            continue;
        auto e = estimate(s, FactoryChoice{c.provenance, c.performance, storage_patches});
        if (!best || e.total_qubits < best->total_qubits ||
            (e.total_qubits == best->total_qubits && c.spacetime < best_st)) {
            best = std::move(e);
            best_st = c.spacetime;
        }
    }
    if (!best)
        throw InfeasibleError("no candidate factory meets the magic-state error budget");
    return *best;
}

}  // namespace distill
