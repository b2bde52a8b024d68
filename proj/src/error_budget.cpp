#include "distill/error_budget.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace distill
{

std::string
to_string(FaultSource s)
{
    switch (s) {
    case FaultSource::rotation_error:
        return "rotation-error";
    case FaultSource::measurement_error:
        return "measurement-error";
    case FaultSource::injection_error:
        return "injection-error";
    case FaultSource::idle_x_data:
        return "idle-X-data";
    case FaultSource::idle_z_qubit1:
        return "idle-Z-qubit1";
    case FaultSource::idle_z_qubits2to5:
        return "idle-Z-qubits2to5";
    case FaultSource::ancilla_chain_undetectable:
        return "ancilla-chain-undetectable";
    case FaultSource::ancilla_chain_combinable:
        return "ancilla-chain-combinable";
    case FaultSource::ancilla_chain_detectable:
        return "ancilla-chain-detectable";
    }
    return "?";
}

std::string
to_string(Detectability d)
{
    switch (d) {
    case Detectability::undetected:
        return "undetected";
    case Detectability::detected_single:
        return "detected-single";
    case Detectability::pair_combinable:
        return "pair-combinable";
    }
    return "?";
}

std::map<int, std::int64_t>
enumerate_undetected_patterns(int max_weight)
{
    if (max_weight < 0 || max_weight > 15)
        throw std::invalid_argument("max_weight must lie in [0, 15]");
    const auto& axes = rotation_axes();
    const int n = static_cast<int>(axes.size());
    std::map<int, std::int64_t> out;
    for (int w = 1; w <= max_weight; w++)
        out[w] = 0;
    if (max_weight == 0)
        return out;

    // Gosper's hack over each weight
    for (int w = 1; w <= max_weight; w++) {
        std::uint32_t s = (1u << w) - 1;
        while (s < (1u << n)) {
            unsigned prod = 0;
            for (std::uint32_t t = s; t; t &= t - 1)
                prod ^= axes[std::countr_zero(t)].mask;
            if (prod == Z1_MASK)
                out[w]++;
            const std::uint32_t c = s & (~s + 1);
            const std::uint32_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return out;
}

namespace
{

struct Ledger
{
    std::vector<FaultClass> classes;

    void add(FaultSource s, Detectability d, int mult, double prob, std::string where = "")
    {
        classes.push_back({s, d, mult, std::clamp(prob, 0.0, 1.0), std::move(where)});
    }
};

// Chain classes for one operation: one entry per gap between consecutive
// cells along its ancilla region.
void
add_chain_classes(Ledger& L, Protocol proto, const RotationOp& op, int round, double q)
{
    const auto order = participant_order(proto, op);
    unsigned prefix = 0;
    bool past_magic = false;
    for (std::size_t k = 1; k < order.size(); k++) {
        const int cell = order[k - 1];
        if (cell == MAGIC_CELL)
            past_magic = true;
        else
            prefix ^= 1u << (cell - 1);
        // a chain that encloses the magic cell is equivalent to its complement
        const unsigned m = past_magic ? (op.axis.mask ^ prefix) : prefix;
        const std::string where = "round " + std::to_string(round) + " " + op.axis.label() + " gap " + std::to_string(k);
        if (m == Z1_MASK)
            L.add(FaultSource::ancilla_chain_undetectable, Detectability::undetected, 1, q, where);
        else if (std::popcount(m) % 2 == 0)
            L.add(FaultSource::ancilla_chain_combinable, Detectability::pair_combinable, 1, q, where);
        else
            L.add(FaultSource::ancilla_chain_detectable, Detectability::detected_single, 1, q, where);
    }
}

}  // namespace

FactoryAssessment
assess_factory(const FactoryConfig& cfg, PhysicalErrorRate p, ErrorModelOptions opts)
{
    validate_config(cfg);
    FactoryAssessment A;
    A.config = cfg;
    const auto& dp = cfg.params;
    const long T = duration(cfg);
    double first_accept = 1.0;

    double p_r = 0.0;
    int op_cycles = dp.d_z;
    switch (cfg.protocol) {
    case Protocol::fifteen_to_one:
        p_r = p.value();
        op_cycles = dp.d_m;
        break;
    case Protocol::zero_plus_one:
        p_r = zero_level_output_error(p);
        break;
    case Protocol::fifteen_squared: {
        const FactoryConfig first{Protocol::fifteen_to_one, *cfg.first_level, std::nullopt};
        A.first_level = factory_performance(first, p, opts);
        first_accept = A.first_level->p_accept;
        A.first_level_factories = first_level_factory_count(cfg, first_accept);
        p_r = A.first_level->p_out;
        break;
    }
    }
    A.rotation_error = p_r;

    const auto patterns = enumerate_undetected_patterns(3);
    A.leading_term = static_cast<double>(patterns.at(3)) * p_r * p_r * p_r;

    Ledger L;
    L.add(FaultSource::rotation_error, Detectability::detected_single, 15, p_r);
    if (opts.clifford_faults) {
        const int n_ops = static_cast<int>(rotation_axes().size());
        if (cfg.protocol == Protocol::fifteen_to_one)
            L.add(FaultSource::measurement_error, Detectability::detected_single, n_ops,
                  logical_error_rate(Distance(dp.d_m), p));
        else
            L.add(FaultSource::injection_error, Detectability::detected_single, n_ops,
                  logical_error_rate(Distance(dp.d_z), p));

        L.add(FaultSource::idle_z_qubit1, Detectability::undetected, 1, idle_error(T, Distance(dp.d_x), p));
        L.add(FaultSource::idle_x_data, Detectability::undetected, 5, idle_error(T, Distance(dp.d_x), p));
        L.add(FaultSource::idle_z_qubits2to5, Detectability::detected_single, 4, idle_error(T, Distance(dp.d_z), p));

        // chain crossing a region of height h and width ~d_Z for one operation
        const double hh = dp.h;
        const double q = std::min(1.0, (dp.d_z / hh) * (op_cycles / hh) * logical_error_rate(Distance(dp.h), p));
        const auto sched = build_schedule(cfg.protocol);
        for (std::size_t r = 0; r < sched.rounds.size(); r++)
            for (const auto& op : sched.rounds[r])
                add_chain_classes(L, cfg.protocol, op, static_cast<int>(r) + 1, q);
    }

    long double p_out = A.leading_term;
    long double log_accept = 0.0L;
    for (const auto& c : L.classes) {
        const long double m = c.multiplicity;
        switch (c.detectability) {
        case Detectability::undetected:
            p_out += m * c.probability;
            break;
        case Detectability::pair_combinable:
            p_out += m * c.probability * static_cast<long double>(p_r);
            log_accept += m * std::log1p(-static_cast<long double>(c.probability));
            break;
        case Detectability::detected_single:
            log_accept += m * std::log1p(-static_cast<long double>(c.probability));
            break;
        }
    }
    A.ledger = std::move(L.classes);

    auto& perf = A.performance;
    perf.physical_qubits = footprint(cfg, first_accept);
    perf.cycles_per_output = T;
    perf.outputs_per_run = 1;
    perf.p_out = static_cast<double>(std::min<long double>(p_out, 1.0L));
    perf.p_accept = static_cast<double>(std::exp(log_accept));
    return A;
}

FactoryPerformance
factory_performance(const FactoryConfig& cfg, PhysicalErrorRate p, ErrorModelOptions opts)
{
    return assess_factory(cfg, p, opts).performance;
}

}  // namespace distill
