#include "distill/frontier.hpp"

#include "distill/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace distill
{

double
spacetime_cost(const FactoryPerformance& perf)
{
    if (!(perf.p_accept > 0.0))
        throw std::invalid_argument("p_accept = 0: spacetime cost is undefined");
    if (perf.outputs_per_run < 1)
        throw std::invalid_argument("outputs_per_run must be >= 1");
    return static_cast<double>(perf.physical_qubits) * static_cast<double>(perf.cycles_per_output) /
           (perf.outputs_per_run * perf.p_accept);
}

std::string
provenance(const FactoryConfig& cfg)
{
    const auto& p = cfg.params;
    std::string s = to_string(cfg.protocol) + " d_X=" + std::to_string(p.d_x) + " d_Z=" + std::to_string(p.d_z) +
                    " h=" + std::to_string(p.h);
    if (cfg.first_level)
        s += " first d_X=" + std::to_string(cfg.first_level->d_x) + " d_Z=" + std::to_string(cfg.first_level->d_z);
    return s;
}

ParetoPoint
make_point(const FactoryConfig& cfg, const FactoryPerformance& perf)
{
    return ParetoPoint{perf.p_out, spacetime_cost(perf), provenance(cfg), cfg, "", perf};
}

ParetoPoint
make_point(const ReferenceRow& row)
{
    const auto perf = reference_factory(row);
    return ParetoPoint{perf.p_out, spacetime_cost(perf), "reference " + row.id, std::nullopt, row.id, perf};
}

std::vector<FactoryConfig>
sweep_grid(const ProtocolSweep& ps)
{
    std::vector<FactoryConfig> out;
    const bool free_h = ps.protocol == Protocol::zero_plus_one;
    const bool two_level = ps.protocol == Protocol::fifteen_squared;
    const IntRange one{0, 0};
    const IntRange h = free_h ? ps.h : one;
    const IntRange fz = two_level ? ps.first_d_z : one;
    const IntRange fx = two_level ? ps.first_d_x : one;

    for (int dz = ps.d_z.lo; dz <= ps.d_z.hi; dz++)
        for (int dx = ps.d_x.lo; dx <= ps.d_x.hi; dx++)
            for (int hh = h.lo; hh <= h.hi; hh++)
                for (int z1 = fz.lo; z1 <= fz.hi; z1++)
                    for (int x1 = fx.lo; x1 <= fx.hi; x1++) {
                        FactoryConfig c;
                        c.protocol = ps.protocol;
                        c.params = make_params(ps.protocol, dx, dz, free_h ? std::optional<int>(hh) : std::nullopt);
                        if (two_level)
                            c.first_level = make_params(Protocol::fifteen_to_one, x1, z1);
                        out.push_back(c);
                    }
    return out;
}

SweepResult
sweep(const SweepConfig& cfg, unsigned workers)
{
    const PhysicalErrorRate p(cfg.p_phys);
    std::vector<FactoryConfig> grid;
    for (const auto& ps : cfg.protocols) {
        auto g = sweep_grid(ps);
        grid.insert(grid.end(), g.begin(), g.end());
    }
    if (grid.empty())
        throw std::invalid_argument("sweep grid is empty");

    struct Slot
    {
        std::optional<ParetoPoint> point;
        std::string reason;
    };
    std::vector<Slot> slots(grid.size());
    detail::parallel_chunks(grid.size(), 64, workers, [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t) {
        for (std::uint64_t i = lo; i < hi; i++) {
            try {
                validate_config(grid[i]);
                slots[i].point = make_point(grid[i], factory_performance(grid[i], p, cfg.options));
            } catch (const std::invalid_argument& e) {
                slots[i].reason = e.what();
            }
        }
    });

    SweepResult r;
    for (std::size_t i = 0; i < grid.size(); i++) {
        if (slots[i].point)
            r.points.push_back(std::move(*slots[i].point));
        else
            r.invalid.push_back({grid[i], slots[i].reason});
    }
    if (r.points.empty())
        throw std::invalid_argument("sweep grid contains no valid configuration");
    return r;
}

std::vector<ParetoPoint>
pareto_front(std::vector<ParetoPoint> points)
{
    std::sort(points.begin(), points.end(), [](const ParetoPoint& a, const ParetoPoint& b) {
        if (a.p_out != b.p_out)
            return a.p_out < b.p_out;
        if (a.spacetime != b.spacetime)
            return a.spacetime < b.spacetime;
        return a.provenance < b.provenance;
    });
    std::vector<ParetoPoint> front;
    double best = std::numeric_limits<double>::infinity();
    for (auto& pt : points) {
        if (pt.spacetime < best) {
            best = pt.spacetime;
            front.push_back(std::move(pt));
        }
    }
    return front;
}

namespace
{

std::optional<double>
cheapest_within(const std::vector<ParetoPoint>& f, double level)
{
    std::optional<double> best;
    for (const auto& pt : f)
        if (pt.p_out <= level && (!best || pt.spacetime < *best))
            best = pt.spacetime;
    return best;
}

}  // namespace

Reduction
reduction_between(const std::vector<ParetoPoint>& a, const std::vector<ParetoPoint>& b, double lo, double hi)
{
    if (!(lo <= hi))
        throw std::invalid_argument("error window must satisfy lo <= hi");
    std::set<double> levels{hi};
    for (const auto* f : {&a, &b})
        for (const auto& pt : *f)
            if (pt.p_out >= lo && pt.p_out <= hi)
                levels.insert(pt.p_out);

    Reduction r;
    bool any = false;
    for (double e : levels) {
        const auto ca = cheapest_within(a, e);
        const auto cb = cheapest_within(b, e);
        if (!ca || !cb)
            continue;
        const double v = 1.0 - *ca / *cb;
        r.levels_compared++;
        if (!any || v < r.value) {
            r.value = v;
            r.level = e;
            r.cost_a = *ca;
            r.cost_b = *cb;
            any = true;
        }
    }
    if (!any)
        throw InfeasibleError("no error level in the window is reachable by both frontiers");
    return r;
}

}  // namespace distill
