#include "distill/protocol_catalog.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace distill
{

std::string
to_string(Protocol p)
{
    switch (p) {
    case Protocol::fifteen_to_one:
        return "15to1";
    case Protocol::fifteen_squared:
        return "15to1x15to1";
    case Protocol::zero_plus_one:
        return "0plus1";
    }
    return "?";
}

Protocol
parse_protocol(std::string_view name)
{
    if (name == "15to1")
        return Protocol::fifteen_to_one;
    if (name == "15to1x15to1")
        return Protocol::fifteen_squared;
    if (name == "0plus1")
        return Protocol::zero_plus_one;
    throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

std::string
to_string(Mechanism m)
{
    switch (m) {
    case Mechanism::faulty_t_measurement:
        return "faulty-T-measurement";
    case Mechanism::injection_autocorrect:
        return "injection-autocorrect";
    case Mechanism::teleport_target:
        return "teleport-target";
    }
    return "?";
}

std::string
to_string(AncillaRegion r)
{
    switch (r) {
    case AncillaRegion::top:
        return "top-ancilla";
    case AncillaRegion::bottom:
        return "bottom-ancilla";
    case AncillaRegion::none:
        return "none";
    }
    return "?";
}

std::string
to_string(RegionRole r)
{
    switch (r) {
    case RegionRole::data_qubit:
        return "data-qubit";
    case RegionRole::ancilla_region:
        return "ancilla-region";
    case RegionRole::autocorrect_block:
        return "autocorrect-block";
    case RegionRole::zero_level_block:
        return "zero-level-block";
    case RegionRole::faulty_t_strip:
        return "faulty-t-strip";
    case RegionRole::transfer_bus:
        return "transfer-bus";
    }
    return "?";
}

////////////////////////////////////////////////////////////

PauliAxis
PauliAxis::of(std::initializer_list<int> qubits)
{
    PauliAxis a;
    for (int q : qubits)
        a.mask |= static_cast<std::uint8_t>(1u << (q - 1));
    return a;
}

int
PauliAxis::weight() const
{
    return std::popcount(static_cast<unsigned>(mask));
}

std::string
PauliAxis::label() const
{
    std::string s;
    for (int q = 1; q <= 5; q++)
        if (acts_on(q))
            s += "Z" + std::to_string(q);
    return s.empty() ? "I" : s;
}

const std::vector<PauliAxis>&
rotation_axes()
{
    static const std::vector<PauliAxis> axes = [] {
        std::vector<PauliAxis> v;
        for (unsigned m = 2; m < 32; m++) {
            PauliAxis a{static_cast<std::uint8_t>(m)};
            if (a.in_gamma())
                v.push_back(a);
        }
        return v;
    }();
    return axes;
}

////////////////////////////////////////////////////////////

namespace
{

RotationOp
op(std::initializer_list<int> qubits, Mechanism m, AncillaRegion r)
{
    return RotationOp{PauliAxis::of(qubits), m, r};
}

RoundSchedule
schedule_15to1()
{
    const auto T = Mechanism::faulty_t_measurement;
    const auto top = AncillaRegion::top;
    const auto bot = AncillaRegion::bottom;
    const auto none = AncillaRegion::none;
    RoundSchedule s{Protocol::fifteen_to_one, {}};
    s.rounds = {
        {op({2, 3, 4}, T, bot), op({2}, T, none), op({3}, T, none), op({4}, T, none)},
        {op({1, 2, 3}, T, top), op({2, 3, 5}, T, bot)},
        {op({1, 2, 4}, T, top), op({2, 4, 5}, T, bot), op({5}, T, none)},
        {op({1, 2, 5}, T, top), op({3, 4, 5}, T, bot)},
        {op({1, 3, 4}, T, top), op({1, 3, 5}, T, bot)},
        {op({1, 4, 5}, T, top), op({1, 2, 3, 4, 5}, T, bot)},
    };
    return s;
}

RoundSchedule
schedule_15squared()
{
    // qubit-1 axes and Z5 on top, the rest on the bottom; the 8th round
    // overlaps the first round of the next run
    const auto I = Mechanism::injection_autocorrect;
    const auto top = AncillaRegion::top;
    const auto bot = AncillaRegion::bottom;
    RoundSchedule s{Protocol::fifteen_squared, {}};
    s.rounds = {
        {op({1, 2, 3}, I, top), op({2}, I, bot)},
        {op({1, 2, 4}, I, top), op({3}, I, bot)},
        {op({1, 2, 5}, I, top), op({4}, I, bot)},
        {op({1, 3, 4}, I, top), op({2, 3, 4}, I, bot)},
        {op({1, 3, 5}, I, top), op({2, 3, 5}, I, bot)},
        {op({1, 4, 5}, I, top), op({2, 4, 5}, I, bot)},
        {op({1, 2, 3, 4, 5}, I, top), op({3, 4, 5}, I, bot)},
        {op({5}, I, top)},
    };
    return s;
}

RoundSchedule
schedule_0plus1()
{
    const auto I = Mechanism::injection_autocorrect;
    const auto top = AncillaRegion::top;
    const auto bot = AncillaRegion::bottom;
    RoundSchedule s{Protocol::zero_plus_one, {}};
    s.rounds = {
        {op({1, 3, 4}, I, top), op({4}, I, bot), op({5}, Mechanism::teleport_target, AncillaRegion::none)},
        {op({1, 2, 5}, I, top), op({3, 4, 5}, I, bot)},
        {op({1, 3, 5}, I, top), op({2, 4, 5}, I, bot)},
        {op({1, 4, 5}, I, top), op({2, 3, 5}, I, bot)},
        {op({1, 2, 3, 4, 5}, I, top), op({2, 3, 4}, I, bot)},
        {op({1, 2, 3}, I, top), op({2}, I, bot)},
        {op({1, 2, 4}, I, top), op({3}, I, bot)},
    };
    return s;
}

bool
mechanism_allowed(Protocol p, Mechanism m)
{
    switch (p) {
    case Protocol::fifteen_to_one:
        return m == Mechanism::faulty_t_measurement;
    case Protocol::fifteen_squared:
        return m == Mechanism::injection_autocorrect;
    case Protocol::zero_plus_one:
        return m == Mechanism::injection_autocorrect || m == Mechanism::teleport_target;
    }
    return false;
}

}  // namespace

RoundSchedule
build_schedule(Protocol p)
{
    switch (p) {
    case Protocol::fifteen_to_one:
        return schedule_15to1();
    case Protocol::fifteen_squared:
        return schedule_15squared();
    case Protocol::zero_plus_one:
        return schedule_0plus1();
    }
    throw std::invalid_argument("unknown protocol");
}

std::vector<Violation>
validate_schedule(const RoundSchedule& s)
{
    std::vector<Violation> out;
    std::map<std::uint8_t, int> seen;  // mask -> round of first use

    for (std::size_t ri = 0; ri < s.rounds.size(); ri++) {
        const int r = static_cast<int>(ri) + 1;
        const auto& round = s.rounds[ri];
        std::map<AncillaRegion, int> region_use;

        for (const auto& o : round) {
            const std::string name = o.axis.label();
            if (!o.axis.in_gamma() || o.axis.mask == Z1_MASK) {
                out.push_back({r, "invalid-axis", name + " is not in Gamma minus Z1"});
                continue;
            }
            if (auto it = seen.find(o.axis.mask); it != seen.end())
                out.push_back({r, "duplicate-axis", name + " already used in round " + std::to_string(it->second)});
            else
                seen[o.axis.mask] = r;

            if (o.region != AncillaRegion::none && ++region_use[o.region] == 2)
                out.push_back({r, "region-conflict", to_string(o.region) + " used by more than one operation"});
            if (o.region == AncillaRegion::none && o.axis.weight() > 1 && o.mechanism != Mechanism::teleport_target)
                out.push_back({r, "missing-region", name + " spans several qubits but has no ancilla region"});
            if (!mechanism_allowed(s.protocol, o.mechanism))
                out.push_back({r, "mechanism", "mechanism " + to_string(o.mechanism) + " not available in " +
                                                   to_string(s.protocol)});
            if (s.protocol == Protocol::zero_plus_one && o.axis.acts_on(1) && o.region != AncillaRegion::top)
                out.push_back({r, "qubit1-region", name + " involves qubit 1 but is not on the top ancilla"});

            if (o.mechanism == Mechanism::teleport_target) {
                if (o.axis.weight() != 1) {
                    out.push_back({r, "teleport-weight", name + " is not a single-qubit target"});
                    continue;
                }
                // the target must still be in |+> when the magic state arrives
                for (std::size_t rj = 0; rj <= ri; rj++)
                    for (const auto& other : s.rounds[rj])
                        if (&other != &o && (other.axis.mask & o.axis.mask))
                            out.push_back({r, "teleport-target-busy",
                                           name + " is also touched by " + other.axis.label() + " in round " +
                                               std::to_string(rj + 1)});
            }
        }
    }
    for (const auto& a : rotation_axes())
        if (!seen.count(a.mask))
            out.push_back({0, "missing-axis", a.label() + " never rotated"});
    return out;
}

std::vector<int>
participant_order(Protocol p, const RotationOp& o)
{
    if (o.region == AncillaRegion::none)
        return {};
    std::vector<int> qs;
    for (int q = 1; q <= 5; q++)
        if (o.axis.acts_on(q))
            qs.push_back(q);
    if (p == Protocol::zero_plus_one) {
        // auto-correction blocks sit left of the top region and right of the bottom one
        if (o.region == AncillaRegion::top)
            qs.insert(qs.begin(), MAGIC_CELL);
        else
            qs.push_back(MAGIC_CELL);
        return qs;
    }
    qs.insert(qs.end() - 1, MAGIC_CELL);
    return qs;
}

////////////////////////////////////////////////////////////

DistanceParams
make_params(Protocol p, int d_x, int d_z, std::optional<int> h)
{
    DistanceParams dp{d_x, d_z, d_z, d_x};
    if (p == Protocol::zero_plus_one)
        dp.h = h.value_or(d_x);
    return dp;
}

FactoryConfig
make_config(Protocol p, int d_x, int d_z, std::optional<int> h)
{
    return FactoryConfig{p, make_params(p, d_x, d_z, h), std::nullopt};
}

FactoryConfig
make_two_level_config(int d_x2, int d_z2, int d_x1, int d_z1)
{
    return FactoryConfig{Protocol::fifteen_squared, make_params(Protocol::fifteen_squared, d_x2, d_z2),
                         make_params(Protocol::fifteen_to_one, d_x1, d_z1)};
}

namespace
{

void
check_level(Protocol p, const DistanceParams& dp, const std::string& where)
{
    auto fail = [&](const std::string& msg) { throw std::invalid_argument(where + ": " + msg); };
    if (dp.d_x < 1 || dp.d_z < 1 || dp.d_m < 1 || dp.h < 1)
        fail("distances must be >= 1");
    if (dp.d_x < dp.d_z)
        fail("d_X must be >= d_Z");
    if (dp.d_m != dp.d_z)
        fail("d_m must equal d_Z");
    if (p == Protocol::zero_plus_one) {
        if (dp.d_z < 5)
            fail("0plus1 needs d_Z >= 5 to hold a zero-level block");
        if (dp.h > dp.d_x)
            fail("h must be <= d_X");
    } else if (dp.h != dp.d_x) {
        fail("h is pinned to d_X for " + to_string(p));
    }
}

}  // namespace

void
validate_config(const FactoryConfig& cfg)
{
    check_level(cfg.protocol, cfg.params, to_string(cfg.protocol));
    if (cfg.protocol == Protocol::fifteen_squared) {
        if (!cfg.first_level)
            throw std::invalid_argument("15to1x15to1: first_level distances are required");
        check_level(Protocol::fifteen_to_one, *cfg.first_level, "first_level");
    } else if (cfg.first_level) {
        throw std::invalid_argument(to_string(cfg.protocol) + ": first_level only applies to 15to1x15to1");
    }
}

////////////////////////////////////////////////////////////

bool
Region::overlaps(const Region& o) const
{
    return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h;
}

std::int64_t
FactoryLayout::cells() const
{
    std::int64_t c = 0;
    for (const auto& r : regions)
        c += r.area();
    return c;
}

namespace
{

// Data row between two ancilla regions, starting at (ox, oy).
void
add_core(std::vector<Region>& out, const DistanceParams& dp, std::int64_t ox, std::int64_t oy,
         const std::string& prefix)
{
    const std::int64_t W = dp.d_x + 4 * dp.d_z;
    out.push_back({RegionRole::ancilla_region, prefix + "ancilla-top", ox, oy, W, dp.h});
    out.push_back({RegionRole::data_qubit, prefix + "q1", ox, oy + dp.h, dp.d_x, dp.d_x});
    for (int k = 2; k <= 5; k++)
        out.push_back({RegionRole::data_qubit, prefix + "q" + std::to_string(k),
                       ox + dp.d_x + (k - 2) * dp.d_z, oy + dp.h, dp.d_z, dp.d_x});
    out.push_back({RegionRole::ancilla_region, prefix + "ancilla-bottom", ox, oy + dp.h + dp.d_x, W, dp.h});
}

void
add_15to1(std::vector<Region>& out, const DistanceParams& dp, std::int64_t ox, std::int64_t oy,
          const std::string& prefix)
{
    const std::int64_t W = dp.d_x + 4 * dp.d_z;
    add_core(out, dp, ox, oy, prefix);
    out.push_back({RegionRole::faulty_t_strip, prefix + "faulty-t-top", ox + W, oy, 1, dp.d_m});
    out.push_back({RegionRole::faulty_t_strip, prefix + "faulty-t-bottom", ox + W, oy + dp.h + dp.d_x, 1, dp.d_m});
}

// Core flanked by four 2d_Z x 2d_Z auto-correction blocks.
void
add_autocorrected_core(std::vector<Region>& out, const DistanceParams& dp)
{
    const std::int64_t W = dp.d_x + 4 * dp.d_z;
    const std::int64_t b = 2 * dp.d_z;
    add_core(out, dp, b, 0, "");
    out.push_back({RegionRole::autocorrect_block, "autocorrect-top-left", 0, dp.h - b, b, b});
    out.push_back({RegionRole::autocorrect_block, "autocorrect-bottom-left", 0, dp.h + dp.d_x, b, b});
    out.push_back({RegionRole::autocorrect_block, "autocorrect-top-right", b + W, dp.h - b, b, b});
    out.push_back({RegionRole::autocorrect_block, "autocorrect-bottom-right", b + W, dp.h + dp.d_x, b, b});
}

}  // namespace

int
first_level_factory_count(const FactoryConfig& cfg, double first_level_accept)
{
    if (cfg.protocol != Protocol::fifteen_squared || !cfg.first_level)
        throw std::invalid_argument("first-level factories only exist for 15to1x15to1");
    if (!(first_level_accept > 0.0 && first_level_accept <= 1.0))
        throw std::invalid_argument("first-level acceptance must lie in (0, 1]");
    const double t1 = 6.0 * cfg.first_level->d_m;
    const double need = TWO_LEVEL_OPS_PER_ROUND * t1 / (cfg.params.d_z * first_level_accept);
    return std::max(1, static_cast<int>(std::ceil(need - 1e-9)));
}

FactoryLayout
build_layout(const FactoryConfig& cfg, double first_level_accept)
{
    validate_config(cfg);
    FactoryLayout L;
    const auto& dp = cfg.params;
    const std::int64_t W = dp.d_x + 4 * dp.d_z;

    switch (cfg.protocol) {
    case Protocol::fifteen_to_one:
        add_15to1(L.regions, dp, 0, 0, "");
        break;
    case Protocol::zero_plus_one:
        add_autocorrected_core(L.regions, dp);
        L.regions.push_back({RegionRole::zero_level_block, "zero-level-0", 2 * dp.d_z + W, dp.h, dp.d_z, dp.d_z});
        L.regions.push_back({RegionRole::zero_level_block, "zero-level-1", 3 * dp.d_z + W, dp.h, dp.d_z, dp.d_z});
        break;
    case Protocol::fifteen_squared: {
        add_autocorrected_core(L.regions, dp);
        const auto& f = *cfg.first_level;
        const int F = first_level_factory_count(cfg, first_level_accept);
        const int n_top = (F + 1) / 2;
        const int n_bottom = F / 2;
        const std::int64_t pitch = f.d_x + 4 * f.d_z + 1;  // includes the faulty-T strip column
        const std::int64_t sub_h = 2 * f.h + f.d_x;
        const std::int64_t y_min = std::min<std::int64_t>(0, dp.h - 2 * dp.d_z);
        const std::int64_t y_max = std::max<std::int64_t>(2 * dp.h + dp.d_x, dp.h + dp.d_x + 2 * dp.d_z);

        L.regions.push_back({RegionRole::transfer_bus, "bus-top", 0, y_min - dp.d_z, n_top * pitch, dp.d_z});
        for (int i = 0; i < n_top; i++)
            add_15to1(L.regions, f, i * pitch, y_min - dp.d_z - sub_h, "f" + std::to_string(i) + ".");
        if (n_bottom > 0)
            L.regions.push_back({RegionRole::transfer_bus, "bus-bottom", 0, y_max, n_bottom * pitch, dp.d_z});
        for (int i = 0; i < n_bottom; i++)
            add_15to1(L.regions, f, i * pitch, y_max + dp.d_z, "f" + std::to_string(n_top + i) + ".");
        break;
    }
    }
    return L;
}

std::int64_t
footprint(const FactoryConfig& cfg, double first_level_accept)
{
    return build_layout(cfg, first_level_accept).qubits();
}

long
duration(const FactoryConfig& cfg)
{
    validate_config(cfg);
    const auto& dp = cfg.params;
    switch (cfg.protocol) {
    case Protocol::fifteen_to_one:
        return 6L * dp.d_m;
    case Protocol::fifteen_squared:
        return (15L * dp.d_z + 1) / 2;  // ceil(7.5 d_Z2)
    case Protocol::zero_plus_one:
        return 7L * dp.d_z + std::max(0, ZERO_PLUS_ONE_EPILOGUE_CYCLES);
    }
    return 0;
}

}  // namespace distill
