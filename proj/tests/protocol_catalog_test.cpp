#include "distill/json_io.hpp"
#include "distill/protocol_catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

using namespace distill;

namespace
{

const Protocol ALL[] = {Protocol::fifteen_to_one, Protocol::fifteen_squared, Protocol::zero_plus_one};

bool
has_violation(const RoundSchedule& s, const std::string& constraint)
{
    for (const auto& v : validate_schedule(s))
        if (v.constraint == constraint)
            return true;
    return false;
}

// Odd-size subsets of {1..5} other than {1}, written out by hand as labels.
std::multiset<std::string>
gamma_without_z1()
{
    return {"Z2", "Z3", "Z4", "Z5",
            "Z1Z2Z3", "Z1Z2Z4", "Z1Z2Z5", "Z1Z3Z4", "Z1Z3Z5", "Z1Z4Z5",
            "Z2Z3Z4", "Z2Z3Z5", "Z2Z4Z5", "Z3Z4Z5", "Z1Z2Z3Z4Z5"};
}

}  // namespace

TEST(Protocol, NamesRoundTrip)
{
    for (auto p : ALL)
        EXPECT_EQ(parse_protocol(to_string(p)), p);
    EXPECT_EQ(to_string(Protocol::zero_plus_one), "0plus1");
    EXPECT_THROW(parse_protocol("20to4"), std::invalid_argument);
}

TEST(PauliAxis, GammaMinusZ1)
{
    const auto& axes = rotation_axes();
    ASSERT_EQ(axes.size(), 15u);
    std::multiset<std::string> labels;
    for (const auto& a : axes) {
        EXPECT_EQ(a.weight() % 2, 1);
        EXPECT_NE(a.mask, Z1_MASK);
        labels.insert(a.label());
    }
    EXPECT_EQ(labels, gamma_without_z1());
    EXPECT_EQ(PauliAxis::of({1, 3, 5}).label(), "Z1Z3Z5");
    EXPECT_EQ(PauliAxis::of({1, 3, 5}).mask, 0b10101);
}

TEST(Schedule, CanonicalSchedulesValidate)
{
    for (auto p : ALL) {
        const auto s = build_schedule(p);
        const auto v = validate_schedule(s);
        EXPECT_TRUE(v.empty()) << to_string(p) << ": " << (v.empty() ? "" : v[0].constraint + " " + v[0].detail);
    }
}

TEST(Schedule, CoversGammaExactlyOnce)
{
    for (auto p : ALL) {
        std::multiset<std::string> labels;
        for (const auto& round : build_schedule(p).rounds)
            for (const auto& op : round)
                labels.insert(op.axis.label());
        EXPECT_EQ(labels, gamma_without_z1()) << to_string(p);
    }
}

TEST(Schedule, RoundCounts)
{
    EXPECT_EQ(build_schedule(Protocol::fifteen_to_one).rounds.size(), 6u);
    EXPECT_EQ(build_schedule(Protocol::zero_plus_one).rounds.size(), 7u);
    // 8 rounds whose last overlaps the next run: 7.5 on average
    const auto two = build_schedule(Protocol::fifteen_squared);
    EXPECT_EQ(two.rounds.size(), 8u);
    EXPECT_EQ(two.rounds.back().size(), 1u);
    for (const auto& r : two.rounds)
        EXPECT_LE(r.size(), 2u);
}

TEST(Schedule, ZeroPlusOneShape)
{
    const auto s = build_schedule(Protocol::zero_plus_one);
    int rotations = 0, teleports = 0;
    for (std::size_t r = 0; r < s.rounds.size(); r++) {
        int rot_here = 0;
        for (const auto& op : s.rounds[r]) {
            if (op.mechanism == Mechanism::teleport_target) {
                teleports++;
                EXPECT_EQ(r, 0u);
                EXPECT_EQ(op.axis.weight(), 1);
            } else {
                rotations++;
                rot_here++;
                if (op.axis.acts_on(1))
                    EXPECT_EQ(op.region, AncillaRegion::top);
            }
        }
        EXPECT_EQ(rot_here, 2);
    }
    EXPECT_EQ(rotations, 14);
    EXPECT_EQ(teleports, 1);
}

TEST(Schedule, DuplicateAxisDetected)
{
    auto s = build_schedule(Protocol::fifteen_to_one);
    s.rounds[5].push_back({PauliAxis::of({2}), Mechanism::faulty_t_measurement, AncillaRegion::none});
    EXPECT_TRUE(has_violation(s, "duplicate-axis"));
}

TEST(Schedule, TwoQubitOneRotationsInOneRoundConflict)
{
    auto s = build_schedule(Protocol::zero_plus_one);
    // move round 3's top rotation (Z1Z3Z5) into round 2
    auto moved = s.rounds[2][0];
    ASSERT_TRUE(moved.axis.acts_on(1));
    s.rounds[2].erase(s.rounds[2].begin());
    s.rounds[1].push_back(moved);
    const auto v = validate_schedule(s);
    ASSERT_FALSE(v.empty());
    EXPECT_TRUE(has_violation(s, "region-conflict"));
    EXPECT_EQ(std::count_if(v.begin(), v.end(), [](const Violation& x) { return x.constraint == "region-conflict"; }),
              1);
    EXPECT_EQ(v[0].round, 2);
}

TEST(Schedule, MissingAxisDetected)
{
    auto s = build_schedule(Protocol::fifteen_to_one);
    s.rounds[0].pop_back();
    EXPECT_TRUE(has_violation(s, "missing-axis"));
}

TEST(Schedule, InvalidAxisDetected)
{
    auto s = build_schedule(Protocol::fifteen_to_one);
    s.rounds[0].push_back({PauliAxis::of({1}), Mechanism::faulty_t_measurement, AncillaRegion::none});
    s.rounds[1].push_back({PauliAxis::of({2, 3}), Mechanism::faulty_t_measurement, AncillaRegion::none});
    const auto v = validate_schedule(s);
    EXPECT_EQ(std::count_if(v.begin(), v.end(), [](const Violation& x) { return x.constraint == "invalid-axis"; }), 2);
}

TEST(Schedule, TeleportRules)
{
    auto s = build_schedule(Protocol::zero_plus_one);
    auto bad = s;
    bad.rounds[0][2].axis = PauliAxis::of({3, 4, 5});
    EXPECT_TRUE(has_violation(bad, "teleport-weight"));

    // teleporting into qubit 5 after it has already been rotated
    auto late = s;
    auto tp = late.rounds[0][2];
    late.rounds[0].pop_back();
    late.rounds[2].push_back(tp);
    EXPECT_TRUE(has_violation(late, "teleport-target-busy"));
}

TEST(Schedule, ZeroPlusOneQubitOneMustUseTop)
{
    auto s = build_schedule(Protocol::zero_plus_one);
    std::swap(s.rounds[1][0].region, s.rounds[1][1].region);
    EXPECT_TRUE(has_violation(s, "qubit1-region"));
    EXPECT_FALSE(has_violation(s, "region-conflict"));
}

TEST(Schedule, MechanismAndRegionChecks)
{
    auto s = build_schedule(Protocol::zero_plus_one);
    s.rounds[1][1].mechanism = Mechanism::faulty_t_measurement;
    EXPECT_TRUE(has_violation(s, "mechanism"));

    auto t = build_schedule(Protocol::fifteen_to_one);
    t.rounds[0][0].region = AncillaRegion::none;
    EXPECT_TRUE(has_violation(t, "missing-region"));
}

TEST(Schedule, JsonRoundTrip)
{
    for (auto p : ALL) {
        const auto s = build_schedule(p);
        const auto back = schedule_from_json(to_json(s));
        EXPECT_EQ(to_json(back).dump(), to_json(s).dump());
        ASSERT_EQ(back.rounds.size(), s.rounds.size());
    }
}

TEST(ParticipantOrder, FollowsLayout)
{
    const RotationOp z135{PauliAxis::of({1, 3, 5}), Mechanism::faulty_t_measurement, AncillaRegion::bottom};
    EXPECT_EQ(participant_order(Protocol::fifteen_to_one, z135), (std::vector<int>{1, 3, MAGIC_CELL, 5}));
    const RotationOp top{PauliAxis::of({1, 2, 3}), Mechanism::injection_autocorrect, AncillaRegion::top};
    EXPECT_EQ(participant_order(Protocol::zero_plus_one, top), (std::vector<int>{MAGIC_CELL, 1, 2, 3}));
    const RotationOp bot{PauliAxis::of({2, 3, 4}), Mechanism::injection_autocorrect, AncillaRegion::bottom};
    EXPECT_EQ(participant_order(Protocol::zero_plus_one, bot), (std::vector<int>{2, 3, 4, MAGIC_CELL}));
    const RotationOp single{PauliAxis::of({2}), Mechanism::faulty_t_measurement, AncillaRegion::none};
    EXPECT_TRUE(participant_order(Protocol::fifteen_to_one, single).empty());
}

////////////////////////////////////////////////////////////

TEST(Config, Validation)
{
    EXPECT_NO_THROW(validate_config(make_config(Protocol::zero_plus_one, 12, 5, 6)));
    EXPECT_THROW(validate_config(make_config(Protocol::zero_plus_one, 12, 4, 6)), std::invalid_argument);
    EXPECT_THROW(validate_config(make_config(Protocol::zero_plus_one, 12, 5, 13)), std::invalid_argument);
    EXPECT_THROW(validate_config(make_config(Protocol::fifteen_to_one, 3, 5)), std::invalid_argument);
    EXPECT_THROW(validate_config(make_config(Protocol::fifteen_squared, 13, 5)), std::invalid_argument);
    auto c = make_config(Protocol::fifteen_to_one, 7, 5);
    c.params.h = 5;
    EXPECT_THROW(validate_config(c), std::invalid_argument);
    c = make_config(Protocol::fifteen_to_one, 7, 5);
    c.params.d_m = 3;
    EXPECT_THROW(validate_config(c), std::invalid_argument);
    EXPECT_NO_THROW(validate_config(make_two_level_config(13, 5, 5, 3)));
    EXPECT_THROW(validate_config(make_two_level_config(13, 5, 3, 5)), std::invalid_argument);
}

TEST(Layout, UnitDistanceBaselineHandCount)
{
    // 5 top ancilla cells, 5 data cells, 5 bottom ancilla cells, 2 faulty-T cells
    const auto l = build_layout(make_config(Protocol::fifteen_to_one, 1, 1));
    EXPECT_EQ(l.cells(), 17);
    EXPECT_EQ(footprint(make_config(Protocol::fifteen_to_one, 1, 1)), 34);
}

TEST(Layout, ClosedForms)
{
    for (int dz = 1; dz <= 9; dz++)
        for (int dx = dz; dx <= 15; dx++) {
            const std::int64_t w = dx + 4 * dz;
            EXPECT_EQ(footprint(make_config(Protocol::fifteen_to_one, dx, dz)), 2 * w * 3 * dx + 4 * dz);
            if (dz < 5)
                continue;
            for (int h = 1; h <= dx; h++)
                EXPECT_EQ(footprint(make_config(Protocol::zero_plus_one, dx, dz, h)),
                          2 * (dx * w + 2 * h * w + 16 * dz * dz + 2 * dz * dz));
        }
}

TEST(Layout, RegionsDoNotOverlap)
{
    std::vector<FactoryConfig> cfgs = {
        make_config(Protocol::fifteen_to_one, 1, 1),
        make_config(Protocol::fifteen_to_one, 11, 5),
        make_config(Protocol::zero_plus_one, 12, 5, 6),
        make_config(Protocol::zero_plus_one, 12, 5, 1),
        make_config(Protocol::zero_plus_one, 22, 11, 22),
        make_two_level_config(13, 5, 5, 3),
        make_two_level_config(7, 3, 7, 7),
        make_two_level_config(25, 11, 11, 5),
    };
    for (const auto& c : cfgs) {
        const auto l = build_layout(c);
        for (std::size_t i = 0; i < l.regions.size(); i++) {
            EXPECT_GT(l.regions[i].area(), 0);
            for (std::size_t j = i + 1; j < l.regions.size(); j++)
                EXPECT_FALSE(l.regions[i].overlaps(l.regions[j]))
                    << l.regions[i].label << " / " << l.regions[j].label;
        }
        EXPECT_EQ(l.qubits(), footprint(c));
    }
}

TEST(Layout, RoleCounts)
{
    auto count = [](const FactoryLayout& l, RegionRole r) {
        return std::count_if(l.regions.begin(), l.regions.end(), [r](const Region& x) { return x.role == r; });
    };
    const auto z = build_layout(make_config(Protocol::zero_plus_one, 12, 5, 6));
    EXPECT_EQ(count(z, RegionRole::data_qubit), 5);
    EXPECT_EQ(count(z, RegionRole::ancilla_region), 2);
    EXPECT_EQ(count(z, RegionRole::autocorrect_block), 4);
    EXPECT_EQ(count(z, RegionRole::zero_level_block), 2);

    const auto cfg = make_two_level_config(13, 5, 5, 3);
    const auto t = build_layout(cfg);
    const int F = first_level_factory_count(cfg);
    EXPECT_EQ(count(t, RegionRole::autocorrect_block), 4);
    EXPECT_EQ(count(t, RegionRole::data_qubit), 5 + 5 * F);
    EXPECT_EQ(count(t, RegionRole::transfer_bus), F > 1 ? 2 : 1);
}

TEST(Layout, JsonRoundTrip)
{
    const auto l = build_layout(make_two_level_config(13, 5, 5, 3));
    const auto back = layout_from_json(to_json(l));
    EXPECT_EQ(back.cells(), l.cells());
    EXPECT_EQ(to_json(back).dump(), to_json(l).dump());
}

TEST(Footprint, StrictlyIncreasingInEachDistance)
{
    for (int dz = 1; dz <= 8; dz++)
        for (int dx = dz; dx <= 12; dx++) {
            const auto f = footprint(make_config(Protocol::fifteen_to_one, dx, dz));
            EXPECT_LT(f, footprint(make_config(Protocol::fifteen_to_one, dx + 1, dz)));
            if (dz + 1 <= dx)
                EXPECT_LT(f, footprint(make_config(Protocol::fifteen_to_one, dx, dz + 1)));
        }
    for (int dz = 5; dz <= 9; dz++)
        for (int dx = dz; dx <= 14; dx++)
            for (int h = 1; h <= dx; h++) {
                const auto f = footprint(make_config(Protocol::zero_plus_one, dx, dz, h));
                EXPECT_LT(f, footprint(make_config(Protocol::zero_plus_one, dx + 1, dz, h)));
                if (h + 1 <= dx)
                    EXPECT_LT(f, footprint(make_config(Protocol::zero_plus_one, dx, dz, h + 1)));
                if (dz + 1 <= dx)
                    EXPECT_LT(f, footprint(make_config(Protocol::zero_plus_one, dx, dz + 1, h)));
            }
    // two-level: monotone in every distance except d_Z2, which also slows consumption
    for (int dz2 = 3; dz2 <= 7; dz2++)
        for (int dz1 = 3; dz1 <= 5; dz1++) {
            const auto f = footprint(make_two_level_config(dz2 + 4, dz2, dz1 + 2, dz1));
            EXPECT_LT(f, footprint(make_two_level_config(dz2 + 5, dz2, dz1 + 2, dz1)));
            EXPECT_LT(f, footprint(make_two_level_config(dz2 + 4, dz2, dz1 + 3, dz1)));
            EXPECT_LT(f, footprint(make_two_level_config(dz2 + 4, dz2, dz1 + 2, dz1 + 1)));
        }
}

TEST(Duration, Values)
{
    EXPECT_EQ(duration(make_config(Protocol::fifteen_to_one, 5, 5)), 30);
    EXPECT_EQ(duration(make_two_level_config(13, 5, 5, 3)), 38);
    EXPECT_EQ(duration(make_config(Protocol::zero_plus_one, 12, 5, 6)), 37);
    EXPECT_EQ(duration(make_config(Protocol::zero_plus_one, 22, 11, 13)), 79);
}

TEST(Duration, MonotoneInDistances)
{
    for (int dz = 5; dz <= 20; dz++) {
        EXPECT_LE(duration(make_config(Protocol::fifteen_to_one, dz, dz)),
                  duration(make_config(Protocol::fifteen_to_one, dz + 1, dz + 1)));
        EXPECT_LE(duration(make_config(Protocol::zero_plus_one, dz, dz, 3)),
                  duration(make_config(Protocol::zero_plus_one, dz + 1, dz + 1, 3)));
        EXPECT_LE(duration(make_two_level_config(dz, dz, 3, 3)), duration(make_two_level_config(dz + 1, dz + 1, 3, 3)));
        EXPECT_EQ(duration(make_config(Protocol::zero_plus_one, dz + 3, dz, 3)),
                  duration(make_config(Protocol::zero_plus_one, dz, dz, 3)));
    }
}

TEST(FirstLevelSupply, MeetsConsumption)
{
    for (int dz2 = 3; dz2 <= 13; dz2++)
        for (int dz1 = 3; dz1 <= 7; dz1++)
            for (double acc : {1.0, 0.97, 0.8, 0.5}) {
                const auto cfg = make_two_level_config(dz2, dz2, dz1, dz1);
                const int F = first_level_factory_count(cfg, acc);
                // two rotations every d_Z2 cycles, one output per 6 d_Z1 cycles per factory
                const double consumption = 2.0 / dz2;
                const double per_factory = acc / (6.0 * dz1);
                EXPECT_GE(F * per_factory, consumption * (1 - 1e-12));
                EXPECT_GE(F, static_cast<int>(std::ceil(consumption * 6.0 * dz1 / acc - 1e-9)));
            }
}
