#include "distill/errors.hpp"
#include "distill/frontier.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace distill;

namespace
{

ParetoPoint
pt(double p_out, double st, const std::string& name)
{
    ParetoPoint p;
    p.p_out = p_out;
    p.spacetime = st;
    p.provenance = name;
    return p;
}

SweepConfig
zero_plus_one_grid(double p)
{
    SweepConfig sc;
    sc.p_phys = p;
    ProtocolSweep ps;
    ps.protocol = Protocol::zero_plus_one;
    ps.d_z = {5, 9};
    ps.d_x = {5, 19};
    ps.h = {5, 19};
    sc.protocols.push_back(ps);
    return sc;
}

}  // namespace

TEST(Spacetime, Arithmetic)
{
    EXPECT_DOUBLE_EQ(spacetime_cost({8690, 38, 1, 0.0, 1.0}), 330220.0);
    EXPECT_DOUBLE_EQ(spacetime_cost({8690, 38, 1, 0.0, 0.5}), 2 * 330220.0);
    EXPECT_DOUBLE_EQ(spacetime_cost({15328, 70, 4, 0.0, 1.0}), 268240.0);
    EXPECT_THROW(spacetime_cost({1, 1, 1, 0.0, 0.0}), std::invalid_argument);
}

TEST(Sweep, SingletonMatchesDirectEvaluation)
{
    SweepConfig sc;
    sc.p_phys = 1e-4;
    sc.protocols.push_back({Protocol::zero_plus_one, {12, 12}, {5, 5}, {6, 6}, {}, {}});
    const auto r = sweep(sc);
    ASSERT_EQ(r.points.size(), 1u);
    const auto direct = factory_performance(make_config(Protocol::zero_plus_one, 12, 5, 6), PhysicalErrorRate(1e-4));
    EXPECT_EQ(r.points[0].p_out, direct.p_out);
    EXPECT_EQ(r.points[0].performance.physical_qubits, direct.physical_qubits);
    EXPECT_EQ(r.points[0].spacetime, spacetime_cost(direct));
}

TEST(Sweep, EveryGridPointAccountedFor)
{
    auto sc = zero_plus_one_grid(1e-4);
    ProtocolSweep two;
    two.protocol = Protocol::fifteen_squared;
    two.d_z = {3, 5};
    two.d_x = {3, 9};
    two.first_d_z = {3, 4};
    two.first_d_x = {3, 6};
    sc.protocols.push_back(two);
    const auto r = sweep(sc);
    const std::size_t n = 5 * 15 * 15 + 3 * 7 * 2 * 4;
    EXPECT_EQ(r.points.size() + r.invalid.size(), n);
    for (const auto& inv : r.invalid)
        EXPECT_FALSE(inv.reason.empty());
}

TEST(Sweep, ServesLowNoiseBudget)
{
    const auto r = sweep(zero_plus_one_grid(1e-4));
    EXPECT_TRUE(std::any_of(r.points.begin(), r.points.end(), [](const ParetoPoint& p) { return p.p_out <= 7.8e-13; }));
}

TEST(Sweep, IndependentOfWorkerCount)
{
    const auto a = sweep(zero_plus_one_grid(1e-3), 1);
    const auto b = sweep(zero_plus_one_grid(1e-3), 5);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); i++) {
        EXPECT_EQ(a.points[i].provenance, b.points[i].provenance);
        EXPECT_EQ(a.points[i].p_out, b.points[i].p_out);
        EXPECT_EQ(a.points[i].spacetime, b.points[i].spacetime);
    }
}

TEST(Sweep, EmptyGridRejected)
{
    SweepConfig sc;
    EXPECT_THROW(sweep(sc), std::invalid_argument);
    sc.protocols.push_back({Protocol::zero_plus_one, {5, 5}, {6, 6}, {1, 1}, {}, {}});  // d_X < d_Z only
    EXPECT_THROW(sweep(sc), std::invalid_argument);
}

TEST(Pareto, Basics)
{
    EXPECT_EQ(pareto_front({pt(1e-10, 5, "a")}).size(), 1u);
    const auto f = pareto_front({pt(1e-10, 5, "a"), pt(1e-9, 6, "b")});
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].provenance, "a");
    // equal coordinates keep the smaller provenance
    const auto g = pareto_front({pt(1e-10, 5, "z"), pt(1e-10, 5, "m")});
    ASSERT_EQ(g.size(), 1u);
    EXPECT_EQ(g[0].provenance, "m");
    // equal p_out, higher cost is dominated; equal cost, higher p_out too
    EXPECT_EQ(pareto_front({pt(1e-10, 5, "a"), pt(1e-10, 6, "b"), pt(1e-9, 5, "c")}).size(), 1u);
}

TEST(Pareto, AntichainIdempotentPermutationInvariant)
{
    auto pts = sweep(zero_plus_one_grid(1e-3)).points;
    const auto f = pareto_front(pts);
    ASSERT_GT(f.size(), 2u);
    for (std::size_t i = 1; i < f.size(); i++) {
        EXPECT_LT(f[i - 1].p_out, f[i].p_out);
        EXPECT_GT(f[i - 1].spacetime, f[i].spacetime);
    }
    for (const auto& q : pts)
        for (const auto& x : f) {
            const bool dominated = (q.p_out <= x.p_out && q.spacetime < x.spacetime) ||
                                   (q.p_out < x.p_out && q.spacetime <= x.spacetime);
            EXPECT_FALSE(dominated) << x.provenance << " dominated by " << q.provenance;
        }

    const auto ff = pareto_front(f);
    ASSERT_EQ(ff.size(), f.size());
    std::mt19937 rng(3);
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto fs = pareto_front(pts);
    ASSERT_EQ(fs.size(), f.size());
    for (std::size_t i = 0; i < f.size(); i++) {
        EXPECT_EQ(ff[i].provenance, f[i].provenance);
        EXPECT_EQ(fs[i].provenance, f[i].provenance);
    }
}

TEST(Pareto, PointsRecomputeFromProvenance)
{
    const auto f = pareto_front(sweep(zero_plus_one_grid(1e-4)).points);
    for (const auto& x : f) {
        ASSERT_TRUE(x.config.has_value());
        const auto perf = factory_performance(*x.config, PhysicalErrorRate(1e-4));
        EXPECT_EQ(x.spacetime, spacetime_cost(perf));
        EXPECT_EQ(x.p_out, perf.p_out);
        EXPECT_EQ(x.provenance, provenance(*x.config));
    }
}

TEST(Reduction, Constructed)
{
    const std::vector<ParetoPoint> a = {pt(1e-12, 100, "a1"), pt(1e-11, 50, "a2"), pt(1e-10, 20, "a3")};
    EXPECT_DOUBLE_EQ(reduction_between(a, a, 1e-12, 1e-10).value, 0.0);
    std::vector<ParetoPoint> b = a;
    for (auto& x : b)
        x.spacetime *= 2;
    EXPECT_DOUBLE_EQ(reduction_between(a, b, 1e-12, 1e-10).value, 0.5);
    EXPECT_DOUBLE_EQ(reduction_between(a, b, 1e-13, 1e-9).value, 0.5);
}

TEST(Reduction, StepFunctionComparison)
{
    // at 5e-11 a's best is 50 and b's best is 60; at 1e-10 a=20, b=60
    const std::vector<ParetoPoint> a = {pt(1e-11, 50, "a1"), pt(1e-10, 20, "a2")};
    const std::vector<ParetoPoint> b = {pt(5e-11, 60, "b1")};
    const auto r = reduction_between(a, b, 1e-11, 1e-10);
    EXPECT_NEAR(r.value, 1 - 50.0 / 60.0, 1e-15);
    EXPECT_EQ(r.level, 5e-11);
    EXPECT_EQ(r.levels_compared, 2);
}

TEST(Reduction, NoCoverageRejected)
{
    const std::vector<ParetoPoint> a = {pt(1e-12, 100, "a")};
    const std::vector<ParetoPoint> b = {pt(1e-8, 10, "b")};
    EXPECT_THROW(reduction_between(a, b, 1e-13, 1e-10), InfeasibleError);
    EXPECT_THROW(reduction_between(a, {}, 1e-13, 1e-10), InfeasibleError);
}
