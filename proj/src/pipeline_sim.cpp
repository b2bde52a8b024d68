#include "distill/pipeline_sim.hpp"

#include "parallel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace distill
{

double
retry_probability(double p_fail)
{
    if (!(p_fail >= 0.0 && p_fail <= 1.0))
        throw std::invalid_argument("p_fail must lie in [0, 1]");
    return p_fail * p_fail * p_fail * p_fail;
}

double
joint_failure_probability(double p_fail, int k)
{
    if (!(p_fail >= 0.0 && p_fail <= 1.0))
        throw std::invalid_argument("p_fail must lie in [0, 1]");
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    return 1.0 - std::pow(1.0 - p_fail, k);
}

namespace
{

std::uint64_t
mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// SplitMix64 stream whose start depends only on (seed, trial index).
class TrialRng
{
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial)
        : state_(mix64(seed) + trial * 0xD1B54A32D192ED03ULL)
    {
    }

    double uniform()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

struct Tally
{
    std::uint64_t retries = 0;
    std::uint64_t extra = 0;
    std::uint64_t extra_sq = 0;
};

}  // namespace

SimReport
simulate(const TrialPolicy& policy, double p_fail, std::uint64_t trials, std::uint64_t seed, unsigned workers)
{
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    if (!(p_fail >= 0.0 && p_fail < 1.0))
        throw std::invalid_argument("p_fail must lie in [0, 1)");
    if (policy.round_cycles < 0)
        throw std::invalid_argument("round_cycles must be >= 0");

    constexpr std::uint64_t CHUNK = 1 << 16;
    std::vector<Tally> tallies((trials + CHUNK - 1) / CHUNK);
    const std::uint64_t rc = static_cast<std::uint64_t>(policy.round_cycles);

    detail::parallel_chunks(trials, CHUNK, workers, [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t c) {
        Tally t;
        for (std::uint64_t i = lo; i < hi; i++) {
            TrialRng rng(seed, i);
            auto fails = [&] { return rng.uniform() < p_fail; };
            if (!fails())  // (a)
                continue;
            const bool b_failed = fails();
            const bool c_failed = fails();
            if (!c_failed || !b_failed)  // (c) ready, or (b') transfers in round 8
                continue;
            std::uint64_t attempts = 1;  // (d)
            while (fails())
                attempts++;
            if (attempts > 1) {
                const std::uint64_t extra = (attempts - 1) * rc;
                t.retries++;
                t.extra += extra;
                t.extra_sq += extra * extra;
            }
        }
        tallies[c] = t;
    });

    Tally sum;
    for (const auto& t : tallies) {
        sum.retries += t.retries;
        sum.extra += t.extra;
        sum.extra_sq += t.extra_sq;
    }

    SimReport r;
    r.trials = trials;
    r.seed = seed;
    r.generator = SIM_GENERATOR_ID;
    r.p_fail = p_fail;
    r.retries = sum.retries;
    const double n = static_cast<double>(trials);
    r.retry_rate = sum.retries / n;
    r.retry_rate_se = std::sqrt(r.retry_rate * (1.0 - r.retry_rate) / n);
    r.mean_extra_cycles = sum.extra / n;
    const double var = trials > 1 ? (sum.extra_sq - n * r.mean_extra_cycles * r.mean_extra_cycles) / (n - 1) : 0.0;
    r.mean_extra_cycles_se = std::sqrt(std::max(0.0, var) / n);
    return r;
}

}  // namespace distill
