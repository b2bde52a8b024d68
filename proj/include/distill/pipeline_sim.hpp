#pragma once

#include <cstdint>
#include <string>

namespace distill
{

// Zero-level supply policy for one second-level run:
//   round 6: attempt (a)
//   round 7: on failure, (b) and (c) in parallel
//   round 8: if (c) failed and (b) succeeded, transfer (b');
//            if both failed, repeat (d) until one succeeds
struct TrialPolicy
{
    int round_cycles = 5;  // d_Z2 cycles per round
};

struct SimReport
{
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string generator;
    double p_fail = 0.0;
    std::uint64_t retries = 0;
    double retry_rate = 0.0;
    double retry_rate_se = 0.0;
    double mean_extra_cycles = 0.0;
    double mean_extra_cycles_se = 0.0;
};

inline constexpr const char* SIM_GENERATOR_ID = "splitmix64-per-trial/v1";

double retry_probability(double p_fail);
double joint_failure_probability(double p_fail, int k);

// workers = 0 picks DISTILL_WORKERS or the hardware thread count.
SimReport simulate(const TrialPolicy& policy, double p_fail, std::uint64_t trials, std::uint64_t seed,
                   unsigned workers = 0);

}  // namespace distill
