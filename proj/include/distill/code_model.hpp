#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace distill
{

class PhysicalErrorRate
{
public:
    explicit PhysicalErrorRate(double value);

    double value() const { return value_; }

private:
    double value_;
};

class Distance
{
public:
    explicit Distance(int value);

    int value() const { return value_; }

private:
    int value_;
};

struct ZeroLevelConstants
{
    int qubits = 40;
    int depth = 25;
    int cycles = 5;
    int depths_per_cycle = 6;
    double error_coefficient = 100.0;
    // (p_phys, p_fail), ascending in p_phys
    std::vector<std::pair<double, double>> failure_anchors = {{1e-4, 0.05}, {1e-3, 0.30}};
};

const ZeroLevelConstants& zero_level_constants();

double logical_error_rate(Distance d, PhysicalErrorRate p);

// Error accrued by one logical-operator class idling for `cycles` cycles.
double idle_error(long cycles, Distance d, PhysicalErrorRate p);

std::int64_t patch_qubits(Distance d_x, Distance d_z);

double zero_level_failure_rate(PhysicalErrorRate p);
double zero_level_output_error(PhysicalErrorRate p);

}  // namespace distill
