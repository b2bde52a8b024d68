#include "distill/code_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace distill
{

PhysicalErrorRate::PhysicalErrorRate(double value)
    : value_(value)
{
    if (!(value > 0.0 && value <= 0.1))
        throw std::invalid_argument("physical error rate must lie in (0, 0.1], got " + std::to_string(value));
}

Distance::Distance(int value)
    : value_(value)
{
    if (value < 1)
        throw std::invalid_argument("distance must be >= 1, got " + std::to_string(value));
}

const ZeroLevelConstants&
zero_level_constants()
{
    static const ZeroLevelConstants c;
    return c;
}

////////////////////////////////////////////////////////////

double
logical_error_rate(Distance d, PhysicalErrorRate p)
{
    // 0.1 (100 p)^((d+1)/2); d odd gives an integer power
    const int d_ = d.value();
    const double base = 100.0 * p.value();
    double r;
    if (d_ % 2 == 1) {
        r = 0.1;
        for (int i = 0; i < (d_ + 1) / 2; i++)
            r *= base;
    } else {
        r = 0.1 * std::pow(base, (d_ + 1) / 2.0);
    }
    return std::min(r, 1.0);
}

double
idle_error(long cycles, Distance d, PhysicalErrorRate p)
{
    const double r = static_cast<double>(cycles) * logical_error_rate(d, p) / d.value();
    return std::min(r, 1.0);
}

std::int64_t
patch_qubits(Distance d_x, Distance d_z)
{
    return 2 * static_cast<std::int64_t>(d_x.value()) * d_z.value();
}

double
zero_level_failure_rate(PhysicalErrorRate p)
{
    const auto& a = zero_level_constants().failure_anchors;
    const double x = p.value();
    for (const auto& [ap, af] : a)
        if (x == ap)
            return af;
    const auto& [p0, f0] = a.front();
    const auto& [p1, f1] = a.back();
    const double t = std::log(x / p0) / std::log(p1 / p0);
    const double f = std::exp(std::log(f0) + t * (std::log(f1) - std::log(f0)));
    return std::clamp(f, 0.0, 1.0);
}

double
zero_level_output_error(PhysicalErrorRate p)
{
    return std::min(zero_level_constants().error_coefficient * p.value() * p.value(), 1.0);
}

}  // namespace distill
