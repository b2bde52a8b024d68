#include "distill/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace distill
{

std::string
format_sci(double v)
{
    if (v == 0.0)
        v = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

double
round_sig6(double v)
{
    if (!std::isfinite(v))
        return v;
    return std::strtod(format_sci(v).c_str(), nullptr);
}

}  // namespace distill
