#pragma once

#include <string>

namespace distill
{

// "%.5e": six significant digits in scientific notation.
std::string format_sci(double v);

// v rounded to six significant digits.
double round_sig6(double v);

}  // namespace distill
