#pragma once

#include <stdexcept>

namespace distill
{

// Valid request that no configuration can satisfy.
class InfeasibleError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

}  // namespace distill
