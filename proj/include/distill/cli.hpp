#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace distill
{

struct RunConfig
{
    std::string command;        // factory | sweep | pareto | compare | pipeline | app
    std::string input;          // JSON config path
    std::string output = "-";   // "-" writes to the output stream
    std::string format = "json";  // json | csv
    std::optional<std::uint64_t> seed;
};

enum ExitCode
{
    EXIT_OK = 0,
    EXIT_IO = 1,
    EXIT_SCHEMA = 2,
    EXIT_INFEASIBLE = 3,
};

// Runs one command. On success the artifact goes to `output` (or `out`);
// on failure nothing is written there and a JSON error object goes to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, unsigned workers = 0);

// Same, with the config already in memory.
int run_text(const RunConfig& cfg, const std::string& config_text, std::ostream& out, std::ostream& err,
             unsigned workers = 0);

}  // namespace distill
