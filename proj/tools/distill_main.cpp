#include "distill/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

int
main(int argc, char** argv)
{
    CLI::App app{"distill: magic-state factory resource estimation"};
    app.require_subcommand(1);

    distill::RunConfig rc;
    unsigned workers = 0;
    std::uint64_t seed = 0;

    const char* help[][2] = {
        {"factory", "evaluate one factory configuration"},
        {"sweep", "evaluate a grid of configurations"},
        {"pareto", "Pareto frontiers of a sweep"},
        {"compare", "minimum spacetime reduction between frontiers"},
        {"pipeline", "Monte Carlo of the zero-level retry policy"},
        {"app", "Hamiltonian-simulation resource estimate"},
    };
    for (const auto& [name, desc] : help) {
        auto* sub = app.add_subcommand(name, desc);
        sub->add_option("-c,--config", rc.input, "JSON config file")->required()->check(CLI::ExistingFile);
        sub->add_option("-o,--output", rc.output, "output file, - for stdout");
        sub->add_option("-f,--format", rc.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", seed, "random seed (pipeline)");
        sub->add_option("-j,--workers", workers, "worker threads (default: DISTILL_WORKERS or all cores)");
        sub->callback([&rc, name = std::string(name)] { rc.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::ordered_json j{{"error", "schema"}, {"exit_code", 2}, {"field", "arguments"}, {"message", e.what()}};
        std::cerr << j.dump() << "\n";
        return distill::EXIT_SCHEMA;
    }
    for (auto* sub : app.get_subcommands())
        if (sub->count("--seed"))
            rc.seed = seed;

    return distill::run(rc, std::cout, std::cerr, workers);
}
