#include <iostream>

#include <CLI11.hpp>

#include "wwlab/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace wwlab::cli;
    CLI::App app{"Desk-scale experiments for the cubic water-wave system"};
    app.require_subcommand(1);

    CommandOptions opt;
    std::string config_path, out_dir = ".";
    std::uint64_t seed = 0;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "Configuration file (key = value)");
        sub->add_option("--out", out_dir, "Output directory");
        sub->add_option("--seed", seed, "Random seed");
        sub->add_flag("--dry-run", opt.dry_run, "Validate and print the plan without writing files");
        sub->add_option("--override", opt.overrides, "KEY=VAL, repeatable")->allow_extra_args(false);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    const auto* sub = app.get_subcommands().front();
    opt.command = sub->get_name();
    if (!config_path.empty()) opt.config = config_path;
    opt.out = out_dir;
    if (sub->count("--seed")) opt.seed = seed;
    return run_command(opt, std::cout, std::cerr);
}
