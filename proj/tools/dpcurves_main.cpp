// dpcurves: lines, conics, classification reports and family censuses for
// curves on hyperplane sections of del Pezzo 3-folds.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "delpezzo/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"curve classification on del Pezzo 3-fold hyperplane sections"};
    app.require_subcommand(1);

    delpezzo::CliConfig config;
    long long max_param = -1;
    long long coeff_bound = -1;

    auto add_surface_options = [&](CLI::App* cmd) {
        cmd->add_option("--degree", config.degree, "3-fold degree n (1..8)")->required();
        cmd->add_flag("--quadric", config.quadric,
                      "use the quadric model for the degree-8 section");
    };

    CLI::App* lines = app.add_subcommand("lines", "enumerate the line classes of the section");
    add_surface_options(lines);
    lines->add_option("--output", config.output, "output format: tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    CLI::App* conics = app.add_subcommand("conics", "enumerate the conic classes of the section");
    add_surface_options(conics);
    conics->add_option("--output", config.output, "output format: tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    CLI::App* classify = app.add_subcommand("classify", "classify one curve class");
    add_surface_options(classify);
    classify->add_option("--class", config.class_text,
                         "curve class, e.g. \"7;2,1,1,1,1,0\" or \"4,4\" with --quadric")
        ->required();
    classify->add_option("--quality", config.quality_file,
                         "JSON file mapping line classes to \"good\"/\"bad\"");

    CLI::App* census = app.add_subcommand("census", "emit a family census table");
    census->add_option("--family", config.family, "canonical, cubic-a or cubic-b")->required();
    census->add_option("--max", max_param, "largest family parameter")->required();
    census->add_option("--output", config.output, "output format: tsv (default) or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    CLI::App* sweep = app.add_subcommand("sweep", "run the invariant sweep over a coefficient box");
    add_surface_options(sweep);
    sweep->add_option("--coeff-bound", coeff_bound, "coefficient box bound (>= 0)")->required();
    sweep->add_option("--quality", config.quality_file,
                      "JSON file mapping line classes to \"good\"/\"bad\"");

    CLI11_PARSE(app, argc, argv);

    config.command = app.get_subcommands().front()->get_name();
    config.max_param = max_param;
    config.coeff_bound = coeff_bound;
    return delpezzo::run(config, std::cout, std::cerr);
}
