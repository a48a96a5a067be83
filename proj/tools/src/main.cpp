#include <iostream>

#include <CLI11.hpp>

#include "spine/errors.hpp"
#include "spinectl/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Spine space line-geometry verification"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_file;
    spinectl::ConfigOverrides o;
    app.add_option("--config", config_file, "JSON config file; flags override its values");
    app.add_option("--q", o.q, "field order (prime)");
    app.add_option("--n", o.n, "ambient dimension");
    app.add_option("--k", o.k, "point dimension");
    app.add_option("--m", o.m, "dim(U ∩ W) of proper points");
    app.add_option("--w", o.w, "dim W");
    app.add_option("--delta", o.delta, "pi, rho or both")->check(CLI::IsMember({"pi", "rho", "both"}));
    app.add_option("--seed", o.seed, "seed of the line relabelling");
    app.add_option("--lambda", o.lambda, "homology scalar for the counterexample");
    app.add_option("--bk-line-cap", o.bk_line_cap, "skip Bron-Kerbosch above this many lines");
    app.add_option("--triple-limit", o.triple_limit, "sample ternary sweeps above this many triples");
    app.add_option("--triple-samples", o.triple_samples, "samples drawn when sweeping by sample");
    app.add_option("--output", o.output, "report directory");
    app.add_option("--cache", o.cache, "relation cache directory");

    const std::map<std::string, std::string> help{
        {"build", "build the spine space and export it"},
        {"relations", "compute and export the pi and rho line graphs"},
        {"cliques", "spanned and maximal cliques with their classification"},
        {"pencils", "ternary pencils, parallel pencils and the pencil family"},
        {"reconstruct", "bundles and the reconstructed point space"},
        {"counterexample", "homology automorphism in the neighbourhood case"},
        {"verify-all", "every check that applies to the configuration"}};
    for (const auto& name : spinectl::command_names()) app.add_subcommand(name, help.at(name));

    CLI11_PARSE(app, argc, argv);

    try {
        spinectl::RunConfig cfg = config_file.empty() ? spinectl::RunConfig{} : spinectl::load_config(config_file);
        cfg = spinectl::apply_overrides(cfg, o);
        return spinectl::run_command(app.get_subcommands().front()->get_name(), cfg, std::cout);
    } catch (const spine::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return spinectl::exit_config;
    }
}
