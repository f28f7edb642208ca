#include <CLI11.hpp>
#include <iostream>

#include "hhq/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact Hochschild cohomology engine for the circular-quiver algebras A_T"};
    app.require_subcommand(1);

    std::string t_spec = "0..1";
    std::string char_spec = "0";
    hhq::RunConfig config;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--T", t_spec, "T values, e.g. 0..3 or 0,2");
        cmd->add_option("--char", char_spec, "field characteristics, e.g. 0,3,5");
        cmd->add_option("--max-n", config.max_n, "largest cohomological degree (inclusive)");
        cmd->add_option("--cap", config.hard_cap, "hard degree cap");
        cmd->add_option("--emit", config.emit, "output format: csv or json");
        cmd->add_option("--wmax", config.wmax, "largest product length for the ring checks");
    };

    CLI::App* dims = app.add_subcommand("dims", "emit the dimension table");
    add_common(dims);
    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    add_common(verify);
    verify->add_option("--only", config.only,
                       "single check id: complex, minimality, induced, right-resolution, "
                       "koszul, dims, bases, center, sigma, ring, nilpotence, oracle");
    CLI::App* ring = app.add_subcommand("ring", "print the degree-4 generator presentation");
    add_common(ring);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        config.T_values = hhq::parse_range_list(t_spec);
        config.characteristics = hhq::parse_char_list(char_spec);
        if (dims->parsed()) return hhq::cmd_dims(config, std::cout);
        if (verify->parsed()) return hhq::cmd_verify(config, std::cout);
        return hhq::cmd_ring(config, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
