#include "ewh/cli.hpp"
#include "ewh/error.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Energy-water-hydrogen nexus cost engine for carbon capture retrofits"};
    ewh::RunManifest m;
    std::string format = "table";
    std::string config;
    std::string out;
    std::optional<std::string> plant, product, distances, flows;
    std::optional<double> beta, tolerance;

    app.add_option("--config", config, "Configuration file (JSON); defaults to the paper-2024 preset");
    app.add_option("--command", m.command, "scenario, sweep, breakeven, curve or penalty")
        ->check(CLI::IsMember({"scenario", "sweep", "breakeven", "curve", "penalty"}));
    app.add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--out", out, "Write output to this file instead of stdout");
    app.add_option("--plant", plant, "Plant name");
    app.add_option("--product", product, "Product name");
    app.add_option("--beta", beta, "Fraction of captured carbon reused, in [0, 1]");
    app.add_option("--distances", distances, "Comma-separated pipe lengths, km unless a unit is given");
    app.add_option("--flows", flows, "Comma-separated water flows, m3/h unless a unit is given");
    app.add_option("--tolerance", tolerance, "Break-even bisection tolerance in km");
    app.add_option("--threads", m.threads, "Sweep worker threads (0 = all cores)");
    app.add_flag("--dump-config", m.dump_config, "Print the fully resolved configuration and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ewh::kExitConfig;
    }

    m.config_path = config;
    m.format = ewh::parse_format(format);
    if (!out.empty()) {
        m.output_path = out;
    }
    m.plant = plant;
    m.product = product;
    m.beta = beta;
    m.distances = distances;
    m.flows = flows;
    m.tolerance_km = tolerance;
    return ewh::run(m, std::cout, std::cerr);
}
