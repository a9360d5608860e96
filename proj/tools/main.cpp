#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "harness/commands.hpp"
#include "harness/config.hpp"

namespace {

using sigma::harness::RunConfig;
using sigma::harness::TableFormat;
using sigma::harness::TableMode;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact integer coefficients of the Weierstrass sigma expansion: "
        "computation, p-adic divisibility verification, series oracles"};
    app.require_subcommand(1);

    RunConfig config;

    const std::map<std::string, TableFormat> format_names{
        {"plain", TableFormat::Plain},
        {"csv", TableFormat::Csv},
        {"markdown", TableFormat::Markdown}};
    const std::map<std::string, TableMode> mode_names{
        {"nu", TableMode::Nu}, {"nu-minus-j", TableMode::NuMinusJ}};

    const auto add_bounds = [&](CLI::App* cmd, bool required) {
        auto* i_opt = cmd->add_option("--max-i", config.max_i,
                                      "largest i of the rectangle")
                          ->check(CLI::NonNegativeNumber);
        auto* j_opt = cmd->add_option("--max-j", config.max_j,
                                      "largest j of the rectangle")
                          ->check(CLI::NonNegativeNumber);
        if (required) {
            i_opt->required();
            j_opt->required();
        }
    };
    const auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", config.workers,
                        "worker threads per diagonal (default: available "
                        "parallelism)")
            ->envname("SIGMA_WORKERS")
            ->check(CLI::PositiveNumber);
    };

    auto* compute = app.add_subcommand(
        "compute", "Compute the coefficient rectangle and write a checkpoint");
    add_bounds(compute, true);
    add_workers(compute);
    compute->add_option("--checkpoint", config.checkpoint_path,
                        "checkpoint file; resumed from when it exists "
                        "(default: sigma-coeffs-<max_i>x<max_j>.ckpt)");
    compute->callback(
        [&] { config.command = RunConfig::Command::Compute; });

    auto* verify = app.add_subcommand(
        "verify",
        "Check measured against predicted 2- and 3-adic valuations");
    add_bounds(verify, true);
    add_workers(verify);
    verify->add_option("--checkpoint", config.checkpoint_path,
                       "read coefficients from this checkpoint instead of "
                       "computing them");
    verify->add_option("--json", config.json_path,
                       "write the JSON report here (default: stdout)");
    verify->callback([&] { config.command = RunConfig::Command::Verify; });

    auto* tables = app.add_subcommand(
        "tables", "Render the valuation matrix of the rectangle");
    add_bounds(tables, true);
    add_workers(tables);
    tables->add_option("--prime", config.table_prime, "prime p of nu_p")
        ->required();
    tables->add_option("--mode", config.table_mode, "cell content")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
    tables->add_option("--format", config.output_format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    tables->callback([&] { config.command = RunConfig::Command::Tables; });

    auto* oracle = app.add_subcommand(
        "oracle-check",
        "Run the independent series checks against the recursion output");
    oracle->add_option("--order", config.oracle_order, "series truncation order")
        ->check(CLI::Range(4L, 2000L));
    add_workers(oracle);
    oracle->callback(
        [&] { config.command = RunConfig::Command::OracleCheck; });

    auto* report = app.add_subcommand(
        "report", "Human-readable summary: verification, tables, oracles");
    add_bounds(report, false);
    add_workers(report);
    report->add_option("--oracle-order", config.oracle_order,
                       "series truncation order for the oracle suite")
        ->check(CLI::Range(4L, 2000L));
    report->add_option("--primes", config.primes,
                       "primes for the valuation tables");
    report->add_option("--format", config.output_format, "table format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    report->callback([&] { config.command = RunConfig::Command::Report; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sigma::harness::exit_invalid_config;
    }

    return sigma::harness::run(config, std::cout, std::cerr);
}
