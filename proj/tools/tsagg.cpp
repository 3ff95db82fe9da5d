// Command-line front end: aggregate, pathway and metrics subcommands.

#include "tsagg/commands.hpp"
#include "tsagg/csv_io.hpp"
#include "tsagg/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kExitInput = 2;
constexpr int kExitConfig = 3;

struct Flags {
    std::string input;
    std::string reconstruction;
    std::size_t period_length = 24;
    std::size_t typical_periods = 8;
    std::optional<std::size_t> segments;
    std::string representation = "distribution";
    std::string normalization = "minmax";
    std::optional<std::int64_t> budget;
    std::string out_dir = ".";
    bool drop_trailing = false;
};

void add_common(CLI::App& cmd, Flags& flags) {
    cmd.add_option("--input", flags.input, "Time series CSV")->required();
    cmd.add_option("--normalization", flags.normalization, "minmax or znorm")
        ->check(CLI::IsMember({"minmax", "znorm"}));
    cmd.add_option("--out-dir", flags.out_dir, "Output directory");
}

void add_pipeline(CLI::App& cmd, Flags& flags) {
    cmd.add_option("--period-length", flags.period_length, "Time steps per period")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--representation", flags.representation, "centroid, medoid or distribution")
        ->check(CLI::IsMember({"centroid", "medoid", "distribution"}));
    cmd.add_flag("--drop-trailing", flags.drop_trailing,
                 "Discard trailing steps that do not fill a whole period");
}

tsagg::RunConfig to_config(const Flags& flags) {
    tsagg::RunConfig config;
    config.input = flags.input;
    config.reconstruction = flags.reconstruction;
    config.period_length = flags.period_length;
    config.typical_periods = flags.typical_periods;
    config.segments = flags.segments;
    config.representation = tsagg::parse_representation_method(flags.representation);
    config.normalization = tsagg::parse_norm_method(flags.normalization);
    config.budget = flags.budget;
    config.out_dir = flags.out_dir;
    config.drop_trailing = flags.drop_trailing;
    return config;
}

void print_report(const tsagg::MetricsReport& report) {
    std::cout << "rmse_tot " << tsagg::format_number(report.rmse_tot) << ", total_steps "
              << report.total_steps << ", reduction_ratio "
              << tsagg::format_number(report.reduction_ratio) << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time series aggregation to weighted typical periods and segments"};
    app.require_subcommand(1);
    Flags flags;

    auto* aggregate = app.add_subcommand("aggregate", "Cluster, represent and segment a series");
    add_common(*aggregate, flags);
    add_pipeline(*aggregate, flags);
    aggregate->add_option("--typical-periods", flags.typical_periods, "Number of typical periods")
        ->check(CLI::PositiveNumber);
    aggregate->add_option("--segments", flags.segments, "Segments per typical period")
        ->check(CLI::PositiveNumber);

    auto* pathway = app.add_subcommand("pathway", "Steepest-descent search over periods and segments");
    add_common(*pathway, flags);
    add_pipeline(*pathway, flags);
    pathway->add_option("--budget", flags.budget, "Maximum total aggregated time steps");

    auto* metrics = app.add_subcommand("metrics", "Accuracy of an external aggregation");
    add_common(*metrics, flags);
    metrics->add_option("--reconstruction", flags.reconstruction, "Full-length aggregated CSV")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        const auto config = to_config(flags);
        if (aggregate->parsed()) {
            print_report(tsagg::cmd_aggregate(config));
        } else if (pathway->parsed()) {
            const auto selected = tsagg::cmd_pathway(config);
            std::cout << "selected " << selected.periods << " typical periods x "
                      << selected.segments << " segments, rmse_tot "
                      << tsagg::format_number(selected.rmse) << '\n';
        } else {
            print_report(tsagg::cmd_metrics(config));
        }
    } catch (const tsagg::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const tsagg::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
