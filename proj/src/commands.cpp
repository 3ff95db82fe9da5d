#include "tsagg/commands.hpp"

#include "tsagg/csv_io.hpp"
#include "tsagg/errors.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace tsagg {

namespace {

using ordered_json = nlohmann::ordered_json;

struct LoadedInput {
    TimeSeriesSet series;
    PeriodFrame frame;
};

LoadedInput load(const RunConfig& config) {
    auto series = read_time_series_csv(config.input);
    auto normalized = normalize(series, config.normalization);
    auto frame = to_periods(normalized.values, normalized.params, config.period_length,
                            config.drop_trailing);
    return LoadedInput{std::move(series), std::move(frame)};
}

void prepare_out_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw DataError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
}

ordered_json number_array(const std::vector<double>& values) {
    auto out = ordered_json::array();
    for (double v : values) {
        out.push_back(round_to_output(v));
    }
    return out;
}

std::string representatives_csv(const SegmentedRepresentatives& segmented,
                                 const NormParams& params,
                                 const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "cluster_id,weight,segment_id,duration_steps";
    for (const auto& name : names) {
        out << ',' << name;
    }
    out << '\n';
    const auto& reps = segmented.representatives;
    for (std::size_t c = 0; c < reps.k(); ++c) {
        const auto& segments = segmented.layout[c];
        for (std::size_t s = 0; s < segments.size(); ++s) {
            out << c << ',' << reps.weights[c] << ',' << s << ',' << segments[s].length_steps;
            for (std::size_t a = 0; a < params.n_attributes(); ++a) {
                const double value = segments[s].values[a] * params.scale[a] + params.offset[a];
                out << ',' << format_number(value);
            }
            out << '\n';
        }
    }
    return out.str();
}

std::string mapping_csv(const ClusterResult& clusters) {
    std::ostringstream out;
    out << "period_index,cluster_id\n";
    for (std::size_t p = 0; p < clusters.n_samples(); ++p) {
        out << p << ',' << clusters.assignment[p] << '\n';
    }
    return out.str();
}

MetricsReport aggregate_loaded(const RunConfig& config, const LoadedInput& loaded,
                               std::size_t typical_periods, std::size_t segments) {
    ConfigEvaluator evaluator(loaded.frame, config.representation);
    const auto result = evaluator.aggregate(typical_periods, segments);
    auto report =
        make_report(unroll(loaded.frame), result.reconstruction, result.segmented.total_steps());

    const auto& names = loaded.series.attribute_names;
    prepare_out_dir(config.out_dir);
    write_text_file(config.out_dir / "representatives.csv",
                    representatives_csv(result.segmented, loaded.frame.norm_params, names));
    write_text_file(config.out_dir / "mapping.csv", mapping_csv(result.clusters));
    write_text_file(config.out_dir / "metrics.json", metrics_json(report, names));
    return report;
}

} // namespace

std::string metrics_json(const MetricsReport& report, const std::vector<std::string>& attribute_names) {
    ordered_json doc;
    doc["rmse_tot"] = round_to_output(report.rmse_tot);
    doc["attributes"] = attribute_names;
    doc["rmse_per_attribute"] = number_array(report.rmse_per_attribute);
    doc["duration_rmse_per_attribute"] = number_array(report.duration_rmse_per_attribute);
    doc["total_steps"] = report.total_steps;
    doc["reduction_ratio"] = round_to_output(report.reduction_ratio);
    return doc.dump(2) + "\n";
}

std::string pathway_csv(const PathwayTrace& trace) {
    std::ostringstream out;
    out << "iteration,p,s,total_steps,rmse,direction,ratio_periods,ratio_segments\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        out << i << ',' << step.state.periods << ',' << step.state.segments << ','
            << step.state.total_steps() << ',' << format_number(step.state.rmse) << ','
            << to_string(step.direction) << ','
            << (step.ratio_periods ? format_number(*step.ratio_periods) : "") << ','
            << (step.ratio_segments ? format_number(*step.ratio_segments) : "") << '\n';
    }
    return out.str();
}

MetricsReport cmd_aggregate(const RunConfig& config) {
    const auto loaded = load(config);
    return aggregate_loaded(config, loaded, config.typical_periods,
                            config.segments.value_or(config.period_length));
}

PathwayState cmd_pathway(const RunConfig& config) {
    if (config.budget && *config.budget < 1) {
        throw ConfigError("budget must be at least 1 total time step");
    }
    const auto loaded = load(config);
    ConfigEvaluator evaluator(loaded.frame, config.representation);
    std::optional<std::size_t> max_steps;
    if (config.budget) {
        max_steps = static_cast<std::size_t>(*config.budget);
    }
    const auto trace = pathway_search(evaluator, max_steps);
    const auto selected =
        select_config(trace, config.budget.value_or(std::numeric_limits<std::int64_t>::max()));

    prepare_out_dir(config.out_dir);
    write_text_file(config.out_dir / "pathway.csv", pathway_csv(trace));

    ordered_json doc;
    if (config.budget) {
        doc["budget"] = *config.budget;
    } else {
        doc["budget"] = nullptr;
    }
    doc["typical_periods"] = selected.periods;
    doc["segments"] = selected.segments;
    doc["total_steps"] = selected.total_steps();
    doc["rmse"] = round_to_output(selected.rmse);
    doc["representation"] = std::string(to_string(config.representation));
    doc["normalization"] = std::string(to_string(config.normalization));
    write_text_file(config.out_dir / "selected.json", doc.dump(2) + "\n");

    aggregate_loaded(config, loaded, selected.periods, selected.segments);
    return selected;
}

MetricsReport cmd_metrics(const RunConfig& config) {
    const auto original = read_time_series_csv(config.input);
    const auto other = read_time_series_csv(config.reconstruction);
    if (original.attribute_names != other.attribute_names) {
        throw DataError("attribute columns of '" + config.reconstruction.string() +
                        "' do not match '" + config.input.string() + "'");
    }
    if (original.n_steps() != other.n_steps()) {
        throw DataError("'" + config.reconstruction.string() + "' has " +
                        std::to_string(other.n_steps()) + " rows, expected " +
                        std::to_string(original.n_steps()));
    }
    const auto normalized = normalize(original, config.normalization);
    const auto report = make_report(normalized.values,
                                    apply_normalization(other.values, normalized.params),
                                    original.n_steps());
    prepare_out_dir(config.out_dir);
    write_text_file(config.out_dir / "metrics.json", metrics_json(report, original.attribute_names));
    return report;
}

} // namespace tsagg
