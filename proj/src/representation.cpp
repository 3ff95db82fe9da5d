#include "tsagg/representation.hpp"

#include "tsagg/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <string>

namespace tsagg {

namespace {

void check_clusters(const PeriodFrame& frame, const ClusterResult& clusters) {
    if (clusters.n_samples() != frame.n_periods) {
        throw DataError("cluster assignment covers " + std::to_string(clusters.n_samples()) +
                        " periods but the frame has " + std::to_string(frame.n_periods));
    }
    if (clusters.sizes.size() != clusters.k) {
        throw DataError("cluster sizes do not match the cluster count");
    }
    for (std::size_t label : clusters.assignment) {
        if (label >= clusters.k) {
            throw DataError("cluster label " + std::to_string(label) + " out of range");
        }
    }
}

RepresentativeSet empty_set(const PeriodFrame& frame, const ClusterResult& clusters,
                            RepresentationMethod method) {
    RepresentativeSet reps;
    reps.method = method;
    reps.steps_per_period = frame.steps_per_period;
    reps.n_attributes = frame.n_attributes;
    reps.profiles = Matrix(clusters.k, frame.rows.cols());
    reps.weights = clusters.sizes;
    return reps;
}

} // namespace

std::string_view to_string(RepresentationMethod method) {
    switch (method) {
    case RepresentationMethod::centroid:
        return "centroid";
    case RepresentationMethod::medoid:
        return "medoid";
    case RepresentationMethod::distribution:
        return "distribution";
    }
    return "unknown";
}

RepresentationMethod parse_representation_method(std::string_view name) {
    if (name == "centroid") {
        return RepresentationMethod::centroid;
    }
    if (name == "medoid") {
        return RepresentationMethod::medoid;
    }
    if (name == "distribution") {
        return RepresentationMethod::distribution;
    }
    throw ConfigError("unknown representation method '" + std::string(name) +
                      "' (expected centroid, medoid or distribution)");
}

RepresentativeSet represent_centroid(const PeriodFrame& frame, const ClusterResult& clusters) {
    check_clusters(frame, clusters);
    auto reps = empty_set(frame, clusters, RepresentationMethod::centroid);
    for (std::size_t p = 0; p < frame.n_periods; ++p) {
        auto target = reps.profiles.row(clusters.assignment[p]);
        auto source = frame.rows.row(p);
        for (std::size_t j = 0; j < target.size(); ++j) {
            target[j] += source[j];
        }
    }
    for (std::size_t c = 0; c < clusters.k; ++c) {
        const double size = static_cast<double>(clusters.sizes[c]);
        for (double& v : reps.profiles.row(c)) {
            v /= size;
        }
    }
    return reps;
}

RepresentativeSet represent_medoid(const PeriodFrame& frame, const ClusterResult& clusters) {
    check_clusters(frame, clusters);
    auto reps = empty_set(frame, clusters, RepresentationMethod::medoid);
    std::vector<std::size_t> source(clusters.k);
    const auto members = clusters.all_members();
    for (std::size_t c = 0; c < clusters.k; ++c) {
        source[c] = medoid_of(frame.rows, members[c]);
        std::ranges::copy(frame.rows.row(source[c]), reps.profiles.row(c).begin());
    }
    reps.medoid_source = std::move(source);
    return reps;
}

DistributionWork distribution_work(const PeriodFrame& frame, std::span<const std::size_t> members,
                                   std::size_t attribute) {
    if (members.empty()) {
        throw DataError("distribution representation of an empty cluster");
    }
    const std::size_t steps = frame.steps_per_period;
    const std::size_t group = members.size();
    DistributionWork work;

    work.cluster_duration_curve.reserve(group * steps);
    work.centroid_profile.assign(steps, 0.0);
    for (std::size_t p : members) {
        for (std::size_t t = 0; t < steps; ++t) {
            const double v = frame.at(p, t, attribute);
            work.cluster_duration_curve.push_back(v);
            work.centroid_profile[t] += v;
        }
    }
    for (double& v : work.centroid_profile) {
        v /= static_cast<double>(group);
    }
    std::stable_sort(work.cluster_duration_curve.begin(), work.cluster_duration_curve.end(),
                     std::greater<>());

    assert(work.cluster_duration_curve.size() == group * steps);
    work.representative_duration_curve.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const auto first = work.cluster_duration_curve.begin() + static_cast<std::ptrdiff_t>(i * group);
        work.representative_duration_curve[i] =
            std::accumulate(first, first + static_cast<std::ptrdiff_t>(group), 0.0) /
            static_cast<double>(group);
    }

    work.centroid_order.resize(steps);
    std::iota(work.centroid_order.begin(), work.centroid_order.end(), std::size_t{0});
    std::stable_sort(work.centroid_order.begin(), work.centroid_order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return work.centroid_profile[a] > work.centroid_profile[b];
                     });

    work.profile.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        work.profile[work.centroid_order[i]] = work.representative_duration_curve[i];
    }
    return work;
}

RepresentativeSet represent_distribution(const PeriodFrame& frame, const ClusterResult& clusters) {
    check_clusters(frame, clusters);
    auto reps = empty_set(frame, clusters, RepresentationMethod::distribution);
    const auto members = clusters.all_members();
    for (std::size_t c = 0; c < clusters.k; ++c) {
        for (std::size_t a = 0; a < frame.n_attributes; ++a) {
            const auto work = distribution_work(frame, members[c], a);
            for (std::size_t t = 0; t < frame.steps_per_period; ++t) {
                reps.profiles(c, t * frame.n_attributes + a) = work.profile[t];
            }
        }
    }
    return reps;
}

RepresentativeSet represent(const PeriodFrame& frame, const ClusterResult& clusters,
                            RepresentationMethod method) {
    switch (method) {
    case RepresentationMethod::centroid:
        return represent_centroid(frame, clusters);
    case RepresentationMethod::medoid:
        return represent_medoid(frame, clusters);
    case RepresentationMethod::distribution:
        return represent_distribution(frame, clusters);
    }
    throw ConfigError("unknown representation method");
}

} // namespace tsagg
