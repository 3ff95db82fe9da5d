#pragma once

#include "tsagg/core.hpp"
#include "tsagg/hierarchy.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace tsagg {

enum class RepresentationMethod { centroid, medoid, distribution };

std::string_view to_string(RepresentationMethod method);
RepresentationMethod parse_representation_method(std::string_view name);

/// One normalized profile per cluster, in the PeriodFrame row layout
/// (profiles(k, t * n_attributes + a)), weighted by cluster size.
struct RepresentativeSet {
    RepresentationMethod method = RepresentationMethod::centroid;
    std::size_t steps_per_period = 0;
    std::size_t n_attributes = 0;
    Matrix profiles;
    std::vector<std::size_t> weights;
    /// Source period of each profile, medoid method only.
    std::optional<std::vector<std::size_t>> medoid_source;

    std::size_t k() const noexcept { return profiles.rows(); }
    double at(std::size_t cluster, std::size_t step, std::size_t attribute) const noexcept {
        return profiles(cluster, step * n_attributes + attribute);
    }
};

/// Intermediate curves of the distribution-preserving representation for one
/// (attribute, cluster) pair. Curves are sorted descending.
struct DistributionWork {
    /// All member values of the cluster, sorted: |C_k| * steps_per_period long.
    std::vector<double> cluster_duration_curve;
    /// Means of consecutive groups of |C_k| sorted values: steps_per_period long.
    std::vector<double> representative_duration_curve;
    /// Time-step-wise mean over members.
    std::vector<double> centroid_profile;
    /// Time steps ordered by descending centroid value (earlier step first on ties).
    std::vector<std::size_t> centroid_order;
    /// Final profile: the i-th largest representative value placed at centroid_order[i].
    std::vector<double> profile;
};

DistributionWork distribution_work(const PeriodFrame& frame, std::span<const std::size_t> members,
                                   std::size_t attribute);

RepresentativeSet represent_centroid(const PeriodFrame& frame, const ClusterResult& clusters);
RepresentativeSet represent_medoid(const PeriodFrame& frame, const ClusterResult& clusters);
RepresentativeSet represent_distribution(const PeriodFrame& frame, const ClusterResult& clusters);

RepresentativeSet represent(const PeriodFrame& frame, const ClusterResult& clusters,
                            RepresentationMethod method);

} // namespace tsagg
