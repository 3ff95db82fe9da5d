#pragma once

#include "tsagg/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tsagg {

/// One agglomeration step. Leaves carry ids [0, n); the cluster created by
/// merge m gets id n + m. `first < second` always holds.
struct Merge {
    std::size_t first;
    std::size_t second;
    double cost;
    std::size_t size;
};

/// Full merge history of an agglomerative run.
///
/// Without connectivity there are exactly n - 1 merges. With a connectivity
/// relation that splits the samples into c components there are n - c.
struct Linkage {
    std::size_t n_samples = 0;
    std::size_t n_components = 1;
    std::vector<Merge> merges;
};

/// Flat clustering. Cluster labels are ordered by the lowest sample index they
/// contain, so label 0 always holds sample 0.
struct ClusterResult {
    std::size_t k = 0;
    std::vector<std::size_t> assignment;
    std::vector<std::size_t> sizes;

    std::size_t n_samples() const noexcept { return assignment.size(); }
    /// Member sample indices of cluster c in ascending order.
    std::vector<std::size_t> members(std::size_t c) const;
    std::vector<std::vector<std::size_t>> all_members() const;
};

/// Symmetric allowed-merge relation over samples.
class Connectivity {
public:
    /// Sample i is adjacent to i - 1 and i + 1 only.
    static Connectivity chain(std::size_t n);
    /// Validates symmetry and index range; self references are ignored.
    static Connectivity from_neighbors(std::vector<std::vector<std::size_t>> neighbors);

    std::size_t size() const noexcept { return neighbors_.size(); }
    std::span<const std::size_t> neighbors(std::size_t i) const { return neighbors_[i]; }
    std::size_t n_components() const;

private:
    explicit Connectivity(std::vector<std::vector<std::size_t>> neighbors)
        : neighbors_(std::move(neighbors)) {}
    std::vector<std::vector<std::size_t>> neighbors_;
};

/// Squared Euclidean distance summed over all columns.
double squared_distance(std::span<const double> x, std::span<const double> y) noexcept;

/// Ward agglomeration via the Lance-Williams recurrence on squared Euclidean
/// distances. A merge's cost is twice the increase in within-cluster sum of
/// squares. Ties go to the lexicographically smallest (lower id, higher id).
///
/// With connectivity, only clusters that contain an allowed pair may merge and
/// a merged cluster inherits the union of both neighbor sets.
Linkage ward_linkage(const Matrix& samples, const Connectivity* connectivity = nullptr);

/// Flat clustering from the first n - k merges of the linkage.
ClusterResult cut(const Linkage& linkage, std::size_t k);

ClusterResult ward_cluster(const Matrix& samples, std::size_t k,
                           const Connectivity* connectivity = nullptr);

/// Member minimizing the summed squared distance to all members; ties go to
/// the lowest sample index.
std::size_t medoid_of(const Matrix& samples, std::span<const std::size_t> members);

} // namespace tsagg
