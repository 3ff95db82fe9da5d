#include "tsagg/hierarchy.hpp"

#include "tsagg/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

namespace tsagg {

std::vector<std::size_t> ClusterResult::members(std::size_t c) const {
    std::vector<std::size_t> out;
    out.reserve(c < sizes.size() ? sizes[c] : 0);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] == c) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> ClusterResult::all_members() const {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t c = 0; c < k; ++c) {
        out[c].reserve(sizes[c]);
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        out[assignment[i]].push_back(i);
    }
    return out;
}

Connectivity Connectivity::chain(std::size_t n) {
    std::vector<std::vector<std::size_t>> neighbors(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        neighbors[i].push_back(i + 1);
        neighbors[i + 1].push_back(i);
    }
    for (auto& list : neighbors) {
        std::sort(list.begin(), list.end());
    }
    return Connectivity(std::move(neighbors));
}

Connectivity Connectivity::from_neighbors(std::vector<std::vector<std::size_t>> neighbors) {
    const std::size_t n = neighbors.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto& list = neighbors[i];
        std::erase(list, i);
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (std::size_t j : list) {
            if (j >= n) {
                throw ConfigError("connectivity references sample " + std::to_string(j) +
                                  " but there are only " + std::to_string(n));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : neighbors[i]) {
            if (!std::binary_search(neighbors[j].begin(), neighbors[j].end(), i)) {
                throw ConfigError("connectivity is not symmetric: " + std::to_string(i) + " -> " +
                                  std::to_string(j) + " has no reverse edge");
            }
        }
    }
    return Connectivity(std::move(neighbors));
}

std::size_t Connectivity::n_components() const {
    const std::size_t n = size();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack;
    std::size_t count = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        ++count;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j : neighbors_[i]) {
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
    }
    return count;
}

double squared_distance(std::span<const double> x, std::span<const double> y) noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        sum += d * d;
    }
    return sum;
}

Linkage ward_linkage(const Matrix& samples, const Connectivity* connectivity) {
    const std::size_t n = samples.rows();
    if (n == 0) {
        throw DataError("cannot cluster an empty sample set");
    }
    if (connectivity != nullptr && connectivity->size() != n) {
        throw ConfigError("connectivity covers " + std::to_string(connectivity->size()) +
                          " samples but " + std::to_string(n) + " were given");
    }

    // Slots hold active clusters; a merged cluster reuses the lower slot.
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = squared_distance(samples.row(i), samples.row(j));
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    std::vector<char> adjacent;
    if (connectivity != nullptr) {
        adjacent.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j : connectivity->neighbors(i)) {
                adjacent[i * n + j] = 1;
            }
        }
    }

    std::vector<std::size_t> active(n);
    std::vector<std::size_t> id(n);
    std::vector<std::size_t> size(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        active[i] = i;
        id[i] = i;
    }

    Linkage linkage;
    linkage.n_samples = n;
    linkage.merges.reserve(n - 1);

    while (active.size() > 1) {
        bool found = false;
        double best_cost = std::numeric_limits<double>::infinity();
        std::size_t best_lo_id = 0;
        std::size_t best_hi_id = 0;
        std::size_t best_a = 0;
        std::size_t best_b = 0;

        for (std::size_t ai = 0; ai < active.size(); ++ai) {
            const std::size_t a = active[ai];
            const double* row = dist.data() + a * n;
            for (std::size_t bi = ai + 1; bi < active.size(); ++bi) {
                const std::size_t b = active[bi];
                if (!adjacent.empty() && !adjacent[a * n + b]) {
                    continue;
                }
                const double cost = row[b];
                if (found && cost > best_cost) {
                    continue;
                }
                const std::size_t lo_id = std::min(id[a], id[b]);
                const std::size_t hi_id = std::max(id[a], id[b]);
                if (!found || std::tie(cost, lo_id, hi_id) < std::tie(best_cost, best_lo_id, best_hi_id)) {
                    found = true;
                    best_cost = cost;
                    best_lo_id = lo_id;
                    best_hi_id = hi_id;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (!found) {
            break;
        }

        // best_a < best_b because active is kept sorted.
        const double n_a = static_cast<double>(size[best_a]);
        const double n_b = static_cast<double>(size[best_b]);
        const double d_ab = dist[best_a * n + best_b];
        for (std::size_t c : active) {
            if (c == best_a || c == best_b) {
                continue;
            }
            const double n_c = static_cast<double>(size[c]);
            const double updated = ((n_a + n_c) * dist[c * n + best_a] +
                                    (n_b + n_c) * dist[c * n + best_b] - n_c * d_ab) /
                                   (n_a + n_b + n_c);
            dist[c * n + best_a] = updated;
            dist[best_a * n + c] = updated;
            if (!adjacent.empty() && adjacent[best_b * n + c]) {
                adjacent[best_a * n + c] = 1;
                adjacent[c * n + best_a] = 1;
            }
        }

        const std::size_t merged_size = size[best_a] + size[best_b];
        linkage.merges.push_back(Merge{best_lo_id, best_hi_id, best_cost, merged_size});
        size[best_a] = merged_size;
        id[best_a] = n + linkage.merges.size() - 1;
        active.erase(std::find(active.begin(), active.end(), best_b));
    }

    linkage.n_components = active.size();
    return linkage;
}

ClusterResult cut(const Linkage& linkage, std::size_t k) {
    const std::size_t n = linkage.n_samples;
    if (k < 1 || k > n) {
        throw ConfigError("cluster count " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
    }
    if (k < linkage.n_components) {
        throw ConfigError("connectivity has " + std::to_string(linkage.n_components) +
                          " components, so " + std::to_string(k) + " clusters cannot be reached");
    }

    const std::size_t n_merges = n - k;
    std::vector<std::size_t> parent(n + n_merges);
    for (std::size_t i = 0; i < parent.size(); ++i) {
        parent[i] = i;
    }
    for (std::size_t m = 0; m < n_merges; ++m) {
        parent[linkage.merges[m].first] = n + m;
        parent[linkage.merges[m].second] = n + m;
    }

    ClusterResult result;
    result.k = k;
    result.assignment.assign(n, 0);
    std::vector<std::size_t> label_of_root(parent.size(), static_cast<std::size_t>(-1));
    std::size_t next_label = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = i;
        while (parent[root] != root) {
            root = parent[root];
        }
        if (label_of_root[root] == static_cast<std::size_t>(-1)) {
            label_of_root[root] = next_label++;
            result.sizes.push_back(0);
        }
        result.assignment[i] = label_of_root[root];
        ++result.sizes[label_of_root[root]];
    }
    return result;
}

ClusterResult ward_cluster(const Matrix& samples, std::size_t k, const Connectivity* connectivity) {
    if (k < 1 || k > samples.rows()) {
        throw ConfigError("cluster count " + std::to_string(k) + " outside [1, " +
                          std::to_string(samples.rows()) + "]");
    }
    if (connectivity != nullptr && connectivity->size() == samples.rows()) {
        const std::size_t components = connectivity->n_components();
        if (components > k) {
            throw ConfigError("connectivity has " + std::to_string(components) +
                              " components, so " + std::to_string(k) +
                              " clusters cannot be reached");
        }
    }
    return cut(ward_linkage(samples, connectivity), k);
}

std::size_t medoid_of(const Matrix& samples, std::span<const std::size_t> members) {
    if (members.empty()) {
        throw ConfigError("medoid of an empty member set");
    }
    std::size_t best = members.front();
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t candidate : members) {
        double cost = 0.0;
        for (std::size_t other : members) {
            cost += squared_distance(samples.row(candidate), samples.row(other));
        }
        if (cost < best_cost || (cost == best_cost && candidate < best)) {
            best_cost = cost;
            best = candidate;
        }
    }
    return best;
}

} // namespace tsagg
