#pragma once

#include "kitopt/kmeans.hpp"
#include "kitopt/model.hpp"

#include <Eigen/Dense>

#include <vector>

namespace kitopt {

/// Per-item selection counts within one cluster.
struct FrequencyProfile {
    std::size_t cluster_id = 0;
    Eigen::VectorXd counts;
    std::size_t cluster_size = 0;
};

/// Member lists per cluster label; clusters with no members stay empty.
std::vector<std::vector<std::size_t>> members_by_label(const Labels& idx, std::size_t k);

/// Ids of the highest-scoring items, ascending. Unconstrained: the top
/// c.total overall; constrained: the top quota within each category. Equal
/// scores go to the lower item id.
std::vector<std::size_t> top_items(const Eigen::Ref<const Eigen::VectorXd>& scores, const ItemCatalog& catalog,
                                   const SelectionConstraint& c, bool constrained);

/// Throws Error(EmptyCluster) for an empty member list.
FrequencyProfile frequency_profile(const PreferenceMatrix& prefs, const std::vector<std::size_t>& members,
                                   std::size_t cluster_id = 0);

Kit design_kit(const FrequencyProfile& profile, const ItemCatalog& catalog, const SelectionConstraint& c,
               bool constrained);

/// One kit per non-empty cluster, in cluster order, with kit.id = cluster id.
/// Throws Error(EmptyCluster) when every cluster is empty.
std::vector<Kit> design_all(const PreferenceMatrix& prefs, const std::vector<std::vector<std::size_t>>& clusters,
                            const ItemCatalog& catalog, const SelectionConstraint& c, bool constrained);

/// Kit j holds the items with the largest centroid-j coordinates.
template <typename Scalar>
std::vector<Kit> best_centroid_kits(const KMeansRun<Scalar>& run, const ItemCatalog& catalog,
                                    const SelectionConstraint& c, bool constrained) {
    std::vector<Kit> kits;
    for (Eigen::Index j = 0; j < run.centroids.rows(); ++j) {
        const Eigen::VectorXd scores = run.centroids.row(j).transpose().template cast<double>();
        kits.push_back({static_cast<std::size_t>(j), top_items(scores, catalog, c, constrained)});
    }
    return kits;
}

}  // namespace kitopt
