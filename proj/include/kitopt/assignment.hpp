#pragma once

#include "kitopt/model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

namespace kitopt {

/// Number of positions where a 0/1 selection row and the kit's indicator
/// differ. For a row and kit of equal size c.total this is 2 * (c.total - overlap).
template <typename Derived>
std::size_t user_loss(const Eigen::MatrixBase<Derived>& row, const Kit& kit) {
    std::size_t mismatches = 0;
    for (Eigen::Index q = 0; q < row.size(); ++q) {
        const bool chosen = row(q) != 0;
        if (chosen != kit.contains(static_cast<std::size_t>(q))) ++mismatches;
    }
    return mismatches;
}

struct Assignment {
    enum class Provenance { Initial, Reassigned };

    std::vector<std::size_t> kit;  ///< index into the kit list, per user
    Provenance provenance = Provenance::Initial;
};

/// Normal and exponential mean loss per kit population. An empty population
/// reports 0 for both and population 0.
struct ClusterLosses {
    std::vector<std::size_t> population;
    std::vector<double> normal;       ///< mean loss
    std::vector<double> exponential;  ///< mean of exp(loss)
};

struct LossReport {
    std::vector<std::size_t> per_user_loss;
    ClusterLosses clusters;
    std::size_t total_loss = 0;
};

ClusterLosses cluster_losses(const std::vector<std::size_t>& per_user_loss, const Assignment& assignment,
                             std::size_t k);

LossReport loss_report(const PreferenceMatrix& prefs, const std::vector<Kit>& kits, const Assignment& assignment);

/// Initial assignment from a clustering: users of cluster `kits[p].id` go to kit p.
Assignment assignment_from_clusters(const std::vector<std::vector<std::size_t>>& clusters,
                                    const std::vector<Kit>& kits, std::size_t n_users);

struct Reassignment {
    Assignment assignment;  ///< the reassigned users
    LossReport before;      ///< losses under the initial assignment
    LossReport after;
};

/// Moves every user to the kit with the smallest loss, the lowest kit index on
/// ties. Throws Error(EmptyKitList) when `kits` is empty.
Reassignment reassign(const PreferenceMatrix& prefs, const std::vector<Kit>& kits, const Assignment& initial);

}  // namespace kitopt
