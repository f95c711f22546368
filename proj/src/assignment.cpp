#include "kitopt/assignment.hpp"

#include "kitopt/error.hpp"

#include <limits>

namespace kitopt {

ClusterLosses cluster_losses(const std::vector<std::size_t>& per_user_loss, const Assignment& assignment,
                             std::size_t k) {
    if (assignment.kit.size() != per_user_loss.size())
        throw Error(ErrorCode::WidthMismatch, "loss and assignment lengths differ");
    ClusterLosses out{std::vector<std::size_t>(k, 0), std::vector<double>(k, 0.0), std::vector<double>(k, 0.0)};
    for (std::size_t i = 0; i < per_user_loss.size(); ++i) {
        const auto j = assignment.kit[i];
        if (j >= k) throw Error(ErrorCode::InvalidArgument, "kit index out of range");
        ++out.population[j];
        out.normal[j] += static_cast<double>(per_user_loss[i]);
        out.exponential[j] += std::exp(static_cast<double>(per_user_loss[i]));
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (out.population[j] == 0) continue;
        out.normal[j] /= static_cast<double>(out.population[j]);
        out.exponential[j] /= static_cast<double>(out.population[j]);
    }
    return out;
}

LossReport loss_report(const PreferenceMatrix& prefs, const std::vector<Kit>& kits, const Assignment& assignment) {
    if (assignment.kit.size() != prefs.users())
        throw Error(ErrorCode::WidthMismatch, "assignment does not cover every user");
    LossReport rep;
    rep.per_user_loss.reserve(prefs.users());
    for (std::size_t i = 0; i < prefs.users(); ++i) {
        if (assignment.kit[i] >= kits.size()) throw Error(ErrorCode::InvalidArgument, "kit index out of range");
        rep.per_user_loss.push_back(user_loss(prefs.row(i), kits[assignment.kit[i]]));
        rep.total_loss += rep.per_user_loss.back();
    }
    rep.clusters = cluster_losses(rep.per_user_loss, assignment, kits.size());
    return rep;
}

Assignment assignment_from_clusters(const std::vector<std::vector<std::size_t>>& clusters,
                                    const std::vector<Kit>& kits, std::size_t n_users) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    Assignment a{std::vector<std::size_t>(n_users, unset), Assignment::Provenance::Initial};
    for (std::size_t p = 0; p < kits.size(); ++p) {
        if (kits[p].id >= clusters.size()) throw Error(ErrorCode::InvalidArgument, "kit id names no cluster");
        for (auto i : clusters[kits[p].id]) {
            if (i >= n_users) throw Error(ErrorCode::InvalidArgument, "member index out of range");
            a.kit[i] = p;
        }
    }
    for (auto v : a.kit)
        if (v == unset) throw Error(ErrorCode::InvalidArgument, "clusters do not cover every user");
    return a;
}

Reassignment reassign(const PreferenceMatrix& prefs, const std::vector<Kit>& kits, const Assignment& initial) {
    if (kits.empty()) throw Error(ErrorCode::EmptyKitList, "no kits to assign");
    Reassignment out;
    out.before = loss_report(prefs, kits, initial);
    out.assignment = {std::vector<std::size_t>(prefs.users(), 0), Assignment::Provenance::Reassigned};
    for (std::size_t i = 0; i < prefs.users(); ++i) {
        std::size_t best_loss = std::numeric_limits<std::size_t>::max();
        for (std::size_t p = 0; p < kits.size(); ++p) {
            const auto loss = user_loss(prefs.row(i), kits[p]);
            if (loss < best_loss) {
                best_loss = loss;
                out.assignment.kit[i] = p;
            }
        }
    }
    out.after = loss_report(prefs, kits, out.assignment);
    return out;
}

}  // namespace kitopt
