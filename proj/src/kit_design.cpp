#include "kitopt/kit_design.hpp"

#include "kitopt/error.hpp"

#include <algorithm>
#include <numeric>

namespace kitopt {
namespace {

void take_top(const Eigen::Ref<const Eigen::VectorXd>& scores, std::vector<std::size_t> pool, std::size_t count,
              std::vector<std::size_t>& out) {
    std::stable_sort(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) {
        return scores(static_cast<Eigen::Index>(a)) > scores(static_cast<Eigen::Index>(b));
    });
    out.insert(out.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(std::min(count, pool.size())));
}

}  // namespace

std::vector<std::vector<std::size_t>> members_by_label(const Labels& idx, std::size_t k) {
    std::vector<std::vector<std::size_t>> out(k);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= k) throw Error(ErrorCode::InvalidArgument, "label out of range");
        out[idx[i]].push_back(i);
    }
    return out;
}

std::vector<std::size_t> top_items(const Eigen::Ref<const Eigen::VectorXd>& scores, const ItemCatalog& catalog,
                                   const SelectionConstraint& c, bool constrained) {
    if (static_cast<std::size_t>(scores.size()) != catalog.size())
        throw Error(ErrorCode::WidthMismatch, "score vector does not match catalog");
    if (c.total > catalog.size()) throw Error(ErrorCode::InvalidConstraint, "total exceeds catalog size");
    std::vector<std::size_t> out;
    if (constrained) {
        c.check(catalog);
        take_top(scores, catalog.ids(Category::Expensive), c.expensive_quota, out);
        take_top(scores, catalog.ids(Category::Cheap), c.cheap_quota, out);
    } else {
        std::vector<std::size_t> all(catalog.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        take_top(scores, std::move(all), c.total, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FrequencyProfile frequency_profile(const PreferenceMatrix& prefs, const std::vector<std::size_t>& members,
                                   std::size_t cluster_id) {
    if (members.empty()) throw Error(ErrorCode::EmptyCluster, "cluster " + std::to_string(cluster_id) + " is empty");
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(prefs.items()));
    for (auto i : members) {
        if (i >= prefs.users()) throw Error(ErrorCode::InvalidArgument, "member index out of range");
        counts += prefs.row(i).transpose();
    }
    return {cluster_id, std::move(counts), members.size()};
}

Kit design_kit(const FrequencyProfile& profile, const ItemCatalog& catalog, const SelectionConstraint& c,
               bool constrained) {
    return {profile.cluster_id, top_items(profile.counts, catalog, c, constrained)};
}

std::vector<Kit> design_all(const PreferenceMatrix& prefs, const std::vector<std::vector<std::size_t>>& clusters,
                            const ItemCatalog& catalog, const SelectionConstraint& c, bool constrained) {
    std::vector<Kit> kits;
    for (std::size_t j = 0; j < clusters.size(); ++j) {
        if (clusters[j].empty()) continue;
        kits.push_back(design_kit(frequency_profile(prefs, clusters[j], j), catalog, c, constrained));
    }
    if (kits.empty()) throw Error(ErrorCode::EmptyCluster, "partition has no non-empty cluster");
    return kits;
}

}  // namespace kitopt
