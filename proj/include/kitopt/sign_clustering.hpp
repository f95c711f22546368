#pragma once

#include "kitopt/error.hpp"
#include "kitopt/svd.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kitopt {

enum class Axis { Users, Items };

struct SignCluster {
    std::uint64_t code = 0;  ///< bit j set iff the rank-(j+1) coordinate is >= 0
    std::vector<std::size_t> members;
};

/// Partition of users (rows of u) or items (columns of vt) by the sign pattern
/// of their leading r singular-vector coordinates. Clusters are numbered by
/// the first element that carries their pattern.
struct SignClustering {
    Axis axis = Axis::Users;
    Eigen::Index rank = 0;
    std::vector<std::uint64_t> codes;  ///< per element
    std::vector<std::size_t> cluster_of;
    std::vector<SignCluster> clusters;

    std::size_t size() const noexcept { return clusters.size(); }
    /// Pattern as '0'/'1' characters, leading singular vector first.
    std::string pattern(std::size_t element) const;
    std::vector<std::vector<std::size_t>> member_lists() const;
};

namespace detail {

/// `coords` holds one element per row and one rank per column.
template <typename Derived>
SignClustering cluster_by_sign(const Eigen::MatrixBase<Derived>& coords, Axis axis) {
    using Scalar = typename Derived::Scalar;
    if (coords.cols() < 1 || coords.cols() > 64)
        throw Error(ErrorCode::RankOutOfRange, "sign clustering supports ranks 1..64");
    SignClustering out;
    out.axis = axis;
    out.rank = coords.cols();
    std::unordered_map<std::uint64_t, std::size_t> seen;
    for (Eigen::Index e = 0; e < coords.rows(); ++e) {
        std::uint64_t code = 0;
        for (Eigen::Index j = 0; j < coords.cols(); ++j)
            if (coords(e, j) >= Scalar(0)) code |= std::uint64_t{1} << j;
        auto [it, inserted] = seen.emplace(code, out.clusters.size());
        if (inserted) out.clusters.push_back({code, {}});
        out.clusters[it->second].members.push_back(static_cast<std::size_t>(e));
        out.codes.push_back(code);
        out.cluster_of.push_back(it->second);
    }
    return out;
}

}  // namespace detail

template <typename Scalar>
SignClustering user_sign_clusters(const TruncatedSvd<Scalar>& t) {
    return detail::cluster_by_sign(t.u, Axis::Users);
}

template <typename Scalar>
SignClustering item_sign_clusters(const TruncatedSvd<Scalar>& t) {
    return detail::cluster_by_sign(t.vt.transpose(), Axis::Items);
}

template <typename Scalar>
SignClustering sign_clusters(const TruncatedSvd<Scalar>& t, Axis axis) {
    return axis == Axis::Users ? user_sign_clusters(t) : item_sign_clusters(t);
}

/// (r, cluster count) for r = r_min..r_max. Counts never decrease with r
/// because each added rank can only split existing clusters.
template <typename Scalar>
std::vector<std::pair<Eigen::Index, std::size_t>> cluster_count_table(const SvdFactors<Scalar>& f, Axis axis,
                                                                       Eigen::Index r_min, Eigen::Index r_max) {
    if (r_min < 1 || r_min > r_max || r_max > f.rank_limit())
        throw Error(ErrorCode::RankOutOfRange, "need 1 <= r_min <= r_max <= p");
    std::vector<std::pair<Eigen::Index, std::size_t>> out;
    for (Eigen::Index r = r_min; r <= r_max; ++r) out.emplace_back(r, sign_clusters(truncate(f, r), axis).size());
    return out;
}

}  // namespace kitopt
