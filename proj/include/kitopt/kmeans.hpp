#pragma once

#include "kitopt/error.hpp"
#include "kitopt/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace kitopt {

/// Cluster label per row.
using Labels = std::vector<std::size_t>;

struct KMeansConfig {
    std::size_t k = 4;
    double lambda = 0.3;  ///< centroid damping; 1 gives plain Lloyd
    std::size_t max_iters = 100;
    std::size_t k_limit = 15;  ///< upper end of the default sweep
    std::uint64_t seed = 0;
    double tol = 1e-6;  ///< stop once no centroid moves farther than this

    void check(std::size_t n) const {
        if (!(lambda > 0.0 && lambda <= 1.0)) throw Error(ErrorCode::InvalidArgument, "lambda must lie in (0, 1]");
        if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "k must lie in [1, n]");
        if (max_iters < 1) throw Error(ErrorCode::InvalidArgument, "max_iters must be positive");
    }
};

template <typename Scalar>
struct KMeansRun {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    Matrix centroids;  ///< k x m
    Labels idx;        ///< nearest centroid per row, consistent with `centroids`
    std::size_t iterations_used = 0;
    bool converged = false;
    /// Within-cluster sum of squares after every assignment pass, the final
    /// consistency pass included.
    std::vector<Scalar> wcss;
};

/// The first k rows of a seeded uniform row permutation.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> init_centroids(
    const Eigen::MatrixBase<Derived>& points, std::size_t k, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(points.rows());
    if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "k must lie in [1, n]");
    Rng rng(seed);
    const auto order = rng.permutation(n);
    Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> c(static_cast<Eigen::Index>(k),
                                                                              points.cols());
    for (std::size_t j = 0; j < k; ++j)
        c.row(static_cast<Eigen::Index>(j)) = points.row(static_cast<Eigen::Index>(order[j]));
    return c;
}

/// Euclidean nearest centroid; the lowest index wins a tie.
template <typename DerivedP, typename DerivedC>
Labels find_closest_centroids(const Eigen::MatrixBase<DerivedP>& points, const Eigen::MatrixBase<DerivedC>& centroids) {
    using Scalar = typename DerivedP::Scalar;
    if (centroids.rows() == 0) throw Error(ErrorCode::InvalidArgument, "empty centroid set");
    if (centroids.cols() != points.cols()) throw Error(ErrorCode::WidthMismatch, "centroid width mismatch");
    Labels idx(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        Eigen::Index best = 0;
        Scalar best_d = std::numeric_limits<Scalar>::infinity();
        for (Eigen::Index j = 0; j < centroids.rows(); ++j) {
            const Scalar d = (points.row(i) - centroids.row(j)).squaredNorm();
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(best);
    }
    return idx;
}

template <typename DerivedP, typename DerivedC>
typename DerivedP::Scalar within_cluster_ss(const Eigen::MatrixBase<DerivedP>& points, const Labels& idx,
                                            const Eigen::MatrixBase<DerivedC>& centroids) {
    typename DerivedP::Scalar total = 0;
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        total += (points.row(i) - centroids.row(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)])))
                     .squaredNorm();
    return total;
}

/// Damped centroid update: m_j <- (1 - lambda) m_j + lambda * mean(cluster j).
/// An empty cluster is reseeded at the row farthest from its own current
/// centroid (lowest row index on ties); each row donates at most once per call.
template <typename DerivedP, typename DerivedC>
Eigen::Matrix<typename DerivedP::Scalar, Eigen::Dynamic, Eigen::Dynamic> compute_centroids(
    const Eigen::MatrixBase<DerivedP>& points, const Labels& idx, const Eigen::MatrixBase<DerivedC>& previous,
    double lambda) {
    using Scalar = typename DerivedP::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index k = previous.rows();
    const Eigen::Index n = points.rows();

    Matrix sums = Matrix::Zero(k, points.cols());
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto j = idx[static_cast<std::size_t>(i)];
        if (j >= static_cast<std::size_t>(k)) throw Error(ErrorCode::InvalidArgument, "label out of range");
        sums.row(static_cast<Eigen::Index>(j)) += points.row(i);
        ++counts[j];
    }

    const auto step = static_cast<Scalar>(lambda);
    Matrix next = previous;
    std::vector<Scalar> spread;
    std::vector<bool> donated;
    for (Eigen::Index j = 0; j < k; ++j) {
        const auto count = counts[static_cast<std::size_t>(j)];
        if (count > 0) {
            next.row(j) = (Scalar(1) - step) * previous.row(j) + step * sums.row(j) / static_cast<Scalar>(count);
            continue;
        }
        if (spread.empty()) {
            spread.resize(static_cast<std::size_t>(n));
            donated.assign(static_cast<std::size_t>(n), false);
            for (Eigen::Index i = 0; i < n; ++i)
                spread[static_cast<std::size_t>(i)] =
                    (points.row(i) - previous.row(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)])))
                        .squaredNorm();
        }
        std::size_t far = 0;
        Scalar far_d = -1;
        for (std::size_t i = 0; i < spread.size(); ++i) {
            if (!donated[i] && spread[i] > far_d) {
                far_d = spread[i];
                far = i;
            }
        }
        if (far_d < 0) continue;  // k > n: nothing left to donate
        donated[far] = true;
        next.row(j) = points.row(static_cast<Eigen::Index>(far));
    }
    return next;
}

/// Alternates assignment and damped update until the largest centroid shift
/// drops below `config.tol` or `max_iters` updates have run, then assigns once
/// more so that `idx` matches the returned centroids.
template <typename DerivedP, typename DerivedC>
KMeansRun<typename DerivedP::Scalar> run_kmeans(const Eigen::MatrixBase<DerivedP>& points,
                                                const Eigen::MatrixBase<DerivedC>& initial,
                                                const KMeansConfig& config) {
    using Scalar = typename DerivedP::Scalar;
    config.check(static_cast<std::size_t>(points.rows()));
    if (initial.rows() != static_cast<Eigen::Index>(config.k) || initial.cols() != points.cols())
        throw Error(ErrorCode::WidthMismatch, "initial centroids have the wrong shape");

    KMeansRun<Scalar> run;
    run.centroids = initial;
    for (std::size_t it = 0; it < config.max_iters; ++it) {
        const Labels idx = find_closest_centroids(points, run.centroids);
        run.wcss.push_back(within_cluster_ss(points, idx, run.centroids));
        auto next = compute_centroids(points, idx, run.centroids, config.lambda);
        const Scalar shift = (next - run.centroids).rowwise().norm().maxCoeff();
        run.centroids = std::move(next);
        run.iterations_used = it + 1;
        if (shift < static_cast<Scalar>(config.tol)) {
            run.converged = true;
            break;
        }
    }
    run.idx = find_closest_centroids(points, run.centroids);
    run.wcss.push_back(within_cluster_ss(points, run.idx, run.centroids));
    return run;
}

template <typename DerivedP>
KMeansRun<typename DerivedP::Scalar> run_kmeans(const Eigen::MatrixBase<DerivedP>& points,
                                                const KMeansConfig& config) {
    config.check(static_cast<std::size_t>(points.rows()));
    return run_kmeans(points, init_centroids(points, config.k, config.seed), config);
}

struct SilhouetteReport {
    std::vector<double> per_user;     ///< s(i) in [-1, 1]
    std::vector<double> per_cluster;  ///< mean s(i) per cluster, 0 for an empty one
    std::vector<std::size_t> sizes;
    double macro_average = 0.0;  ///< mean of per_cluster over non-empty clusters
};

/// s(i) = (b - a) / max(a, b) with a the mean distance to the rest of i's
/// cluster and b the smallest mean distance to another non-empty cluster.
/// Singletons and a = b = 0 give 0. Throws Error(TooFewClusters) with fewer
/// than two non-empty clusters.
template <typename DerivedP>
SilhouetteReport silhouette(const Eigen::MatrixBase<DerivedP>& points, const Labels& idx, std::size_t k) {
    const Eigen::Index n = points.rows();
    if (static_cast<Eigen::Index>(idx.size()) != n) throw Error(ErrorCode::WidthMismatch, "label count mismatch");

    SilhouetteReport rep;
    rep.sizes.assign(k, 0);
    for (auto j : idx) {
        if (j >= k) throw Error(ErrorCode::InvalidArgument, "label out of range");
        ++rep.sizes[j];
    }
    const auto non_empty =
        static_cast<std::size_t>(std::count_if(rep.sizes.begin(), rep.sizes.end(), [](std::size_t s) { return s > 0; }));
    if (non_empty < 2) throw Error(ErrorCode::TooFewClusters, "silhouette needs two non-empty clusters");

    // dist_sum(i, j): total distance from row i to the members of cluster j.
    Eigen::MatrixXd dist_sum = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(k));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index l = i + 1; l < n; ++l) {
            const double d = static_cast<double>((points.row(i) - points.row(l)).norm());
            dist_sum(i, static_cast<Eigen::Index>(idx[static_cast<std::size_t>(l)])) += d;
            dist_sum(l, static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)])) += d;
        }
    }

    rep.per_user.assign(static_cast<std::size_t>(n), 0.0);
    rep.per_cluster.assign(k, 0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto own = idx[static_cast<std::size_t>(i)];
        if (rep.sizes[own] < 2) continue;
        const double a = dist_sum(i, static_cast<Eigen::Index>(own)) / static_cast<double>(rep.sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < k; ++j) {
            if (j == own || rep.sizes[j] == 0) continue;
            b = std::min(b, dist_sum(i, static_cast<Eigen::Index>(j)) / static_cast<double>(rep.sizes[j]));
        }
        const double denom = std::max(a, b);
        const double s = denom > 0.0 ? (b - a) / denom : 0.0;
        rep.per_user[static_cast<std::size_t>(i)] = s;
        rep.per_cluster[own] += s;
    }
    double total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        if (rep.sizes[j] == 0) continue;
        rep.per_cluster[j] /= static_cast<double>(rep.sizes[j]);
        total += rep.per_cluster[j];
    }
    rep.macro_average = total / static_cast<double>(non_empty);
    return rep;
}

template <typename DerivedP, typename Scalar>
SilhouetteReport silhouette(const Eigen::MatrixBase<DerivedP>& points, const KMeansRun<Scalar>& run) {
    return silhouette(points, run.idx, static_cast<std::size_t>(run.centroids.rows()));
}

/// Macro-averaged silhouette per (k, trial).
struct SweepTable {
    std::size_t k_min = 4;
    std::size_t trials = 3;
    std::vector<std::vector<double>> rows;  ///< rows[k - k_min][trial]

    std::size_t k_max() const noexcept { return k_min + rows.size() - 1; }
};

/// Seed of the (k, trial) cell: derive_seed(seed, "kmeans", k, trial).
/// Cells run concurrently; the table is assembled in (k, trial) order.
/// `base` supplies lambda, max_iters and tol; its k and seed are ignored.
SweepTable sweep(const Eigen::MatrixXd& points, std::size_t k_min, std::size_t k_max, std::size_t trials,
                 const KMeansConfig& base, std::uint64_t seed);

}  // namespace kitopt
