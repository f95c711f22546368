#include "kitopt/kmeans.hpp"

#include <future>

namespace kitopt {

SweepTable sweep(const Eigen::MatrixXd& points, std::size_t k_min, std::size_t k_max, std::size_t trials,
                 const KMeansConfig& base, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(points.rows());
    if (k_min < 2 || k_min > k_max || k_max > n)
        throw Error(ErrorCode::InvalidArgument, "sweep needs 2 <= k_min <= k_max <= n");
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "sweep needs at least one trial");

    std::vector<std::vector<std::future<double>>> cells;
    for (std::size_t k = k_min; k <= k_max; ++k) {
        auto& row = cells.emplace_back();
        for (std::size_t t = 0; t < trials; ++t) {
            KMeansConfig cfg = base;
            cfg.k = k;
            cfg.seed = derive_seed(seed, "kmeans", k, t);
            row.push_back(std::async(std::launch::async, [&points, cfg] {
                const auto run = run_kmeans(points, cfg);
                return silhouette(points, run).macro_average;
            }));
        }
    }

    SweepTable table{k_min, trials, {}};
    for (auto& row : cells) {
        auto& out = table.rows.emplace_back();
        for (auto& cell : row) out.push_back(cell.get());
    }
    return table;
}

}  // namespace kitopt
