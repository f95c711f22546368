#pragma once

#include "kitopt/model.hpp"
#include "kitopt/rng.hpp"
#include "oracles.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace testutil {

/// `expensive` expensive items followed by `cheap` cheap ones.
inline kitopt::ItemCatalog make_catalog(std::size_t expensive = 10, std::size_t cheap = 10) {
    std::vector<kitopt::Item> items;
    for (std::size_t i = 0; i < expensive + cheap; ++i)
        items.push_back({i, "item" + std::to_string(i),
                         i < expensive ? kitopt::Category::Expensive : kitopt::Category::Cheap});
    return kitopt::ItemCatalog(std::move(items));
}

inline std::vector<std::string> user_names(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("u" + std::to_string(i));
    return ids;
}

inline kitopt::PreferenceMatrix make_prefs(const Eigen::MatrixXd& data) {
    return kitopt::PreferenceMatrix(user_names(static_cast<std::size_t>(data.rows())), data);
}

inline Eigen::MatrixXd random_binary(kitopt::Rng& rng, Eigen::Index n, Eigen::Index m) {
    Eigen::MatrixXd a(n, m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < m; ++j) a(i, j) = static_cast<double>(rng.uniform_below(2));
    return a;
}

inline oracle::Rows to_rows(const Eigen::MatrixXd& a) {
    oracle::Rows rows(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(a(i, j));
    return rows;
}

}  // namespace testutil
