#include "kitopt/metrics.hpp"

#include "kitopt/error.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace kitopt {
namespace {

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double adjusted_rand_index(const Labels& a, const Labels& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::WidthMismatch, "labelings differ in length");
    if (a.size() < 2) return 1.0;
    std::map<std::pair<std::size_t, std::size_t>, double> joint;
    std::map<std::size_t, double> rows, cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        joint[{a[i], b[i]}] += 1.0;
        rows[a[i]] += 1.0;
        cols[b[i]] += 1.0;
    }
    double index = 0.0, sum_a = 0.0, sum_b = 0.0;
    for (const auto& [key, v] : joint) index += choose2(v);
    for (const auto& [key, v] : rows) sum_a += choose2(v);
    for (const auto& [key, v] : cols) sum_b += choose2(v);
    const double expected = sum_a * sum_b / choose2(static_cast<double>(a.size()));
    const double max_index = 0.5 * (sum_a + sum_b);
    if (max_index == expected) return 1.0;
    return (index - expected) / (max_index - expected);
}

double jaccard(const Kit& a, const Kit& b) {
    std::vector<std::size_t> common, all;
    std::set_intersection(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(), std::back_inserter(common));
    std::set_union(a.items.begin(), a.items.end(), b.items.begin(), b.items.end(), std::back_inserter(all));
    return all.empty() ? 1.0 : static_cast<double>(common.size()) / static_cast<double>(all.size());
}

}  // namespace kitopt
