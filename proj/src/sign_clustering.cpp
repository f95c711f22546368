#include "kitopt/sign_clustering.hpp"

namespace kitopt {

std::string SignClustering::pattern(std::size_t element) const {
    std::string bits(static_cast<std::size_t>(rank), '0');
    for (Eigen::Index j = 0; j < rank; ++j)
        if (codes[element] >> j & 1U) bits[static_cast<std::size_t>(j)] = '1';
    return bits;
}

std::vector<std::vector<std::size_t>> SignClustering::member_lists() const {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back(c.members);
    return out;
}

}  // namespace kitopt
