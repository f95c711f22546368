#pragma once

#include "kitopt/kmeans.hpp"
#include "kitopt/model.hpp"

namespace kitopt {

/// Hubert-Arabie adjusted Rand index between two labelings of the same rows.
/// Returns 1 when both labelings put everything in one cluster.
double adjusted_rand_index(const Labels& a, const Labels& b);

/// |a ∩ b| / |a ∪ b| over kit items; two empty kits give 1.
double jaccard(const Kit& a, const Kit& b);

}  // namespace kitopt
