#pragma once

#include "kitopt/model.hpp"
#include "kitopt/rng.hpp"

#include <cstdint>
#include <vector>

namespace kitopt {

/// Planted-partition population used as ground truth in tests and by `synth`.
struct SyntheticSpec {
    std::size_t n_users = 200;
    std::vector<Kit> planted_kits;
    std::size_t noise_swaps = 0;
    std::uint64_t seed = 0;
};

struct SyntheticPopulation {
    PreferenceMatrix prefs;
    std::vector<std::size_t> planted;  ///< planted kit index per user
};

/// Draws a constraint-valid kit: `expensive_quota` expensive items then
/// `cheap_quota` cheap items, each chosen by a partial Fisher-Yates shuffle of
/// the category's ids.
Kit random_kit(Rng& rng, std::size_t id, const ItemCatalog& catalog, const SelectionConstraint& c);

/// `count` pairwise-distinct random kits drawn from derive_seed(seed, "planted").
std::vector<Kit> random_kits(std::uint64_t seed, std::size_t count, const ItemCatalog& catalog,
                             const SelectionConstraint& c);

/// Users are named u0000, u0001, ...; per user the generator draws, in order:
/// the planted kit (uniform), then `noise_swaps` expensive swaps, then
/// `noise_swaps` cheap swaps. A swap replaces a uniformly chosen selected item
/// with a uniformly chosen unselected item of the same category (skipped when
/// the category has no unselected item).
SyntheticPopulation generate_synthetic(const SyntheticSpec& spec, const ItemCatalog& catalog,
                                       const SelectionConstraint& c);

}  // namespace kitopt
