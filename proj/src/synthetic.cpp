#include "kitopt/synthetic.hpp"

#include "kitopt/error.hpp"

#include <algorithm>
#include <cstdio>

namespace kitopt {
namespace {

void swap_within(Rng& rng, std::vector<std::size_t>& selected, const std::vector<std::size_t>& category_ids) {
    std::vector<std::size_t> in, out;
    for (auto q : category_ids) {
        if (std::binary_search(selected.begin(), selected.end(), q)) in.push_back(q);
        else out.push_back(q);
    }
    if (in.empty() || out.empty()) return;
    const auto drop = in[rng.uniform_below(in.size())];
    const auto add = out[rng.uniform_below(out.size())];
    selected.erase(std::find(selected.begin(), selected.end(), drop));
    selected.insert(std::upper_bound(selected.begin(), selected.end(), add), add);
}

}  // namespace

Kit random_kit(Rng& rng, std::size_t id, const ItemCatalog& catalog, const SelectionConstraint& c) {
    Kit kit{id, {}};
    for (auto cat : {Category::Expensive, Category::Cheap}) {
        auto ids = catalog.ids(cat);
        const auto quota = c.quota(cat);
        for (std::size_t i = 0; i < quota; ++i) {
            const auto j = i + static_cast<std::size_t>(rng.uniform_below(ids.size() - i));
            std::swap(ids[i], ids[j]);
            kit.items.push_back(ids[i]);
        }
    }
    std::sort(kit.items.begin(), kit.items.end());
    return kit;
}

std::vector<Kit> random_kits(std::uint64_t seed, std::size_t count, const ItemCatalog& catalog,
                             const SelectionConstraint& c) {
    c.check(catalog);
    Rng rng(derive_seed(seed, "planted"));
    std::vector<Kit> kits;
    // Bounded so an impossible request (more kits than distinct selections) fails instead of spinning.
    for (std::size_t attempts = 0; kits.size() < count; ++attempts) {
        if (attempts > 1000 * (count + 1)) throw Error(ErrorCode::InvalidSpec, "cannot draw that many distinct kits");
        auto kit = random_kit(rng, kits.size(), catalog, c);
        const bool dup = std::any_of(kits.begin(), kits.end(), [&](const Kit& k) { return k.items == kit.items; });
        if (!dup) kits.push_back(std::move(kit));
    }
    return kits;
}

SyntheticPopulation generate_synthetic(const SyntheticSpec& spec, const ItemCatalog& catalog,
                                       const SelectionConstraint& c) {
    c.check(catalog);
    if (spec.planted_kits.empty()) throw Error(ErrorCode::InvalidSpec, "no planted kits");
    if (spec.n_users == 0) throw Error(ErrorCode::InvalidSpec, "n_users must be positive");
    if (spec.noise_swaps > std::min(c.expensive_quota, c.cheap_quota))
        throw Error(ErrorCode::InvalidSpec, "noise_swaps exceeds the smaller category quota");
    for (const auto& kit : spec.planted_kits) check_kit(kit, catalog, c, true);

    const auto expensive_ids = catalog.ids(Category::Expensive);
    const auto cheap_ids = catalog.ids(Category::Cheap);
    const auto n = static_cast<Eigen::Index>(spec.n_users);
    const auto m = static_cast<Eigen::Index>(catalog.size());

    Rng rng(spec.seed);
    Eigen::MatrixXd data = Eigen::MatrixXd::Zero(n, m);
    std::vector<std::string> ids;
    std::vector<std::size_t> planted;
    ids.reserve(spec.n_users);
    planted.reserve(spec.n_users);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto which = static_cast<std::size_t>(rng.uniform_below(spec.planted_kits.size()));
        auto selected = spec.planted_kits[which].items;
        for (std::size_t s = 0; s < spec.noise_swaps; ++s) swap_within(rng, selected, expensive_ids);
        for (std::size_t s = 0; s < spec.noise_swaps; ++s) swap_within(rng, selected, cheap_ids);
        for (auto q : selected) data(i, static_cast<Eigen::Index>(q)) = 1.0;

        char name[32];
        std::snprintf(name, sizeof name, "u%04lld", static_cast<long long>(i));
        ids.emplace_back(name);
        planted.push_back(which);
    }
    return {PreferenceMatrix(std::move(ids), std::move(data)), std::move(planted)};
}

}  // namespace kitopt
