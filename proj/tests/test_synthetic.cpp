#include "helpers.hpp"
#include "kitopt/error.hpp"
#include "kitopt/synthetic.hpp"

#include <doctest.h>

#include <set>

using namespace kitopt;

namespace {

/// Every row reachable from `kit` by one expensive swap then one cheap swap.
std::set<std::vector<std::size_t>> one_swap_outcomes(const Kit& kit, const ItemCatalog& catalog) {
    std::set<std::vector<std::size_t>> out;
    const auto exp_ids = catalog.ids(Category::Expensive);
    const auto cheap_ids = catalog.ids(Category::Cheap);
    for (auto de : kit.items) {
        if (catalog.category(de) != Category::Expensive) continue;
        for (auto ae : exp_ids) {
            if (kit.contains(ae)) continue;
            for (auto dc : kit.items) {
                if (catalog.category(dc) != Category::Cheap) continue;
                for (auto ac : cheap_ids) {
                    if (kit.contains(ac)) continue;
                    std::set<std::size_t> s(kit.items.begin(), kit.items.end());
                    s.erase(de);
                    s.erase(dc);
                    s.insert(ae);
                    s.insert(ac);
                    out.insert({s.begin(), s.end()});
                }
            }
        }
    }
    return out;
}

std::vector<std::size_t> selected(const PreferenceMatrix& p, std::size_t i) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < p.items(); ++q)
        if (p.data()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(q)) != 0.0) out.push_back(q);
    return out;
}

}  // namespace

TEST_CASE("random kits respect the quotas and are distinct") {
    const auto catalog = testutil::make_catalog();
    const SelectionConstraint c;
    const auto kits = random_kits(5, 8, catalog, c);
    REQUIRE(kits.size() == 8);
    for (std::size_t j = 0; j < kits.size(); ++j) {
        CHECK(kits[j].id == j);
        CHECK_NOTHROW(check_kit(kits[j], catalog, c, true));
        for (std::size_t l = 0; l < j; ++l) CHECK(kits[j].items != kits[l].items);
    }
    CHECK(random_kits(5, 8, catalog, c) == kits);
}

TEST_CASE("noise-free users copy their planted kit") {
    const auto catalog = testutil::make_catalog();
    const SelectionConstraint c;
    SyntheticSpec spec{120, random_kits(1, 5, catalog, c), 0, 99};
    const auto pop = generate_synthetic(spec, catalog, c);
    for (std::size_t i = 0; i < pop.prefs.users(); ++i)
        CHECK(selected(pop.prefs, i) == spec.planted_kits[pop.planted[i]].items);
    CHECK(validate_constraint(pop.prefs, catalog, c).empty());
}

TEST_CASE("one swap per category lands at Hamming distance 4") {
    const auto catalog = testutil::make_catalog();
    const SelectionConstraint c;
    SyntheticSpec spec{200, random_kits(2, 8, catalog, c), 1, 7};

    // Enumerate all outcomes: 6*4 expensive choices times 4*6 cheap choices,
    // each at distance exactly 4 from the kit.
    std::vector<std::set<std::vector<std::size_t>>> reachable;
    for (const auto& kit : spec.planted_kits) {
        auto outcomes = one_swap_outcomes(kit, catalog);
        CHECK(outcomes.size() == 24 * 24);
        for (const auto& row : outcomes) {
            Kit k{0, row};
            std::size_t hamming = 0;
            for (std::size_t q = 0; q < 20; ++q) hamming += k.contains(q) != kit.contains(q);
            CHECK(hamming == 4);
        }
        reachable.push_back(std::move(outcomes));
    }

    const auto pop = generate_synthetic(spec, catalog, c);
    CHECK(validate_constraint(pop.prefs, catalog, c).empty());
    for (std::size_t i = 0; i < pop.prefs.users(); ++i) {
        const auto row = selected(pop.prefs, i);
        CHECK(reachable[pop.planted[i]].count(row) == 1);
        const Kit& kit = spec.planted_kits[pop.planted[i]];
        std::size_t hamming = 0;
        for (std::size_t q = 0; q < 20; ++q) hamming += (pop.prefs.data()(static_cast<Eigen::Index>(i),
                                                                            static_cast<Eigen::Index>(q)) != 0) !=
                                                         kit.contains(q);
        CHECK(hamming == 4);
    }
}

TEST_CASE("synthetic generation is deterministic per seed") {
    const auto catalog = testutil::make_catalog();
    const SelectionConstraint c;
    SyntheticSpec spec{150, random_kits(3, 6, catalog, c), 2, 1234};
    const auto a = generate_synthetic(spec, catalog, c);
    const auto b = generate_synthetic(spec, catalog, c);
    CHECK(a.prefs.data() == b.prefs.data());
    CHECK(a.planted == b.planted);
    CHECK(a.prefs.user_ids() == b.prefs.user_ids());
    spec.seed = 1235;
    CHECK(generate_synthetic(spec, catalog, c).prefs.data() != a.prefs.data());
}

TEST_CASE("swap is skipped when a category has no alternative") {
    // Two cheap items, quota 2: no unselected cheap item exists.
    const auto catalog = testutil::make_catalog(4, 2);
    const SelectionConstraint c{4, 2, 2};
    SyntheticSpec spec{50, {Kit{0, {0, 1, 4, 5}}}, 1, 3};
    const auto pop = generate_synthetic(spec, catalog, c);
    for (std::size_t i = 0; i < pop.prefs.users(); ++i) {
        const auto row = selected(pop.prefs, i);
        CHECK(std::count(row.begin(), row.end(), 4) == 1);
        CHECK(std::count(row.begin(), row.end(), 5) == 1);
    }
}

TEST_CASE("invalid synthetic specs are rejected") {
    const auto catalog = testutil::make_catalog();
    const SelectionConstraint c;
    SyntheticSpec bad_kit{10, {Kit{0, {0, 1, 2, 3, 4, 5, 6, 10, 11, 12}}}, 0, 1};
    CHECK_THROWS_AS(generate_synthetic(bad_kit, catalog, c), Error);
    SyntheticSpec too_noisy{10, random_kits(1, 2, catalog, c), 5, 1};
    CHECK_THROWS_AS(generate_synthetic(too_noisy, catalog, c), Error);
    SyntheticSpec no_kits{10, {}, 0, 1};
    CHECK_THROWS_AS(generate_synthetic(no_kits, catalog, c), Error);
}
