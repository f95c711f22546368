#include "kitopt/model.hpp"

#include "kitopt/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace kitopt {

std::string_view to_string(Category c) noexcept {
    return c == Category::Expensive ? "expensive" : "cheap";
}

Category parse_category(std::string_view label) {
    if (label == "expensive") return Category::Expensive;
    if (label == "cheap") return Category::Cheap;
    throw Error(ErrorCode::UnknownCategory, "unknown category label '" + std::string(label) + "'");
}

ItemCatalog::ItemCatalog(std::vector<Item> items) : items_(std::move(items)) {
    std::set<std::size_t> seen;
    for (const auto& it : items_)
        if (!seen.insert(it.id).second)
            throw Error(ErrorCode::DuplicateItemId, "duplicate item_id " + std::to_string(it.id));
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (items_[i].id != i) {
            throw Error(ErrorCode::MalformedRow,
                        "item ids must be 0..m-1 in order; found " + std::to_string(items_[i].id) +
                            " at position " + std::to_string(i));
        }
    }
    if (count(Category::Expensive) == 0 || count(Category::Cheap) == 0) {
        throw Error(ErrorCode::EmptyCategory, "both categories need at least one item");
    }
}

std::size_t ItemCatalog::count(Category c) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(items_.begin(), items_.end(), [c](const Item& it) { return it.category == c; }));
}

std::vector<std::size_t> ItemCatalog::ids(Category c) const {
    std::vector<std::size_t> out;
    for (const auto& it : items_)
        if (it.category == c) out.push_back(it.id);
    return out;
}

void SelectionConstraint::check(const ItemCatalog& catalog) const {
    if (expensive_quota + cheap_quota != total)
        throw Error(ErrorCode::InvalidConstraint, "quotas must sum to total");
    if (total > catalog.size())
        throw Error(ErrorCode::InvalidConstraint, "total exceeds catalog size");
    if (expensive_quota > catalog.count(Category::Expensive) || cheap_quota > catalog.count(Category::Cheap))
        throw Error(ErrorCode::InvalidConstraint, "quota exceeds the items available in its category");
}

PreferenceMatrix::PreferenceMatrix(std::vector<std::string> user_ids, Eigen::MatrixXd data)
    : user_ids_(std::move(user_ids)), data_(std::move(data)) {
    if (user_ids_.empty() || data_.rows() == 0) throw Error(ErrorCode::EmptyMatrix, "no users");
    if (static_cast<Eigen::Index>(user_ids_.size()) != data_.rows())
        throw Error(ErrorCode::WidthMismatch, "user id count does not match row count");
    if ((data_.array() != 0.0 && data_.array() != 1.0).any())
        throw Error(ErrorCode::NonBinaryEntry, "entries must be 0 or 1");
    std::unordered_set<std::string> seen;
    for (const auto& id : user_ids_)
        if (!seen.insert(id).second) throw Error(ErrorCode::DuplicateUserId, "duplicate user_id '" + id + "'");
}

bool Kit::contains(std::size_t item) const {
    return std::binary_search(items.begin(), items.end(), item);
}

Eigen::VectorXd Kit::indicator(std::size_t m) const {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
    for (auto q : items) v(static_cast<Eigen::Index>(q)) = 1.0;
    return v;
}

void check_kit(const Kit& kit, const ItemCatalog& catalog, const SelectionConstraint& c, bool by_category) {
    if (kit.items.size() != c.total)
        throw Error(ErrorCode::InvalidSpec, "kit " + std::to_string(kit.id) + " has " +
                                                std::to_string(kit.items.size()) + " items, expected " +
                                                std::to_string(c.total));
    std::set<std::size_t> unique(kit.items.begin(), kit.items.end());
    if (unique.size() != kit.items.size() || *unique.rbegin() >= catalog.size())
        throw Error(ErrorCode::InvalidSpec, "kit " + std::to_string(kit.id) + " has repeated or unknown items");
    if (!by_category) return;
    std::size_t expensive = 0;
    for (auto q : kit.items) expensive += catalog.category(q) == Category::Expensive;
    if (expensive != c.expensive_quota || kit.items.size() - expensive != c.cheap_quota)
        throw Error(ErrorCode::InvalidSpec, "kit " + std::to_string(kit.id) + " breaks the category quotas");
}

std::vector<Violation> validate_constraint(const PreferenceMatrix& prefs, const ItemCatalog& catalog,
                                           const SelectionConstraint& c) {
    if (prefs.items() != catalog.size())
        throw Error(ErrorCode::WidthMismatch, "preference width does not match catalog");
    Eigen::VectorXd expensive_mask(static_cast<Eigen::Index>(catalog.size()));
    for (std::size_t q = 0; q < catalog.size(); ++q)
        expensive_mask(static_cast<Eigen::Index>(q)) = catalog.category(q) == Category::Expensive ? 1.0 : 0.0;

    const Eigen::VectorXd expensive = prefs.data() * expensive_mask;
    const Eigen::VectorXd totals = prefs.data().rowwise().sum();
    std::vector<Violation> out;
    for (Eigen::Index i = 0; i < totals.size(); ++i) {
        const auto e = static_cast<std::size_t>(expensive(i));
        const auto ch = static_cast<std::size_t>(totals(i)) - e;
        if (e != c.expensive_quota || ch != c.cheap_quota)
            out.push_back({static_cast<std::size_t>(i), e, ch});
    }
    return out;
}

}  // namespace kitopt
