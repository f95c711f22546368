#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kitopt {

enum class Category { Expensive, Cheap };

std::string_view to_string(Category c) noexcept;
/// Throws Error(UnknownCategory) for anything but "expensive" / "cheap".
Category parse_category(std::string_view label);

struct Item {
    std::size_t id = 0;
    std::string name;
    Category category = Category::Expensive;
};

/// Ordered item list. Ids are exactly 0..m-1 in order and both categories
/// are non-empty; the constructor enforces this.
class ItemCatalog {
public:
    explicit ItemCatalog(std::vector<Item> items);

    std::size_t size() const noexcept { return items_.size(); }
    const Item& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Item>& items() const noexcept { return items_; }

    Category category(std::size_t i) const { return items_[i].category; }
    std::size_t count(Category c) const noexcept;
    /// Item ids of one category, ascending.
    std::vector<std::size_t> ids(Category c) const;

private:
    std::vector<Item> items_;
};

/// Survey rule: each respondent selects `total` items, `expensive_quota` of
/// them expensive and `cheap_quota` cheap.
struct SelectionConstraint {
    std::size_t total = 10;
    std::size_t expensive_quota = 6;
    std::size_t cheap_quota = 4;

    std::size_t quota(Category c) const noexcept {
        return c == Category::Expensive ? expensive_quota : cheap_quota;
    }
    /// Throws Error(InvalidConstraint) unless quotas sum to total, total <= m
    /// and each quota fits in its category.
    void check(const ItemCatalog& catalog) const;
};

/// n x m binary selection matrix with one row per user.
class PreferenceMatrix {
public:
    PreferenceMatrix(std::vector<std::string> user_ids, Eigen::MatrixXd data);

    std::size_t users() const noexcept { return user_ids_.size(); }
    std::size_t items() const noexcept { return static_cast<std::size_t>(data_.cols()); }
    const std::vector<std::string>& user_ids() const noexcept { return user_ids_; }
    const Eigen::MatrixXd& data() const noexcept { return data_; }
    auto row(std::size_t i) const { return data_.row(static_cast<Eigen::Index>(i)); }

private:
    std::vector<std::string> user_ids_;
    Eigen::MatrixXd data_;
};

/// A fixed-size set of items. `items` is kept sorted ascending.
struct Kit {
    std::size_t id = 0;
    std::vector<std::size_t> items;

    bool contains(std::size_t item) const;
    Eigen::VectorXd indicator(std::size_t m) const;
    friend bool operator==(const Kit&, const Kit&) = default;
};

/// Throws Error(InvalidSpec) when the kit has the wrong size, repeats or
/// out-of-range ids, or (when `by_category`) breaks the category quotas.
void check_kit(const Kit& kit, const ItemCatalog& catalog, const SelectionConstraint& c,
               bool by_category);

struct Violation {
    std::size_t row = 0;
    std::size_t expensive = 0;
    std::size_t cheap = 0;
    std::size_t total() const noexcept { return expensive + cheap; }
};

/// One entry per row whose selections do not match the quotas. Dirty rows are
/// data here, not errors; only a dimension mismatch throws.
std::vector<Violation> validate_constraint(const PreferenceMatrix& prefs, const ItemCatalog& catalog,
                                           const SelectionConstraint& c);

}  // namespace kitopt
