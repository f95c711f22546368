#pragma once

#include "kitopt/model.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace kitopt {

// Plain comma-separated files, LF line endings, no quoting. A trailing '\r'
// on a line is tolerated on input; output always uses LF.

/// Catalog CSV with header `item_id,name,category`.
ItemCatalog read_catalog(std::istream& in);
ItemCatalog load_catalog(const std::filesystem::path& path);
void write_catalog(std::ostream& out, const ItemCatalog& catalog);

/// Preferences CSV: header `user_id,<col>...` where each column label is the
/// catalog item name or its index; data cells strictly `0` or `1`.
PreferenceMatrix read_preferences(std::istream& in, const ItemCatalog& catalog);
PreferenceMatrix load_preferences(const std::filesystem::path& path, const ItemCatalog& catalog);
/// Writes item names as column labels.
void write_preferences(std::ostream& out, const PreferenceMatrix& prefs, const ItemCatalog& catalog);

/// Ground truth CSV `user_id,planted_kit`.
void write_ground_truth(std::ostream& out, const std::vector<std::string>& user_ids,
                        const std::vector<std::size_t>& planted);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace kitopt
