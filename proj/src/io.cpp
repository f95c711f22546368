#include "kitopt/io.hpp"

#include "kitopt/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace kitopt {
namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MissingFile, "cannot open '" + path.string() + "'");
    return in;
}

bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return true;
    }
    return false;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no); }

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

ItemCatalog read_catalog(std::istream& in) {
    std::string line;
    if (!next_line(in, line) || line != "item_id,name,category")
        throw Error(ErrorCode::HeaderMismatch, "catalog header must be 'item_id,name,category'");

    std::vector<Item> items;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) throw Error(ErrorCode::MalformedRow, where(line_no) + ": expected 3 fields");
        std::size_t id = 0;
        const auto& f = fields[0];
        auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), id);
        if (ec != std::errc() || ptr != f.data() + f.size() || f.empty())
            throw Error(ErrorCode::MalformedRow, where(line_no) + ": item_id '" + f + "' is not an index");
        if (fields[1].empty()) throw Error(ErrorCode::MalformedRow, where(line_no) + ": empty name");
        items.push_back({id, fields[1], parse_category(fields[2])});
    }
    if (items.empty()) throw Error(ErrorCode::EmptyCategory, "catalog has no items");
    return ItemCatalog(std::move(items));
}

ItemCatalog load_catalog(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_catalog(in);
}

void write_catalog(std::ostream& out, const ItemCatalog& catalog) {
    out << "item_id,name,category\n";
    for (const auto& it : catalog.items()) out << it.id << ',' << it.name << ',' << to_string(it.category) << '\n';
}

PreferenceMatrix read_preferences(std::istream& in, const ItemCatalog& catalog) {
    const std::size_t m = catalog.size();
    std::string line;
    if (!next_line(in, line)) throw Error(ErrorCode::EmptyMatrix, "preferences file is empty");
    const auto header = split_csv_line(line);
    if (header.empty() || header[0] != "user_id")
        throw Error(ErrorCode::HeaderMismatch, "preferences header must start with 'user_id'");
    if (header.size() != m + 1)
        throw Error(ErrorCode::WidthMismatch, "header has " + std::to_string(header.size() - 1) +
                                                  " item columns, catalog has " + std::to_string(m));
    for (std::size_t q = 0; q < m; ++q) {
        const auto& label = header[q + 1];
        if (label != catalog[q].name && label != std::to_string(q))
            throw Error(ErrorCode::HeaderMismatch, "column " + std::to_string(q + 1) + " label '" + label +
                                                       "' matches neither item name nor index");
    }

    std::vector<std::string> ids;
    std::vector<double> cells;
    std::size_t line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        const auto fields = split_csv_line(line);
        if (fields.size() != m + 1)
            throw Error(ErrorCode::WidthMismatch, where(line_no) + ": expected " + std::to_string(m + 1) + " fields");
        ids.push_back(fields[0]);
        for (std::size_t q = 1; q <= m; ++q) {
            if (fields[q] == "0") cells.push_back(0.0);
            else if (fields[q] == "1") cells.push_back(1.0);
            else throw Error(ErrorCode::NonBinaryEntry, where(line_no) + ": token '" + fields[q] + "'");
        }
    }
    if (ids.empty()) throw Error(ErrorCode::EmptyMatrix, "no data rows");

    const auto n = static_cast<Eigen::Index>(ids.size());
    Eigen::MatrixXd data =
        Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(cells.data(), n,
                                                                                        static_cast<Eigen::Index>(m));
    return PreferenceMatrix(std::move(ids), std::move(data));
}

PreferenceMatrix load_preferences(const std::filesystem::path& path, const ItemCatalog& catalog) {
    auto in = open_input(path);
    return read_preferences(in, catalog);
}

void write_preferences(std::ostream& out, const PreferenceMatrix& prefs, const ItemCatalog& catalog) {
    out << "user_id";
    for (const auto& it : catalog.items()) out << ',' << it.name;
    out << '\n';
    const auto& a = prefs.data();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        out << prefs.user_ids()[static_cast<std::size_t>(i)];
        for (Eigen::Index q = 0; q < a.cols(); ++q) out << (a(i, q) != 0.0 ? ",1" : ",0");
        out << '\n';
    }
}

void write_ground_truth(std::ostream& out, const std::vector<std::string>& user_ids,
                        const std::vector<std::size_t>& planted) {
    out << "user_id,planted_kit\n";
    for (std::size_t i = 0; i < user_ids.size(); ++i) out << user_ids[i] << ',' << planted[i] << '\n';
}

}  // namespace kitopt
