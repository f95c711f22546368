#include "kitopt/tables.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <sstream>

namespace kitopt {

std::string format_real(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

std::string violations_csv(const PreferenceMatrix& prefs, const std::vector<Violation>& violations) {
    std::ostringstream out;
    out << "row,user_id,expensive,cheap,total\n";
    for (const auto& v : violations)
        out << v.row << ',' << prefs.user_ids()[v.row] << ',' << v.expensive << ',' << v.cheap << ',' << v.total()
            << '\n';
    return out.str();
}

std::string scree_csv(const SvdFactors<double>& f) {
    std::ostringstream out;
    out << "rank,sigma\n";
    for (const auto& [r, s] : scree(f)) out << r << ',' << format_real(s) << '\n';
    return out.str();
}

std::string sweep_table_csv(const SweepTable& table) {
    std::ostringstream out;
    out << 'k';
    for (std::size_t t = 1; t <= table.trials; ++t) out << ",trial_" << t;
    out << '\n';
    for (std::size_t row = 0; row < table.rows.size(); ++row) {
        out << table.k_min + row;
        for (double v : table.rows[row]) out << ',' << format_real(v);
        out << '\n';
    }
    return out.str();
}

std::string sweep_plot_csv(const SweepTable& table) {
    std::ostringstream out;
    out << "k,trial,silhouette\n";
    for (std::size_t row = 0; row < table.rows.size(); ++row)
        for (std::size_t t = 0; t < table.rows[row].size(); ++t)
            out << table.k_min + row << ',' << t + 1 << ',' << format_real(table.rows[row][t]) << '\n';
    return out.str();
}

std::string count_table_csv(const std::vector<std::pair<Eigen::Index, std::size_t>>& counts) {
    std::ostringstream out;
    out << "r,count\n";
    for (const auto& [r, c] : counts) out << r << ',' << c << '\n';
    return out.str();
}

std::string membership_csv(const SignClustering& clustering, const std::vector<std::string>& element_ids) {
    std::ostringstream out;
    out << "element_id,cluster_id,pattern_bits\n";
    for (std::size_t e = 0; e < clustering.codes.size(); ++e)
        out << element_ids[e] << ',' << clustering.cluster_of[e] << ',' << clustering.pattern(e) << '\n';
    return out.str();
}

std::string kits_csv(const std::vector<Kit>& kits) {
    std::ostringstream out;
    out << "kit_id,item_id\n";
    for (const auto& kit : kits)
        for (auto q : kit.items) out << kit.id << ',' << q << '\n';
    return out.str();
}

std::string kits_json(const std::vector<Kit>& kits) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& kit : kits) doc[std::to_string(kit.id)] = kit.items;
    return doc.dump(2) + "\n";
}

std::string cluster_loss_csv(const std::vector<Kit>& kits, const Reassignment& result) {
    std::ostringstream out;
    out << "kit_id,population,normal_loss,exponential_loss,phase\n";
    const std::pair<const LossReport*, const char*> phases[] = {{&result.before, "before"}, {&result.after, "after"}};
    for (const auto& [report, phase] : phases) {
        const auto& c = report->clusters;
        for (std::size_t p = 0; p < kits.size(); ++p)
            out << kits[p].id << ',' << c.population[p] << ',' << format_real(c.normal[p]) << ','
                << format_real(c.exponential[p]) << ',' << phase << '\n';
    }
    return out.str();
}

std::string user_loss_csv(const PreferenceMatrix& prefs, const std::vector<Kit>& kits, const Assignment& initial,
                          const Reassignment& result) {
    std::ostringstream out;
    out << "user_id,kit_before,kit_after,loss_before,loss_after\n";
    for (std::size_t i = 0; i < prefs.users(); ++i)
        out << prefs.user_ids()[i] << ',' << kits[initial.kit[i]].id << ',' << kits[result.assignment.kit[i]].id << ','
            << result.before.per_user_loss[i] << ',' << result.after.per_user_loss[i] << '\n';
    return out.str();
}

}  // namespace kitopt
