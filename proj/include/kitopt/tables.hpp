#pragma once

#include "kitopt/assignment.hpp"
#include "kitopt/kmeans.hpp"
#include "kitopt/model.hpp"
#include "kitopt/sign_clustering.hpp"
#include "kitopt/svd.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kitopt {

// Text renderings of every output file. All CSVs have a header line and LF
// endings; reals use the shortest representation that round-trips.

std::string format_real(double x);

std::string violations_csv(const PreferenceMatrix& prefs, const std::vector<Violation>& violations);
std::string scree_csv(const SvdFactors<double>& f);
std::string sweep_table_csv(const SweepTable& table);
std::string sweep_plot_csv(const SweepTable& table);
std::string count_table_csv(const std::vector<std::pair<Eigen::Index, std::size_t>>& counts);
/// `element_ids` names the users (or items) in matrix order.
std::string membership_csv(const SignClustering& clustering, const std::vector<std::string>& element_ids);
std::string kits_csv(const std::vector<Kit>& kits);
/// {"<kit_id>": [item_id, ...], ...} in kit order.
std::string kits_json(const std::vector<Kit>& kits);
std::string cluster_loss_csv(const std::vector<Kit>& kits, const Reassignment& result);
std::string user_loss_csv(const PreferenceMatrix& prefs, const std::vector<Kit>& kits, const Assignment& initial,
                          const Reassignment& result);

}  // namespace kitopt
