// kitopt: command-line front end for the kit design pipelines.
//
// Exit codes: 0 success, 1 strict validation failure, 2 usage error,
// 3 I/O or numeric failure.

#include "kitopt/assignment.hpp"
#include "kitopt/error.hpp"
#include "kitopt/io.hpp"
#include "kitopt/kit_design.hpp"
#include "kitopt/kmeans.hpp"
#include "kitopt/model.hpp"
#include "kitopt/sign_clustering.hpp"
#include "kitopt/svd.hpp"
#include "kitopt/synthetic.hpp"
#include "kitopt/tables.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using namespace kitopt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStrict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr std::size_t kMinSweepK = 4;

struct Options {
    std::string catalog;
    std::string prefs;
    std::string out = ".";
    std::uint64_t seed = 0;
    std::size_t k_min = 4;
    std::size_t k_max = 15;
    std::size_t trials = 3;
    long rank = 4;
    double lambda = 0.3;
    std::size_t max_iters = 100;
    bool constrained_kits = false;
    bool strict = false;
    bool force = false;
    bool allow_small_k = false;
    std::size_t users = 200;
    std::size_t planted_kits = 8;
    std::size_t noise_swaps = 1;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class StrictFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Files are buffered and written together once every stage has succeeded.
class OutputSet {
public:
    void add(const std::string& name, std::string content) { files_[name] = std::move(content); }

    void commit(const fs::path& dir, bool force) const {
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw Error(ErrorCode::IoFailure, "cannot create '" + dir.string() + "'");
        if (!force) {
            for (const auto& [name, content] : files_)
                if (fs::exists(dir / name))
                    throw Error(ErrorCode::IoFailure, "'" + (dir / name).string() + "' exists; pass --force to overwrite");
        }
        for (const auto& [name, content] : files_) {
            std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
            f << content;
            if (!f) throw Error(ErrorCode::IoFailure, "failed writing '" + (dir / name).string() + "'");
        }
    }

private:
    std::map<std::string, std::string> files_;
};

struct Inputs {
    ItemCatalog catalog;
    PreferenceMatrix prefs;
    SelectionConstraint constraint;
    std::vector<Violation> violations;
};

Inputs load_inputs(const Options& o) {
    if (o.catalog.empty() || o.prefs.empty()) throw UsageError("--catalog and --prefs are required");
    auto catalog = load_catalog(o.catalog);
    auto prefs = load_preferences(o.prefs, catalog);
    SelectionConstraint c;
    auto violations = validate_constraint(prefs, catalog, c);
    if (!violations.empty()) {
        std::cerr << "kitopt: " << violations.size() << " row(s) break the selection quotas\n";
        if (o.strict) throw StrictFailure("strict validation failed");
    }
    return {std::move(catalog), std::move(prefs), c, std::move(violations)};
}

Eigen::Index checked_rank(const Options& o, const SvdFactors<double>& f) {
    if (o.rank < 1 || o.rank > f.rank_limit())
        throw UsageError("--rank must lie in [1, " + std::to_string(f.rank_limit()) + "]");
    return o.rank;
}

std::vector<std::string> item_labels(const ItemCatalog& catalog) {
    std::vector<std::string> ids;
    for (const auto& it : catalog.items()) ids.push_back(std::to_string(it.id));
    return ids;
}

int cmd_validate(const Options& o) {
    if (o.catalog.empty() || o.prefs.empty()) throw UsageError("--catalog and --prefs are required");
    const auto catalog = load_catalog(o.catalog);
    const auto prefs = load_preferences(o.prefs, catalog);
    const auto violations = validate_constraint(prefs, catalog, SelectionConstraint{});
    OutputSet out;
    out.add("violations.csv", violations_csv(prefs, violations));
    out.commit(o.out, o.force);
    std::cout << prefs.users() << " rows checked, " << violations.size() << " violation(s)\n";
    return violations.empty() || !o.strict ? kExitOk : kExitStrict;
}

int cmd_synth(const Options& o) {
    if (o.catalog.empty()) throw UsageError("--catalog is required");
    const auto catalog = load_catalog(o.catalog);
    const SelectionConstraint c;
    SyntheticSpec spec;
    spec.n_users = o.users;
    spec.noise_swaps = o.noise_swaps;
    spec.seed = derive_seed(o.seed, "synth");
    spec.planted_kits = random_kits(o.seed, o.planted_kits, catalog, c);
    const auto pop = generate_synthetic(spec, catalog, c);

    OutputSet out;
    std::ostringstream prefs, truth;
    write_preferences(prefs, pop.prefs, catalog);
    write_ground_truth(truth, pop.prefs.user_ids(), pop.planted);
    out.add("preferences.csv", prefs.str());
    out.add("ground_truth.csv", truth.str());
    out.add("planted_kits.csv", kits_csv(spec.planted_kits));
    out.commit(o.out, o.force);
    return kExitOk;
}

int cmd_kmeans_sweep(const Options& o) {
    const auto in = load_inputs(o);
    if (o.k_min < kMinSweepK && !o.allow_small_k)
        throw UsageError("--k-min below 4 needs --allow-small-k");
    if (o.k_min < 2 || o.k_min > o.k_max || o.k_max > in.prefs.users())
        throw UsageError("k range must satisfy 2 <= k-min <= k-max <= number of users");
    KMeansConfig cfg;
    cfg.lambda = o.lambda;
    cfg.max_iters = o.max_iters;
    cfg.k_limit = o.k_max;
    if (!(cfg.lambda > 0.0 && cfg.lambda <= 1.0)) throw UsageError("--lambda must lie in (0, 1]");
    if (cfg.max_iters < 1) throw UsageError("--max-iters must be positive");
    const auto table = sweep(in.prefs.data(), o.k_min, o.k_max, o.trials, cfg, o.seed);

    OutputSet out;
    out.add("silhouette_table.csv", sweep_table_csv(table));
    out.add("silhouette_plot.csv", sweep_plot_csv(table));
    out.commit(o.out, o.force);
    return kExitOk;
}

/// Stages of the sign-clustering route; each subcommand emits a subset.
struct SvdRoute {
    SvdFactors<double> factors;
    SignClustering users;
    SignClustering items;
    std::vector<Kit> kits;
    Assignment initial;
    Reassignment result;
};

SvdRoute run_svd_route(const Inputs& in, const Options& o) {
    SvdRoute route;
    route.factors = svd(in.prefs.data());
    const auto t = truncate(route.factors, checked_rank(o, route.factors));
    route.users = user_sign_clusters(t);
    route.items = item_sign_clusters(t);
    const auto members = route.users.member_lists();
    route.kits = design_all(in.prefs, members, in.catalog, in.constraint, o.constrained_kits);
    route.initial = assignment_from_clusters(members, route.kits, in.prefs.users());
    route.result = reassign(in.prefs, route.kits, route.initial);
    return route;
}

void add_scree(OutputSet& out, const SvdRoute& r) { out.add("scree.csv", scree_csv(r.factors)); }

void add_signs(OutputSet& out, const SvdRoute& r, const Inputs& in) {
    const auto p = r.factors.rank_limit();
    out.add("user_cluster_counts.csv", count_table_csv(cluster_count_table(r.factors, Axis::Users, 1, p)));
    out.add("item_cluster_counts.csv", count_table_csv(cluster_count_table(r.factors, Axis::Items, 1, p)));
    out.add("user_membership.csv", membership_csv(r.users, in.prefs.user_ids()));
    out.add("item_membership.csv", membership_csv(r.items, item_labels(in.catalog)));
}

void add_kits(OutputSet& out, const SvdRoute& r) {
    out.add("kits.csv", kits_csv(r.kits));
    out.add("kits.json", kits_json(r.kits));
}

void add_losses(OutputSet& out, const SvdRoute& r, const Inputs& in) {
    out.add("cluster_losses.csv", cluster_loss_csv(r.kits, r.result));
    out.add("user_losses.csv", user_loss_csv(in.prefs, r.kits, r.initial, r.result));
}

int cmd_svd(const Options& o) {
    const auto in = load_inputs(o);
    OutputSet out;
    out.add("scree.csv", scree_csv(svd(in.prefs.data())));
    out.commit(o.out, o.force);
    return kExitOk;
}

template <typename Emit>
int svd_command(const Options& o, Emit emit) {
    const auto in = load_inputs(o);
    const auto route = run_svd_route(in, o);
    OutputSet out;
    emit(out, route, in);
    out.commit(o.out, o.force);
    return kExitOk;
}

void add_common(CLI::App* sub, Options& o, bool needs_prefs = true) {
    sub->add_option("--catalog", o.catalog, "Item catalog CSV")->required();
    if (needs_prefs) sub->add_option("--prefs", o.prefs, "Preferences CSV")->required();
    sub->add_option("--out", o.out, "Output directory")->capture_default_str();
    sub->add_option("--seed", o.seed, "Base random seed")->capture_default_str();
    sub->add_flag("--force", o.force, "Overwrite existing output files");
    if (needs_prefs) sub->add_flag("--strict", o.strict, "Fail (exit 1) when rows break the selection quotas");
}

void add_svd_flags(CLI::App* sub, Options& o) {
    sub->add_option("--rank", o.rank, "Truncation rank r")->capture_default_str();
    sub->add_flag("--constrained-kits", o.constrained_kits, "Apply the category quotas when designing kits");
}

int run(int argc, char** argv) {
    CLI::App app{"Design food kits from binary preference surveys"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Check every row against the 6/4 selection quotas");
    add_common(validate, o);

    auto* synth = app.add_subcommand("synth", "Generate a planted-kit synthetic population");
    add_common(synth, o, false);
    synth->add_option("--users", o.users, "Number of users")->capture_default_str();
    synth->add_option("--planted-kits", o.planted_kits, "Number of planted kits")->capture_default_str();
    synth->add_option("--noise-swaps", o.noise_swaps, "Swaps per category per user")->capture_default_str();

    auto* km = app.add_subcommand("kmeans-sweep", "Silhouette sweep of damped k-means over k and trials");
    add_common(km, o);
    km->add_option("--k-min", o.k_min, "Smallest k")->capture_default_str();
    km->add_option("--k-max", o.k_max, "Largest k")->capture_default_str();
    km->add_option("--trials", o.trials, "Independent seeded runs per k")->capture_default_str()->check(
        CLI::PositiveNumber);
    km->add_option("--lambda", o.lambda, "Centroid damping in (0, 1]")->capture_default_str();
    km->add_option("--max-iters", o.max_iters, "Iteration cap per run")->capture_default_str();
    km->add_flag("--allow-small-k", o.allow_small_k, "Permit --k-min below 4");

    auto* svd_cmd = app.add_subcommand("svd", "Singular values (scree data)");
    add_common(svd_cmd, o);

    auto* signs = app.add_subcommand("cluster-signs", "Sign-pattern clusters of users and items");
    add_common(signs, o);
    add_svd_flags(signs, o);

    auto* design = app.add_subcommand("design-kits", "One kit per user sign cluster");
    add_common(design, o);
    add_svd_flags(design, o);

    auto* re = app.add_subcommand("reassign", "Move users to their lowest-loss kit and report losses");
    add_common(re, o);
    add_svd_flags(re, o);

    auto* pipeline = app.add_subcommand("pipeline", "Full SVD route: scree, sign clusters, kits, losses");
    add_common(pipeline, o);
    add_svd_flags(pipeline, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(o);
        if (*synth) return cmd_synth(o);
        if (*km) return cmd_kmeans_sweep(o);
        if (*svd_cmd) return cmd_svd(o);
        if (*signs) return svd_command(o, [](OutputSet& out, const SvdRoute& r, const Inputs& in) { add_signs(out, r, in); });
        if (*design) return svd_command(o, [](OutputSet& out, const SvdRoute& r, const Inputs&) { add_kits(out, r); });
        if (*re) return svd_command(o, [](OutputSet& out, const SvdRoute& r, const Inputs& in) { add_losses(out, r, in); });
        if (*pipeline)
            return svd_command(o, [](OutputSet& out, const SvdRoute& r, const Inputs& in) {
                add_scree(out, r);
                add_signs(out, r, in);
                add_kits(out, r);
                add_losses(out, r, in);
            });
    } catch (const UsageError& e) {
        std::cerr << "kitopt: " << e.what() << '\n';
        return kExitUsage;
    } catch (const StrictFailure& e) {
        std::cerr << "kitopt: " << e.what() << '\n';
        return kExitStrict;
    } catch (const Error& e) {
        std::cerr << "kitopt: " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::InvalidArgument:
            case ErrorCode::InvalidSpec:
            case ErrorCode::InvalidConstraint:
            case ErrorCode::RankOutOfRange:
                return kExitUsage;
            default:
                return kExitIo;
        }
    } catch (const std::exception& e) {
        std::cerr << "kitopt: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
