#include "helpers.hpp"
#include "kitopt/tables.hpp"

#include <json.hpp>
#include <doctest.h>

using namespace kitopt;

TEST_CASE("CSV and JSON renderings") {
    SUBCASE("reals round-trip") {
        CHECK(format_real(0.5) == "0.5");
        CHECK(format_real(2.0) == "2");
        CHECK(std::stod(format_real(0.1612425)) == 0.1612425);
    }
    SUBCASE("scree") {
        SvdFactors<double> f;
        f.sigma = Eigen::Vector3d(5, 1, 0);
        CHECK(scree_csv(f) == "rank,sigma\n1,5\n2,1\n3,0\n");
    }
    SUBCASE("sweep table and plot data") {
        SweepTable t{4, 2, {{0.25, 0.5}, {-0.125, 1}}};
        CHECK(sweep_table_csv(t) == "k,trial_1,trial_2\n4,0.25,0.5\n5,-0.125,1\n");
        CHECK(sweep_plot_csv(t) == "k,trial,silhouette\n4,1,0.25\n4,2,0.5\n5,1,-0.125\n5,2,1\n");
    }
    SUBCASE("cluster counts and membership") {
        CHECK(count_table_csv({{1, 1}, {2, 2}}) == "r,count\n1,1\n2,2\n");
        TruncatedSvd<double> t{2, Eigen::MatrixXd(2, 2), Eigen::Vector2d(1, 1), Eigen::MatrixXd::Identity(2, 2)};
        t.u << 1, -1, 1, 1;
        CHECK(membership_csv(user_sign_clusters(t), {"a", "b"}) ==
              "element_id,cluster_id,pattern_bits\na,0,10\nb,1,11\n");
    }
    SUBCASE("kits") {
        const std::vector<Kit> kits{{0, {1, 3}}, {4, {0, 2}}};
        CHECK(kits_csv(kits) == "kit_id,item_id\n0,1\n0,3\n4,0\n4,2\n");
        const auto doc = nlohmann::json::parse(kits_json(kits));
        CHECK(doc["4"] == nlohmann::json::array({0, 2}));
        CHECK(doc.size() == 2);
    }
    SUBCASE("losses") {
        const auto prefs = testutil::make_prefs((Eigen::MatrixXd(2, 3) << 1, 1, 0, 0, 1, 1).finished());
        const std::vector<Kit> kits{{0, {0, 1}}, {1, {1, 2}}};
        const Assignment initial{{0, 0}, Assignment::Provenance::Initial};
        const auto r = reassign(prefs, kits, initial);
        CHECK(cluster_loss_csv(kits, r) ==
              "kit_id,population,normal_loss,exponential_loss,phase\n"
              "0,2,1," + format_real((1.0 + std::exp(2.0)) / 2.0) + ",before\n"
              "1,0,0,0,before\n"
              "0,1,0,1,after\n"
              "1,1,0,1,after\n");
        CHECK(user_loss_csv(prefs, kits, initial, r) ==
              "user_id,kit_before,kit_after,loss_before,loss_after\nu0,0,0,0,0\nu1,0,1,2,0\n");
    }
    SUBCASE("violations") {
        const auto prefs = testutil::make_prefs(Eigen::MatrixXd::Ones(2, 3));
        CHECK(violations_csv(prefs, {{1, 2, 1}}) == "row,user_id,expensive,cheap,total\n1,u1,2,1,3\n");
    }
}
