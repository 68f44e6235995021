#include "burnscan/accuracy.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace burnscan;

namespace {

PlaneU8 plane_of(int w, int h, std::initializer_list<int> bits) {
    PlaneU8 p(w, h);
    int i = 0;
    for (int b : bits) p.data[i++] = static_cast<std::uint8_t>(b);
    return p;
}

PlaneU8 random_mask(std::mt19937_64& gen, int w, int h) {
    PlaneU8 p(w, h);
    for (auto& x : p.data) x = gen() % 2;
    return p;
}

}  // namespace

TEST_CASE("confusion counts") {
    const PlaneU8 ones(10, 10, 1);
    PlaneU8 pred(10, 10, 1), ref(10, 10, 1);
    ConfusionMatrix m = confusion(pred, ref, ones);
    CHECK(m.true_burned_pred_burned == 100);
    CHECK(m.true_burned_pred_unburned == 0);
    CHECK(m.true_unburned_pred_burned == 0);
    CHECK(overall_accuracy(m) == 1.0);

    for (auto& x : pred.data) x = 0;  // full disagreement on burned truth
    m = confusion(pred, ref, ones);
    CHECK(m.true_burned_pred_burned == 0);
    CHECK(m.true_burned_pred_unburned == 100);
    CHECK(overall_accuracy(m) == 0.0);
}

TEST_CASE("hand-enumerated 3x3 case") {
    //  ref:  1 1 0        pred: 1 0 0
    //        0 1 0              0 1 1
    //        1 0 0              1 0 0
    const PlaneU8 ref = plane_of(3, 3, {1, 1, 0, 0, 1, 0, 1, 0, 0});
    const PlaneU8 pred = plane_of(3, 3, {1, 0, 0, 0, 1, 1, 1, 0, 0});
    const PlaneU8 region(3, 3, 1);
    const ConfusionMatrix m = confusion(pred, ref, region);
    CHECK(m.true_burned_pred_burned == 3);
    CHECK(m.true_burned_pred_unburned == 1);
    CHECK(m.true_unburned_pred_burned == 1);
    CHECK(m.true_unburned_pred_unburned == 4);
    CHECK(overall_accuracy(m) == doctest::Approx(7.0 / 9.0));

    // region restriction drops the last row
    const PlaneU8 top = plane_of(3, 3, {1, 1, 1, 1, 1, 1, 0, 0, 0});
    CHECK(confusion(pred, ref, top).total() == 6);

    PlaneU8 wrong(2, 2);
    CHECK_THROWS_AS(confusion(pred, ref, wrong), std::invalid_argument);
    CHECK_THROWS_AS(overall_accuracy(ConfusionMatrix{}), std::invalid_argument);
}

TEST_CASE("accuracy is invariant under simultaneous relabeling") {
    std::mt19937_64 gen(12);
    for (int rep = 0; rep < 20; ++rep) {
        const PlaneU8 pred = random_mask(gen, 8, 8);
        const PlaneU8 ref = random_mask(gen, 8, 8);
        const PlaneU8 region(8, 8, 1);
        PlaneU8 pred_inv = pred, ref_inv = ref;
        for (auto& x : pred_inv.data) x = 1 - x;
        for (auto& x : ref_inv.data) x = 1 - x;
        CHECK(overall_accuracy(confusion(pred, ref, region)) ==
              overall_accuracy(confusion(pred_inv, ref_inv, region)));
    }
}

TEST_CASE("confusion over a region partition sums cell-wise") {
    std::mt19937_64 gen(13);
    const PlaneU8 pred = random_mask(gen, 12, 12);
    const PlaneU8 ref = random_mask(gen, 12, 12);
    PlaneU8 region(12, 12, 1);
    PlaneU8 part_a(12, 12, 0), part_b(12, 12, 0);
    for (std::size_t i = 0; i < region.size(); ++i) {
        (gen() % 2 ? part_a : part_b).data[i] = 1;
    }
    ConfusionMatrix sum = confusion(pred, ref, part_a);
    sum += confusion(pred, ref, part_b);
    const ConfusionMatrix whole = confusion(pred, ref, region);
    CHECK(sum.true_burned_pred_burned == whole.true_burned_pred_burned);
    CHECK(sum.true_burned_pred_unburned == whole.true_burned_pred_unburned);
    CHECK(sum.true_unburned_pred_burned == whole.true_unburned_pred_burned);
    CHECK(sum.true_unburned_pred_unburned == whole.true_unburned_pred_unburned);
}

TEST_CASE("strata membership uses closed two-decimal percent intervals") {
    PlaneF32 miss(7, 1);
    miss.data = {0.51f, 0.48f, 0.40f, 0.50f, 0.53f, 0.4699f, 0.46996f};
    const QualityStrata s = stratify(miss, StrataBounds{});
    CHECK(s.poor.data[0] == 1);      // 51%
    CHECK(s.moderate.data[1] == 1);  // 48%
    CHECK(s.other.data[2] == 1);     // 40%
    CHECK(s.poor.data[3] == 1);      // boundary 50% inclusive
    CHECK(s.poor.data[4] == 1);      // boundary 53% inclusive
    CHECK(s.other.data[5] == 1);     // 46.99% misses the moderate band
    CHECK(s.moderate.data[6] == 1);  // rounds to 47.00%

    // the three masks partition every pixel
    for (std::size_t i = 0; i < miss.size(); ++i) {
        CHECK(s.poor.data[i] + s.moderate.data[i] + s.other.data[i] == 1);
    }
}

TEST_CASE("report rows and csv with an empty stratum") {
    const auto tmp = std::filesystem::temp_directory_path() / "burnscan_acc_test.csv";
    PlaneU8 pred(4, 1, 1), ref(4, 1, 1), region(4, 1, 1);
    pred.data[0] = 0;
    PlaneF32 miss(4, 1);
    miss.data = {0.51f, 0.51f, 0.48f, 0.48f};
    QualityStrata strata = stratify(miss, StrataBounds{});
    // force an empty poor stratum by region exclusion
    region.data[0] = region.data[1] = 0;

    const auto rows = accuracy_report(pred, ref, region, strata);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].stratum == "whole");
    CHECK(rows[0].n_pixels == 2);
    CHECK(rows[0].accuracy == 1.0);
    CHECK(rows[1].stratum == "poor");
    CHECK(rows[1].n_pixels == 0);
    CHECK_FALSE(rows[1].has_accuracy);
    CHECK(rows[2].stratum == "moderate");
    CHECK(rows[2].accuracy == 1.0);

    write_accuracy_csv(tmp.string(), rows);
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("poor,0,\n") != std::string::npos);
    CHECK(ss.str().find("moderate,2,1.000000\n") != std::string::npos);
    std::filesystem::remove(tmp);
}
