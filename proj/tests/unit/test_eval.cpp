#include "doctest.h"
#include "pae/error.hpp"
#include "pae/eval/ground_truth.hpp"
#include "pae/eval/metrics.hpp"
#include "pae/eval/scoring.hpp"
#include "support.hpp"

using namespace pae;
using namespace pae::eval;
using extract::AttributeKey;
using extract::AttributeSet;

namespace {

AttributeSet set_of(std::initializer_list<std::pair<AttributeKey, std::vector<std::string>>> kv, std::size_t page = 0) {
  AttributeSet s(extract::Source::Merged, page);
  for (const auto& [k, vs] : kv)
    for (const auto& v : vs) s.add(k, v);
  return s;
}

}  // namespace

TEST_SUITE("eval") {
  TEST_CASE("compare keys") {
    const auto hit = compare_key(set_of({{AttributeKey::Neck, {"V-Neck"}}}), set_of({{AttributeKey::Neck, {"V-Neck"}}}),
                                 AttributeKey::Neck);
    CHECK(hit == MetricCounts{1, 0, 0, 0});
    CHECK(compare_key(AttributeSet{}, AttributeSet{}, AttributeKey::Neck) == MetricCounts{0, 0, 0, 1});
    const auto feats = compare_key(set_of({{AttributeKey::Features, {"Cosy", "Soft Finish", "Boxy"}}}),
                                   set_of({{AttributeKey::Features, {"Cosy", "Soft Finish"}}}), AttributeKey::Features);
    CHECK(feats == MetricCounts{2, 1, 0, 0});
    const auto spurious =
        compare_key(set_of({{AttributeKey::Age, {"Adult", "Teen"}}}), AttributeSet{}, AttributeKey::Age);
    CHECK(spurious == MetricCounts{0, 2, 0, 0});
    CHECK(compare_page(AttributeSet{}, AttributeSet{}) == MetricCounts{0, 0, 0, 8});
  }

  TEST_CASE("metric arithmetic") {
    const MetricCounts c{3, 1, 1, 0};
    CHECK(*precision(c) == doctest::Approx(0.75));
    CHECK(*recall(c) == doctest::Approx(0.75));
    CHECK(*accuracy(c) == doctest::Approx(0.6));
    CHECK(*f1(c) == doctest::Approx(0.75));
    CHECK_FALSE(precision(MetricCounts{}));
    CHECK_FALSE(f1(MetricCounts{0, 1, 1, 0}));
    CHECK(format_percent(std::nullopt) == "n/a");
    CHECK(format_percent(0.75) == "75.0");
    CHECK(round_percent(0.96854) == doctest::Approx(96.9));
    CHECK(round_percent(0.9685) == doctest::Approx(96.9));
    CHECK(round_percent(0.96849) == doctest::Approx(96.8));
  }

  TEST_CASE("per attribute accuracy") {
    GroundTruth gt;
    gt[0] = set_of({{AttributeKey::Neck, {"V-Neck"}}, {AttributeKey::Age, {"Adult"}}});
    gt[1] = set_of({{AttributeKey::Neck, {"Crew Neck"}}}, 1);
    Predictions same = gt;
    for (const auto& [k, acc] : per_attribute_accuracy(same, gt)) CHECK(*acc == 1.0);

    Predictions no_neck = gt;
    no_neck[0].clear(AttributeKey::Neck);
    no_neck[1].clear(AttributeKey::Neck);
    const auto acc = per_attribute_accuracy(no_neck, gt);
    CHECK(*acc.at(AttributeKey::Neck) == 0.0);
    CHECK(*acc.at(AttributeKey::Age) == 1.0);
    CHECK(*acc.at(AttributeKey::Color) == 1.0);

    Predictions extra = gt;
    extra[7] = AttributeSet{};
    CHECK_THROWS_AS(per_attribute_accuracy(extra, gt), Error);
  }

  TEST_CASE("mixed three page table") {
    // Hand count per key over the three pages below.
    GroundTruth gt;
    gt[0] = set_of({{AttributeKey::Color, {"Olive", "Stone"}}, {AttributeKey::Neck, {"V-Neck"}}});
    gt[1] = set_of({{AttributeKey::Color, {"Ecru"}}, {AttributeKey::Age, {"Adult"}}}, 1);
    gt[2] = set_of({{AttributeKey::Material, {"Wool"}}}, 2);
    Predictions pred;
    pred[0] = set_of({{AttributeKey::Color, {"Olive"}}, {AttributeKey::Neck, {"Crew Neck"}}});
    pred[1] = set_of({{AttributeKey::Color, {"Ecru", "Red"}}, {AttributeKey::Age, {"Adult"}}}, 1);
    pred[2] = set_of({{AttributeKey::Material, {"Wool"}}, {AttributeKey::Features, {"Cosy"}}}, 2);
    // Color: tp 2 fp 1 fn 1 tn 1; Neck: fp 1 fn 1 tn 2; Age: tp 1 tn 2;
    // Material: tp 1 tn 2; Features: fp 1 tn 2; the other three keys: tn 3 each.
    const auto acc = per_attribute_accuracy(pred, gt);
    CHECK(*acc.at(AttributeKey::Color) == doctest::Approx(3.0 / 5.0));
    CHECK(*acc.at(AttributeKey::Neck) == doctest::Approx(2.0 / 4.0));
    CHECK(*acc.at(AttributeKey::Age) == 1.0);
    CHECK(*acc.at(AttributeKey::Material) == 1.0);
    CHECK(*acc.at(AttributeKey::Features) == doctest::Approx(2.0 / 3.0));
    CHECK(*acc.at(AttributeKey::SleeveStyle) == 1.0);
    const auto r = score(pred, gt);
    CHECK(r.counts == MetricCounts{4, 3, 2, 18});
    CHECK(*r.precision == doctest::Approx(4.0 / 7.0));
    CHECK(*r.recall == doctest::Approx(4.0 / 6.0));
  }

  TEST_CASE("ground truth files") {
    const auto gt = parse_ground_truth(
        R"({"pages": {"0": {"Neck": ["vneck"], "Age Group": "adult", "Color": "Not Mentioned"}, "2": {}}})");
    REQUIRE(gt.size() == 2);
    CHECK(gt.at(0).values(AttributeKey::Neck) == std::vector<std::string>{"V-Neck"});
    CHECK(gt.at(0).values(AttributeKey::Age) == std::vector<std::string>{"Adult"});
    CHECK_FALSE(gt.at(0).mentioned(AttributeKey::Color));
    CHECK(gt.at(2).all_sentinel());
    CHECK_THROWS_AS(parse_ground_truth(R"({"pages": {"x": {}}})"), Error);
    CHECK_THROWS_AS(parse_ground_truth(R"({"pages": {"0": {"Fabric": "Wool"}}})"), Error);
    CHECK_THROWS_AS(parse_ground_truth("not json"), Error);
    CHECK(load_ground_truth(testing::fixture("ground_truth.json")).size() == 4);
  }

  TEST_CASE("aggregate") {
    const auto one = aggregate_report({{"a", 0.9, std::nullopt}});
    CHECK(one.rows.size() == 1);
    CHECK(*one.average.text_f1 == doctest::Approx(0.9));
    CHECK_FALSE(one.average.image_f1);
    const auto two = aggregate_report({{"a", 0.9, 0.5}, {"b", 1.0, std::nullopt}});
    CHECK(*two.average.text_f1 == doctest::Approx(0.95));
    CHECK(*two.average.image_f1 == doctest::Approx(0.5));
    CHECK_THROWS_AS(aggregate_report({}), Error);
    CHECK(format_dataset_table(two).find("n/a") != std::string::npos);
  }
}
